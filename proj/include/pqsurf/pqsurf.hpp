#pragma once

#include <pqsurf/catalog.hpp>
#include <pqsurf/character_table.hpp>
#include <pqsurf/covering.hpp>
#include <pqsurf/description.hpp>
#include <pqsurf/jacobian.hpp>
#include <pqsurf/lattice.hpp>
#include <pqsurf/report.hpp>
#include <pqsurf/surface.hpp>
#include <pqsurf/tables.hpp>
