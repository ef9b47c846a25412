#pragma once

#include <pqsurf/description.hpp>
#include <pqsurf/lattice.hpp>
#include <pqsurf/surface.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace pqsurf {

inline constexpr std::string_view kVersion = "0.1.0";

using Json = nlohmann::ordered_json;

struct CurveResult {
  GeneratingVector vector;
  bool searched = false;
  std::size_t candidates = 0;  // vectors found by search, up to conjugation
};

struct SupergroupResult {
  Group group;
  CharacterTable table;
  std::vector<RationalCharacter> rational;
  CurveResult curve;
  std::vector<IsotypicalFactor> factors;
};

struct Analysis {
  SurfaceDescription input;
  Group group;
  CharacterTable table;
  std::vector<RationalCharacter> rational;
  CurveResult curve1, curve2;
  SurfaceReport report;
  std::optional<SupergroupResult> supergroup;
};

/// validate -> genus -> characters -> isotypical dims -> singularities ->
/// invariants -> pairing. Search directives take the first pair, in search
/// order, with p_g = q = 2, falling back to the first pair overall.
inline Analysis analyze(const SurfaceDescription& d) {
  Analysis a;
  a.input = d;
  a.group = resolve_group(d);
  a.table = character_table(a.group);
  a.rational = rational_characters(a.table);

  auto candidates = [](const Group& G, const CurveSpec& c, CurveResult& out) {
    std::vector<GeneratingVector> list;
    if (c.is_search()) {
      list = search_generating_vectors(G, c.g0, *c.search);
      out.searched = true;
      out.candidates = list.size();
      if (list.empty()) throw Error(ErrorKind::NoWitness, "no generating vector of the requested signature");
    } else {
      list.push_back(explicit_vector(G, c));
      validate(list.front());
    }
    return list;
  };
  const auto list1 = candidates(a.group, d.curve1, a.curve1);
  const auto list2 = candidates(a.group, d.curve2, a.curve2);

  std::optional<std::pair<std::size_t, std::size_t>> pick;
  for (std::size_t i = 0; i < list1.size() && !pick; ++i) {
    const auto h1 = holomorphic_character(list1[i], a.table);
    for (std::size_t j = 0; j < list2.size() && !pick; ++j)
      if (d.curve1.g0 + d.curve2.g0 == 2 && detail::invariant_rank(h1, holomorphic_character(list2[j], a.table)) == 2)
        pick = {i, j};
  }
  const auto [i, j] = pick.value_or(std::pair<std::size_t, std::size_t>{0, 0});
  a.curve1.vector = list1[i];
  a.curve2.vector = list2[j];
  a.report = invariants(a.curve1.vector, a.curve2.vector, a.table, a.rational);

  if (d.supergroup) {
    // a search directive takes the first vector found
    SupergroupResult s;
    s.group = resolve_group(d.supergroup->group_name, d.supergroup->generators);
    s.table = character_table(s.group);
    s.rational = rational_characters(s.table);
    s.curve.vector = candidates(s.group, d.supergroup->curve, s.curve).front();
    s.factors = isotypical_dimensions(s.curve.vector, s.table, s.rational);
    a.supergroup = std::move(s);
  }
  return a;
}

namespace detail {

inline Json rational_json(const Rational& q) {
  return Json{{"num", to_int64(numerator(q))}, {"den", to_int64(denominator(q))}};
}

// Exponent -> multiplicity map of a value given as an eigenvalue multiset.
inline Json cyclotomic_json(const Cyclotomic& c) {
  Json out = Json::object();
  for (std::size_t k = 0; k < c.coefficients().size(); ++k)
    if (c.coefficients()[k] != 0) out[std::to_string(k)] = to_int64(c.coefficients()[k]);
  return out;
}

inline Json factor_json(const IsotypicalFactor& f, const std::vector<RationalCharacter>& rational) {
  return Json{{"rational_character", f.rational_char_index},
              {"constituent", f.constituent},
              {"inner", rational_json(f.inner)},
              {"d", f.reduced_dim},
              {"n", f.multiplicity},
              {"m", f.schur_index},
              {"quaternionic", f.quaternionic},
              {"schur_index_unverified", rational[f.rational_char_index].schur_index_unverified}};
}

inline Json curve_json(const CurveResult& c, const std::vector<RationalCharacter>& rational,
                       const std::vector<IsotypicalFactor>& factors, const std::vector<std::int64_t>& cw) {
  const auto& gv = c.vector;
  const Group& G = gv.group;
  Json handles = Json::array();
  for (const auto& [a, b] : gv.handles) handles.push_back({G.element(a).to_cycles(), G.element(b).to_cycles()});
  Json monodromies = Json::array();
  for (auto m : gv.monodromies) monodromies.push_back(G.element(m).to_cycles());
  Json chi_v = Json::array();
  for (const auto& v : hurwitz_character(gv).integer_values()) chi_v.push_back(to_int64(v));
  Json fs = Json::array();
  for (const auto& f : factors) fs.push_back(factor_json(f, rational));
  Json out{{"g0", gv.g0}, {"genus", genus(gv)}, {"searched", c.searched}};
  if (c.searched) out["candidates"] = c.candidates;
  out["handles"] = handles;
  out["monodromies"] = monodromies;
  out["orders"] = gv.orders;
  out["hurwitz_character"] = chi_v;
  out["chevalley_weil"] = cw;
  out["factors"] = fs;
  out["label"] = gv.g0 == 1 ? Json(decomposition_label(gv, factors)) : Json(nullptr);
  return out;
}

inline Json input_json(const SurfaceDescription& d) {
  auto curve = [](const CurveSpec& c) {
    Json j{{"g0", c.g0}};
    if (c.is_search()) {
      j["search"] = *c.search;
    } else {
      j["handles"] = c.handles;
      j["monodromies"] = c.monodromies;
      if (c.orders) j["orders"] = *c.orders;
    }
    return j;
  };
  Json group = Json::object();
  if (!d.group_name.empty()) group["name"] = d.group_name;
  if (!d.generators.empty()) group["generators"] = d.generators;
  Json out{{"group", group}, {"curve1", curve(d.curve1)}, {"curve2", curve(d.curve2)}};
  if (d.supergroup) {
    Json sg = curve(d.supergroup->curve);
    if (!d.supergroup->group_name.empty()) sg["name"] = d.supergroup->group_name;
    if (!d.supergroup->generators.empty()) sg["generators"] = d.supergroup->generators;
    out["supergroup"] = sg;
  }
  return out;
}

}  // namespace detail

inline Json report_json(const Analysis& a) {
  const Group& G = a.group;
  const auto& r = a.report;
  Json out;
  out["tool"] = {{"name", "pqsurf"}, {"version", kVersion}};
  out["input"] = detail::input_json(a.input);

  Json classes = Json::array();
  for (const auto& c : G.classes())
    classes.push_back({{"representative", G.element(c.representative).to_cycles()},
                       {"size", c.members.size()},
                       {"order", c.element_order}});
  Json gens = Json::array();
  for (const auto& g : G.generators()) gens.push_back(g.to_cycles());
  out["group"] = {{"name", G.name()}, {"order", G.order()}, {"exponent", G.exponent()}, {"generators", gens},
                  {"classes", classes}};

  Json chars = Json::array();
  for (std::size_t i = 0; i < a.table.size(); ++i) {
    Json values = Json::array();
    for (const auto& v : a.table[i].values) values.push_back(detail::cyclotomic_json(v));
    chars.push_back({{"degree", a.table.degrees[i]}, {"frobenius_schur", frobenius_schur(a.table, i)}, {"values", values}});
  }
  out["characters"] = chars;
  Json rational = Json::array();
  for (const auto& rc : a.rational)
    rational.push_back({{"orbit", rc.orbit},
                        {"schur_index", rc.schur_index},
                        {"n", rc.multiplicity_n},
                        {"schur_index_unverified", rc.schur_index_unverified}});
  out["rational_characters"] = rational;

  out["curves"] = Json::array({detail::curve_json(a.curve1, a.rational, r.factors1, r.holomorphic1),
                               detail::curve_json(a.curve2, a.rational, r.factors2, r.holomorphic2)});

  Json sings = Json::array();
  for (const auto& s : r.singularities) sings.push_back({{"n", s.n}, {"q", s.q}, {"hj_chain", s.hj_chain}});
  out["surface"] = {{"p_g", r.p_g},
                    {"q", r.q},
                    {"chi", r.chi},
                    {"K2", r.K2},
                    {"e", r.e},
                    {"e_quotient", r.e_quotient},
                    {"b2", r.b2},
                    {"rank_new", r.rank_new},
                    {"signature_new", {r.signature_new.first, r.signature_new.second}},
                    {"singularities", sings},
                    {"singularity_summary", singularity_summary(r.singularities)},
                    {"eta", r.eta},
                    {"family_dim", r.family_dim}};

  const auto& m = r.decomposition;
  out["h2"] = {{"rank_U", m.rank_U},
               {"rank_Z1", m.rank_Z1},
               {"rank_Z2", m.rank_Z2},
               {"eta", m.eta},
               {"total", m.total()},
               {"z2_label", m.z2_label},
               {"partner", m.partner_label},
               {"generic_k", m.generic_k}};

  Json matches = Json::array();
  for (const auto& p : r.pairing.matches)
    matches.push_back({{"rational1", p.rational1},
                       {"rational2", p.rational2},
                       {"constituent1", p.constituent1},
                       {"constituent2", p.constituent2},
                       {"self_dual", p.self_dual},
                       {"dn1", {p.factor1.reduced_dim, p.factor1.multiplicity}},
                       {"dn2", {p.factor2.reduced_dim, p.factor2.multiplicity}}});
  out["pairing"] = {{"status", to_string(r.pairing.status)},
                    {"matches", matches},
                    {"quaternionic", r.pairing.quaternionic},
                    {"partner", r.pairing.partner_label},
                    {"note", r.pairing.note}};

  if (a.supergroup) {
    const auto& s = *a.supergroup;
    out["supergroup"] = {{"group", s.group.name()},
                         {"order", s.group.order()},
                         {"curve", detail::curve_json(s.curve, s.rational, s.factors,
                                                      chevalley_weil(s.curve.vector, s.table))}};
  }

  const auto n_minus = r.signature_new.second;
  out["lattice"] = {{"transcendental_signature_bound", {2, n_minus}},
                    {"k3_corollary_applies", n_minus >= 0 && n_minus <= 8}};

  Json warnings = Json::array();
  if (a.supergroup)
    for (const auto& f : a.supergroup->factors)
      if (a.supergroup->rational[f.rational_char_index].schur_index_unverified && f.reduced_dim > 0)
        warnings.push_back("schur_index_unverified: supergroup rational character " +
                           std::to_string(f.rational_char_index) + " (non-real, degree > 1) assumed to have Schur index 1");
  if (r.not_pg_q2) warnings.push_back("NotPgQ2: the surface does not have p_g = q = 2");
  for (std::size_t i = 0; i < a.rational.size(); ++i)
    if (a.rational[i].schur_index_unverified)
      warnings.push_back("schur_index_unverified: rational character " + std::to_string(i) +
                         " (non-real, degree > 1) assumed to have Schur index 1");
  warnings.push_back("generic_k: k = rank Z2 - 4 assumes Hom(L1, L2) = 0");
  warnings.push_back("rank_new: " + r.rank_new_note);
  out["warnings"] = warnings;
  return out;
}

namespace detail {

inline bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

inline std::string scalar_text(const Json& j) {
  if (j.is_string()) return Json(j.get<std::string>()).dump();  // quoted
  if (j.is_null()) return "null";
  return j.dump();
}

inline void render_text(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto inline_array = [](const Json& arr) {
    std::string s = "[";
    for (std::size_t i = 0; i < arr.size(); ++i) {
      if (i) s += ", ";
      s += scalar_text(arr[i]);
    }
    return s + "]";
  };
  auto flat = [](const Json& arr) {
    for (const auto& x : arr)
      if (!is_scalar(x) && !(x.is_array() && std::all_of(x.begin(), x.end(), is_scalar))) return false;
    return true;
  };
  auto inline_nested = [&](const Json& arr) {
    std::string s = "[";
    for (std::size_t i = 0; i < arr.size(); ++i) {
      if (i) s += ", ";
      s += arr[i].is_array() ? inline_array(arr[i]) : scalar_text(arr[i]);
    }
    return s + "]";
  };
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_scalar(value)) {
        out << pad << key << ": " << scalar_text(value) << '\n';
      } else if (value.is_array() && flat(value)) {
        out << pad << key << ": " << inline_nested(value) << '\n';
      } else if (value.empty()) {
        out << pad << key << ": " << (value.is_object() ? "{}" : "[]") << '\n';
      } else {
        out << pad << key << ":\n";
        render_text(value, out, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& item : j) {
      if (is_scalar(item)) {
        out << pad << "- " << scalar_text(item) << '\n';
      } else if (item.is_array()) {
        out << pad << "- " << inline_nested(item) << '\n';
      } else if (item.empty()) {
        out << pad << "- {}\n";
      } else {
        out << pad << "-\n";
        render_text(item, out, indent + 2);
      }
    }
  } else {
    out << pad << scalar_text(j) << '\n';
  }
}

}  // namespace detail

/// Indented key: value rendering of a JSON report. Strings are quoted, so
/// every unquoted number is a numeric leaf of the JSON document.
inline std::string render_text(const Json& j) {
  std::ostringstream out;
  detail::render_text(j, out, 0);
  return out.str();
}

}  // namespace pqsurf
