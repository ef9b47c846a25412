#pragma once

#include <pqsurf/group.hpp>

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace pqsurf {

namespace detail {

// 2x2 matrices over the Gaussian integers, entries stored as (re, im) pairs
// in row-major order.
using GaussMatrix = std::array<int, 8>;

inline GaussMatrix gauss_mul(const GaussMatrix& a, const GaussMatrix& b) {
  GaussMatrix c{};
  for (int r = 0; r < 2; ++r)
    for (int col = 0; col < 2; ++col) {
      int re = 0, im = 0;
      for (int k = 0; k < 2; ++k) {
        const int ar = a[2 * (2 * r + k)], ai = a[2 * (2 * r + k) + 1];
        const int br = b[2 * (2 * k + col)], bi = b[2 * (2 * k + col) + 1];
        re += ar * br - ai * bi;
        im += ar * bi + ai * br;
      }
      c[2 * (2 * r + col)] = re;
      c[2 * (2 * r + col) + 1] = im;
    }
  return c;
}

// Right regular permutation representation of the finite matrix group
// generated by gens: the point labelled y is sent to y * x.
inline std::vector<Permutation> regular_representation(const std::vector<GaussMatrix>& gens) {
  const GaussMatrix one{1, 0, 0, 0, 0, 0, 1, 0};
  std::vector<GaussMatrix> elems{one};
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (const auto& g : gens) {
      auto p = gauss_mul(elems[head], g);
      if (std::find(elems.begin(), elems.end(), p) == elems.end()) elems.push_back(p);
    }
  std::vector<Permutation> out;
  for (const auto& g : gens) {
    std::vector<std::uint32_t> images(elems.size());
    for (std::size_t y = 0; y < elems.size(); ++y) {
      auto p = gauss_mul(elems[y], g);
      images[y] = static_cast<std::uint32_t>(std::find(elems.begin(), elems.end(), p) - elems.begin());
    }
    out.push_back(Permutation::from_images0(std::move(images)));
  }
  return out;
}

inline Group from_cycles(std::string name, std::size_t degree, std::initializer_list<std::string_view> cycles) {
  std::vector<Permutation> gens;
  for (auto c : cycles) gens.push_back(Permutation::from_cycles(c, degree));
  return group_from_generators(gens, kDefaultOrderCap, std::move(name));
}

}  // namespace detail

inline const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"C2", "C4", "C6", "V4", "S3", "D4", "Q8", "A4", "C4xC2semiC2"};
  return names;
}

// Fixed permutation realizations of the small groups used throughout.
// Q8 and the order-16 group (C4 x C2) : C2 = C4 o Q8 (the Pauli group) use
// their regular representations; the others act on their natural points.
inline Group catalog_group(std::string_view name) {
  using detail::from_cycles;
  if (name == "C2") return from_cycles("C2", 2, {"(1,2)"});
  if (name == "C4") return from_cycles("C4", 4, {"(1,2,3,4)"});
  if (name == "C6") return from_cycles("C6", 6, {"(1,2,3,4,5,6)"});
  if (name == "V4") return from_cycles("V4", 4, {"(1,2)(3,4)", "(1,3)(2,4)"});
  if (name == "S3") return from_cycles("S3", 3, {"(1,2,3)", "(1,2)"});
  if (name == "D4") return from_cycles("D4", 4, {"(1,2,3,4)", "(1,3)"});
  if (name == "A4") return from_cycles("A4", 4, {"(1,2,3)", "(1,2)(3,4)"});
  if (name == "Q8") {
    const detail::GaussMatrix qi{0, 1, 0, 0, 0, 0, 0, -1};
    const detail::GaussMatrix qj{0, 0, 1, 0, -1, 0, 0, 0};
    return group_from_generators(detail::regular_representation({qi, qj}), kDefaultOrderCap, "Q8");
  }
  if (name == "C4xC2semiC2") {
    const detail::GaussMatrix x{0, 0, 1, 0, 1, 0, 0, 0};
    const detail::GaussMatrix z{1, 0, 0, 0, 0, 0, -1, 0};
    const detail::GaussMatrix scalar_i{0, 1, 0, 0, 0, 0, 0, 1};
    return group_from_generators(detail::regular_representation({x, z, scalar_i}), kDefaultOrderCap, "C4xC2semiC2");
  }
  throw Error(ErrorKind::UnknownName, std::string(name));
}

}  // namespace pqsurf
