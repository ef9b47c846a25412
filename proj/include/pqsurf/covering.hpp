#pragma once

#include <pqsurf/class_function.hpp>

#include <cmath>
#include <set>
#include <utility>
#include <vector>

namespace pqsurf {

inline constexpr double kDefaultSearchBound = 5e7;

// Topological data of a G-cover C -> C/G: g0 pairs of handle images, the
// local monodromies c_1..c_r around the branch points, and their declared
// orders. Elements are stored as indices into the group.
struct GeneratingVector {
  Group group;
  std::int64_t g0 = 0;
  std::vector<std::pair<std::size_t, std::size_t>> handles;
  std::vector<std::size_t> monodromies;
  std::vector<std::int64_t> orders;

  static GeneratingVector from_permutations(const Group& G, std::int64_t g0,
                                            const std::vector<std::pair<Permutation, Permutation>>& handles,
                                            const std::vector<Permutation>& monodromies,
                                            std::vector<std::int64_t> orders) {
    GeneratingVector gv{G, g0, {}, {}, std::move(orders)};
    for (const auto& [a, b] : handles) gv.handles.emplace_back(G.index_of(a), G.index_of(b));
    for (const auto& c : monodromies) gv.monodromies.push_back(G.index_of(c));
    return gv;
  }

  std::size_t branch_count() const { return monodromies.size(); }

  // Flat tuple (a_1, b_1, ..., a_g0, b_g0, c_1, ..., c_r).
  std::vector<std::size_t> flat() const {
    std::vector<std::size_t> out;
    for (const auto& [a, b] : handles) {
      out.push_back(a);
      out.push_back(b);
    }
    out.insert(out.end(), monodromies.begin(), monodromies.end());
    return out;
  }
};

/// Checks the long relation, nontrivial monodromies with the declared orders,
/// and generation. Throws the Error naming the first violated condition.
inline void validate(const GeneratingVector& gv) {
  const Group& G = gv.group;
  if (!G.valid()) throw Error(ErrorKind::InvalidParameter, "generating vector without a group");
  if (gv.g0 < 0 || gv.handles.size() != static_cast<std::size_t>(gv.g0))
    throw Error(ErrorKind::InvalidParameter, "expected " + std::to_string(gv.g0) + " handle pairs");
  if (gv.orders.size() != gv.monodromies.size())
    throw Error(ErrorKind::InvalidParameter, "one order per monodromy required");
  for (std::size_t i = 0; i < gv.monodromies.size(); ++i) {
    if (gv.monodromies[i] == 0) throw Error(ErrorKind::TrivialMonodromy, "c_" + std::to_string(i + 1) + " is the identity");
    const auto ord = static_cast<std::int64_t>(G.element_order(gv.monodromies[i]));
    if (gv.orders[i] < 2 || ord != gv.orders[i])
      throw Error(ErrorKind::OrderMismatch, "c_" + std::to_string(i + 1) + " has order " + std::to_string(ord) +
                                                ", declared " + std::to_string(gv.orders[i]));
  }
  std::size_t product = 0;
  for (const auto& [a, b] : gv.handles) product = G.mul(product, G.commutator(a, b));
  for (auto c : gv.monodromies) product = G.mul(product, c);
  if (product != 0) throw Error(ErrorKind::RelationFails, "prod [a_j,b_j] * prod c_i = " + G.element(product).to_cycles());
  const auto flat = gv.flat();
  if (G.generated_subgroup(flat).size() != G.order())
    throw Error(ErrorKind::NotGenerating, "entries generate a proper subgroup");
}

// 2g - 2 = |G|(2 g0 - 2) + sum_i |G|/m_i (m_i - 1); assumes a valid vector.
inline std::int64_t riemann_hurwitz_genus(std::int64_t group_order, std::int64_t g0, const std::vector<std::int64_t>& orders) {
  std::int64_t twice = group_order * (2 * g0 - 2);
  for (auto m : orders) twice += group_order / m * (m - 1);
  return (twice + 2) / 2;
}

inline std::int64_t genus(const GeneratingVector& gv) {
  validate(gv);
  return riemann_hurwitz_genus(static_cast<std::int64_t>(gv.group.order()), gv.g0, gv.orders);
}

/// Character of G on H^1(C, Q):
/// 2 chi_1 + 2 (g0 - 1) rho_reg + sum_i (rho_reg - rho_<c_i>).
inline ClassFunction hurwitz_character(const GeneratingVector& gv) {
  validate(gv);
  const Group& G = gv.group;
  const auto regular = regular_character(G);
  ClassFunction chi = ClassFunction::constant(G, 2);
  chi += Integer(2 * (gv.g0 - 1)) * regular;
  for (auto c : gv.monodromies) {
    const auto cyclic = G.generated_subgroup(std::span<const std::size_t>(&c, 1));
    chi += regular;
    chi -= induced_trivial(G, std::span<const std::size_t>(cyclic));
  }
  return chi;
}

// A point of C with nontrivial stabilizer fixed by a queried element g: the
// coset x<c_j> above branch point j, where x c_j x^-1 acts on the tangent
// line by exp(2 pi i / m_j) and g acts by exp(2 pi i t / ord(g)).
struct FixedPoint {
  std::size_t branch_index;  // 1-based
  std::size_t coset_rep;     // element index of x, least in its coset
  std::int64_t rotation_exponent;
};

// Fixed points of the element with index g (g != identity).
inline std::vector<FixedPoint> fixed_points(const GeneratingVector& gv, std::size_t g) {
  const Group& G = gv.group;
  if (g == 0) throw Error(ErrorKind::IdentityElement, "the identity fixes every point");
  const auto ord_g = static_cast<std::int64_t>(G.element_order(g));
  std::vector<FixedPoint> out;
  for (std::size_t j = 0; j < gv.monodromies.size(); ++j) {
    const auto c = gv.monodromies[j];
    const auto m = static_cast<std::int64_t>(G.element_order(c));
    std::vector<std::size_t> powers(static_cast<std::size_t>(m));
    powers[0] = 0;
    for (std::int64_t s = 1; s < m; ++s) powers[static_cast<std::size_t>(s)] = G.mul(powers[static_cast<std::size_t>(s - 1)], c);
    for (std::size_t x = 0; x < G.order(); ++x) {
      bool least = true;
      for (std::int64_t s = 1; s < m && least; ++s) least = G.mul(x, powers[static_cast<std::size_t>(s)]) > x;
      if (!least) continue;
      const auto conj = G.conjugate(g, x);
      for (std::int64_t s = 0; s < m; ++s) {
        if (powers[static_cast<std::size_t>(s)] != conj) continue;
        const auto step = m / ord_g;
        out.push_back({j + 1, x, mod(s / step, ord_g)});
        break;
      }
    }
  }
  return out;
}

inline std::vector<FixedPoint> fixed_point_data(const GeneratingVector& gv, const Permutation& g) {
  return fixed_points(gv, gv.group.index_of(g));
}

/// All generating vectors of signature (g0; orders), up to simultaneous
/// conjugation, in ascending order of their least conjugate (which is the
/// representative returned).
inline std::vector<GeneratingVector> search_generating_vectors(const Group& G, std::int64_t g0,
                                                               const std::vector<std::int64_t>& orders,
                                                               double bound = kDefaultSearchBound) {
  if (g0 < 0) throw Error(ErrorKind::InvalidParameter, "g0 must be nonnegative");
  for (auto m : orders)
    if (m < 2) throw Error(ErrorKind::InvalidParameter, "branch orders must be >= 2");
  const auto n = static_cast<double>(G.order());
  if (std::pow(n, static_cast<double>(2 * g0 + static_cast<std::int64_t>(orders.size()))) > bound)
    throw Error(ErrorKind::SearchSpaceTooLarge, "|G|^(2 g0 + r) exceeds " + std::to_string(static_cast<long long>(bound)));

  const std::size_t r = orders.size();
  const std::size_t handle_slots = static_cast<std::size_t>(2 * g0);
  const std::size_t free_slots = handle_slots + (r == 0 ? 0 : r - 1);
  std::vector<std::vector<std::size_t>> candidates(free_slots);
  for (std::size_t s = 0; s < free_slots; ++s) {
    for (std::size_t x = 0; x < G.order(); ++x) {
      if (s < handle_slots || static_cast<std::int64_t>(G.element_order(x)) == orders[s - handle_slots])
        candidates[s].push_back(x);
    }
  }

  std::set<std::vector<std::size_t>> canonical;
  std::vector<std::size_t> tuple(handle_slots + r);
  auto finish = [&] {
    std::size_t product = 0;
    for (std::size_t j = 0; j < handle_slots; j += 2) product = G.mul(product, G.commutator(tuple[j], tuple[j + 1]));
    for (std::size_t i = handle_slots; i < free_slots; ++i) product = G.mul(product, tuple[i]);
    if (r == 0) {
      if (product != 0) return;
    } else {
      const auto last = G.inv(product);
      if (static_cast<std::int64_t>(G.element_order(last)) != orders[r - 1]) return;
      tuple.back() = last;
    }
    if (G.generated_subgroup(tuple).size() != G.order()) return;
    std::vector<std::size_t> best = tuple, conj(tuple.size());
    for (std::size_t x = 1; x < G.order(); ++x) {
      for (std::size_t i = 0; i < tuple.size(); ++i) conj[i] = G.conjugate(tuple[i], x);
      if (conj < best) best = conj;
    }
    canonical.insert(std::move(best));
  };
  auto recurse = [&](auto&& self, std::size_t slot) -> void {
    if (slot == free_slots) {
      finish();
      return;
    }
    for (auto x : candidates[slot]) {
      tuple[slot] = x;
      self(self, slot + 1);
    }
  };
  recurse(recurse, 0);

  std::vector<GeneratingVector> out;
  for (const auto& t : canonical) {
    GeneratingVector gv{G, g0, {}, {}, orders};
    for (std::size_t j = 0; j < handle_slots; j += 2) gv.handles.emplace_back(t[j], t[j + 1]);
    gv.monodromies.assign(t.begin() + static_cast<std::ptrdiff_t>(handle_slots), t.end());
    out.push_back(std::move(gv));
  }
  return out;
}

}  // namespace pqsurf
