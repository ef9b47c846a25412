#pragma once

#include <pqsurf/jacobian.hpp>

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace pqsurf {

// Cyclic quotient singularity 1/n(1,q) with its Hirzebruch-Jung chain: the
// exceptional curves of the minimal resolution have self-intersections -b_i.
struct QuotientSingularity {
  std::int64_t n = 2;
  std::int64_t q = 1;
  std::vector<std::int64_t> hj_chain;

  std::string to_string() const { return "1/" + std::to_string(n) + "(1," + std::to_string(q) + ")"; }

  friend bool operator==(const QuotientSingularity& a, const QuotientSingularity& b) { return a.n == b.n && a.q == b.q; }
  friend bool operator<(const QuotientSingularity& a, const QuotientSingularity& b) {
    return a.n != b.n ? a.n < b.n : a.q < b.q;
  }
};

/// n/q = b_1 - 1/(b_2 - 1/(...)), every b_i >= 2.
inline std::vector<std::int64_t> hirzebruch_jung(std::int64_t n, std::int64_t q) {
  if (n < 2 || q < 1 || q >= n) throw Error(ErrorKind::OutOfRange, "need 1 <= q < n, n >= 2");
  if (std::gcd(n, q) != 1) throw Error(ErrorKind::NotCoprime, std::to_string(q) + " and " + std::to_string(n));
  std::vector<std::int64_t> chain;
  while (q > 0) {
    const std::int64_t b = (n + q - 1) / q;
    chain.push_back(b);
    const std::int64_t r = b * q - n;
    n = q;
    q = r;
  }
  return chain;
}

// Renders a multiset such as "2 x 1/2(1,1)" or "1/3(1,1) + 1/3(1,2)"; "-" if empty.
inline std::string singularity_summary(const std::vector<QuotientSingularity>& sings) {
  if (sings.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < sings.size();) {
    std::size_t j = i;
    while (j < sings.size() && sings[j] == sings[i]) ++j;
    if (!out.empty()) out += " + ";
    if (j - i > 1) out += std::to_string(j - i) + " x ";
    out += sings[i].to_string();
    i = j;
  }
  return out;
}

/// Singular points of (C1 x C2)/G. Each is the orbit of a pair of points
/// (<c_j>, y<d_k>) with y running over double cosets <c_j>\G/<d_k>; the
/// stabilizer generator acting by exp(2 pi i/n) on C1 acts by exp(2 pi i q/n)
/// on C2.
inline std::vector<QuotientSingularity> quotient_singularities(const GeneratingVector& gv1, const GeneratingVector& gv2) {
  detail::check_same_group(gv1, gv2);
  validate(gv1);
  validate(gv2);
  const Group& G = gv1.group;
  std::vector<QuotientSingularity> out;
  for (auto c : gv1.monodromies) {
    const auto m1 = static_cast<std::int64_t>(G.element_order(c));
    const auto hc = G.generated_subgroup(std::span<const std::size_t>(&c, 1));
    for (auto d : gv2.monodromies) {
      const auto m2 = static_cast<std::int64_t>(G.element_order(d));
      const auto hd = G.generated_subgroup(std::span<const std::size_t>(&d, 1));
      std::vector<bool> covered(G.order(), false);
      for (std::size_t y = 0; y < G.order(); ++y) {
        if (covered[y]) continue;
        for (auto a : hc)
          for (auto b : hd) covered[G.mul(G.mul(a, y), b)] = true;
        // y d y^-1 generates the stabilizer of y<d> and acts there by exp(2 pi i / m2).
        const auto d_conj = G.conjugate(d, G.inv(y));
        std::int64_t n = 0, q = 0;
        for (std::int64_t s = 1; s < m1 && n == 0; ++s) {
          const auto h = G.pow(c, s);
          if (m1 % s != 0) continue;  // h = c^s with s | m1 generates the intersection
          std::size_t power = 0;
          for (std::int64_t t = 0; t < m2; ++t, power = G.mul(power, d_conj)) {
            if (power != h) continue;
            n = m1 / s;
            q = mod(t / (m2 / n), n);
            break;
          }
        }
        if (n >= 2) out.push_back({n, q, hirzebruch_jung(n, q)});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::int64_t eta(const std::vector<QuotientSingularity>& sings) {
  std::int64_t total = 0;
  for (const auto& s : sings) total += static_cast<std::int64_t>(s.hj_chain.size());
  return total;
}

/// Multiplicity N_chi of each complex irreducible in H^0(C, K_C):
/// N_chi = deg(chi)(g0 - 1) + sum_j sum_a N_{j,a} <-a/m_j> + [chi trivial],
/// with N_{j,a} the multiplicity of exp(2 pi i a/m_j) as an eigenvalue of c_j.
inline std::vector<std::int64_t> chevalley_weil(const GeneratingVector& gv, const CharacterTable& ct) {
  validate(gv);
  const Group& G = gv.group;
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < ct.size(); ++i) {
    Rational n = Rational(ct.degrees[i] * (gv.g0 - 1)) + (i == 0 ? 1 : 0);
    for (auto c : gv.monodromies) {
      const auto m = static_cast<std::int64_t>(G.element_order(c));
      for (const auto& [a, mult] : eigenvalue_multiplicities(ct, i, G.element(c)))
        n += Rational(mult * mod(-a, m), m);
    }
    if (!is_integral(n) || n < 0) throw Error(ErrorKind::InvalidParameter, "Chevalley-Weil multiplicity " + to_string(n));
    out.push_back(to_int64(numerator(n)));
  }
  return out;
}

inline std::vector<std::int64_t> chevalley_weil(const GeneratingVector& gv) { return chevalley_weil(gv, character_table(gv.group)); }

// sum_chi N_chi chi: the character of G on H^0(C, K_C).
inline ClassFunction holomorphic_character(const GeneratingVector& gv, const CharacterTable& ct) {
  const auto n = chevalley_weil(gv, ct);
  ClassFunction f = ClassFunction::constant(gv.group, 0);
  for (std::size_t i = 0; i < ct.size(); ++i) f += Integer(n[i]) * ct[i];
  return f;
}

struct EulerCharacteristic {
  std::int64_t quotient = 0;  // e((C1 x C2)/G)
  std::int64_t resolved = 0;  // e(S), S the minimal resolution
};

inline EulerCharacteristic euler_characteristic(const GeneratingVector& gv1, const GeneratingVector& gv2) {
  detail::check_same_group(gv1, gv2);
  const Group& G = gv1.group;
  const auto n = static_cast<std::int64_t>(G.order());
  std::int64_t sum = (2 - 2 * genus(gv1)) * (2 - 2 * genus(gv2));
  for (std::size_t g = 1; g < G.order(); ++g)
    sum += static_cast<std::int64_t>(fixed_points(gv1, g).size() * fixed_points(gv2, g).size());
  if (sum % n != 0) throw Error(ErrorKind::InvalidParameter, "Lefschetz average is not integral");
  const auto q = sum / n;
  return {q, q + eta(quotient_singularities(gv1, gv2))};
}

inline std::int64_t family_dimension_term(const GeneratingVector& gv) {
  const auto r = static_cast<std::int64_t>(gv.branch_count());
  if (gv.g0 >= 2) return 3 * gv.g0 - 3 + r;
  if (gv.g0 == 1) return r;
  return r - 3;
}

inline constexpr std::string_view kRankNewNote =
    "rank H2_new = b2 - 6 = 12 - K^2 (b2 = 18 - K^2 since b1 = 4); "
    "this differs from the value 14 - K^2 (with b2 = 20 - K^2) sometimes stated";

struct SurfaceReport {
  std::int64_t p_g = 0, q = 0, chi = 0, e = 0, e_quotient = 0, K2 = 0, b2 = 0;
  std::int64_t rank_new = 0;
  std::pair<std::int64_t, std::int64_t> signature_new{2, 0};  // upper bound on the negative part
  std::vector<QuotientSingularity> singularities;
  std::int64_t eta = 0;
  std::int64_t family_dim = 0;
  std::int64_t genus1 = 0, genus2 = 0;
  MotiveDecomposition decomposition;
  std::vector<IsotypicalFactor> factors1, factors2;
  std::vector<std::int64_t> holomorphic1, holomorphic2;  // Chevalley-Weil multiplicities
  PairingReport pairing;
  bool not_pg_q2 = false;
  std::string rank_new_note;
};

inline SurfaceReport invariants(const GeneratingVector& gv1, const GeneratingVector& gv2, const CharacterTable& ct,
                                const std::vector<RationalCharacter>& rational) {
  detail::check_same_group(gv1, gv2);
  SurfaceReport r;
  r.genus1 = genus(gv1);
  r.genus2 = genus(gv2);
  r.q = gv1.g0 + gv2.g0;
  r.holomorphic1 = chevalley_weil(gv1, ct);
  r.holomorphic2 = chevalley_weil(gv2, ct);
  r.p_g = to_int64(detail::invariant_rank(holomorphic_character(gv1, ct), holomorphic_character(gv2, ct)));
  r.chi = 1 - r.q + r.p_g;
  r.singularities = quotient_singularities(gv1, gv2);
  r.eta = pqsurf::eta(r.singularities);
  const auto euler = euler_characteristic(gv1, gv2);
  r.e_quotient = euler.quotient;
  r.e = euler.resolved;
  r.K2 = 12 * r.chi - r.e;
  r.b2 = r.e - 2 + 4 * r.q;
  r.rank_new = r.b2 - 6;
  r.signature_new = {2, r.rank_new - 2};
  r.family_dim = family_dimension_term(gv1) + family_dimension_term(gv2);
  r.factors1 = isotypical_dimensions(gv1, ct, rational);
  r.factors2 = isotypical_dimensions(gv2, ct, rational);
  r.decomposition = motive_h2_decomposition(gv1, gv2, ct, rational, r.eta);
  r.pairing = k3_pairing(gv1, gv2, ct, rational, r.decomposition.rank_Z2);
  r.not_pg_q2 = r.p_g != 2 || r.q != 2;
  r.rank_new_note = std::string(kRankNewNote);
  return r;
}

inline SurfaceReport invariants(const GeneratingVector& gv1, const GeneratingVector& gv2) {
  const auto ct = character_table(gv1.group);
  return invariants(gv1, gv2, ct, rational_characters(ct));
}

}  // namespace pqsurf
