#pragma once

#include <pqsurf/character_table.hpp>
#include <pqsurf/covering.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pqsurf {

// One factor B^n of the group algebra decomposition of J(C), indexed by a
// rational irreducible character psi: dim B = <psi, chi_V> / 2.
struct IsotypicalFactor {
  std::size_t rational_char_index = 0;
  std::size_t constituent = 0;   // least complex constituent (table index)
  Rational inner;                // <psi, chi_V>
  std::int64_t reduced_dim = 0;  // d
  int multiplicity = 1;          // n
  int schur_index = 1;           // m
  std::int64_t degree = 1;       // degree of a complex constituent
  bool trivial = false;
  bool quaternionic = false;
  bool self_dual = true;         // of the complex constituent
};

inline std::vector<IsotypicalFactor> isotypical_dimensions(const GeneratingVector& gv, const CharacterTable& ct,
                                                           const std::vector<RationalCharacter>& rational) {
  const auto chi_v = hurwitz_character(gv);
  std::vector<IsotypicalFactor> out;
  for (std::size_t i = 0; i < rational.size(); ++i) {
    const auto& rc = rational[i];
    IsotypicalFactor f;
    f.rational_char_index = i;
    f.constituent = rc.representative();
    f.inner = inner_product(rc.psi, chi_v);
    const Rational half = f.inner / 2;
    if (!is_integral(half))
      throw Error(ErrorKind::InvalidParameter, "non-integral reduced dimension " + to_string(half));
    f.reduced_dim = to_int64(numerator(half));
    f.multiplicity = rc.multiplicity_n;
    f.schur_index = rc.schur_index;
    f.degree = ct.degrees[f.constituent];
    f.trivial = rc.is_trivial();
    f.quaternionic = rc.quaternionic();
    f.self_dual = ct.is_self_dual(f.constituent);
    out.push_back(f);
  }
  return out;
}

inline std::vector<IsotypicalFactor> isotypical_dimensions(const GeneratingVector& gv) {
  const auto ct = character_table(gv.group);
  return isotypical_dimensions(gv, ct, rational_characters(ct));
}

/// Product label of J(C) up to isogeny for an elliptic base: "E" for the
/// trivial factor, then "L^n" (d = 1), "A" (d = 2, quaternionic) or
/// "B(d)^n" per nontrivial factor of positive dimension. Factors of the same
/// kind get subscripts when there is more than one.
inline std::string decomposition_label(const GeneratingVector& gv, const std::vector<IsotypicalFactor>& factors) {
  if (gv.g0 != 1) throw Error(ErrorKind::BaseGenusUnsupported, "labels assume an elliptic base (g0 = 1)");
  std::vector<std::string> parts;
  for (const auto& f : factors)
    if (f.trivial)
      for (std::int64_t k = 0; k < f.reduced_dim; ++k) parts.push_back("E");
  auto kind = [](const IsotypicalFactor& f) {
    if (f.reduced_dim == 1) return 'L';
    if (f.reduced_dim == 2 && f.quaternionic) return 'A';
    return 'B';
  };
  std::map<char, int> total, seen;
  for (const auto& f : factors)
    if (!f.trivial && f.reduced_dim > 0) ++total[kind(f)];
  for (const auto& f : factors) {
    if (f.trivial || f.reduced_dim == 0) continue;
    const char k = kind(f);
    std::string s(1, k);
    if (total[k] > 1) s += "_" + std::to_string(++seen[k]);
    if (k == 'B') s += "(" + std::to_string(f.reduced_dim) + ")";
    if (f.multiplicity > 1) s += "^" + std::to_string(f.multiplicity);
    parts.push_back(s);
  }
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " x " + parts[i];
  return out;
}

inline std::string decomposition_label(const GeneratingVector& gv) {
  return decomposition_label(gv, isotypical_dimensions(gv));
}

// Ranks of h^2(S) = U + Z1 + Z2 + E.
struct MotiveDecomposition {
  std::int64_t rank_U = 2;
  std::int64_t rank_Z1 = 0;
  std::int64_t rank_Z2 = 0;
  std::int64_t eta = 0;
  std::string z2_label;
  std::string partner_label;
  std::int64_t generic_k = 0;
  bool generic_k_caveat = true;  // k assumes Hom(L1, L2) = 0

  std::int64_t total() const { return rank_U + rank_Z1 + rank_Z2 + eta; }
};

struct PairingMatch {
  std::size_t rational1 = 0;  // rational character W on C1
  std::size_t rational2 = 0;  // W^dual on C2
  std::size_t constituent1 = 0;
  std::size_t constituent2 = 0;
  bool self_dual = true;
  IsotypicalFactor factor1;
  IsotypicalFactor factor2;
};

enum class PairingStatus { Unique, NoMatch, MultipleMatches };

inline std::string_view to_string(PairingStatus s) {
  switch (s) {
    case PairingStatus::Unique: return "unique";
    case PairingStatus::NoMatch: return "NoMatch";
    case PairingStatus::MultipleMatches: return "MultipleMatches";
  }
  return "";
}

struct PairingReport {
  PairingStatus status = PairingStatus::NoMatch;
  std::vector<PairingMatch> matches;
  bool quaternionic = false;
  std::string partner_label;
  std::string z2_label;
  std::string note;
  std::int64_t generic_k = 0;
  bool generic_k_caveat = true;
};

namespace detail {

inline void check_same_group(const GeneratingVector& a, const GeneratingVector& b) {
  if (!a.group.same_as(b.group)) throw Error(ErrorKind::GroupMismatch, "generating vectors over different groups");
}

// <f * g, 1> for rational-valued class functions.
inline Integer invariant_rank(const ClassFunction& f, const ClassFunction& g) {
  const Rational v = inner_product(f * g, ClassFunction::constant(f.group, 1));
  if (!is_integral(v)) throw Error(ErrorKind::InvalidParameter, "invariant dimension is not integral");
  return numerator(v);
}

}  // namespace detail

/// Nontrivial rational characters W with a positive-dimensional factor in
/// J(C1) at W and in J(C2) at the dual W^dual.
inline PairingReport k3_pairing(const GeneratingVector& gv1, const GeneratingVector& gv2, const CharacterTable& ct,
                                const std::vector<RationalCharacter>& rational, std::int64_t rank_Z2) {
  detail::check_same_group(gv1, gv2);
  const auto f1 = isotypical_dimensions(gv1, ct, rational);
  const auto f2 = isotypical_dimensions(gv2, ct, rational);
  auto rational_of = [&](std::size_t constituent) {
    for (std::size_t i = 0; i < rational.size(); ++i)
      for (auto j : rational[i].orbit)
        if (j == constituent) return i;
    throw Error(ErrorKind::InvalidParameter, "character outside every Galois orbit");
  };

  PairingReport report;
  for (std::size_t w = 0; w < rational.size(); ++w) {
    if (rational[w].is_trivial() || f1[w].reduced_dim == 0) continue;
    const auto chi = rational[w].representative();
    const auto dual = ct.dual(chi);
    const auto w_dual = rational_of(dual);
    if (f2[w_dual].reduced_dim == 0) continue;
    report.matches.push_back({w, w_dual, chi, dual, dual == chi, f1[w], f2[w_dual]});
  }
  report.status = report.matches.empty()    ? PairingStatus::NoMatch
                  : report.matches.size() == 1 ? PairingStatus::Unique
                                               : PairingStatus::MultipleMatches;
  report.generic_k = rank_Z2 - 4;
  report.generic_k_caveat = true;
  if (report.status == PairingStatus::Unique) {
    const auto& m = report.matches.front();
    report.quaternionic = m.factor1.quaternionic || m.factor2.quaternionic;
    if (m.factor1.reduced_dim == 1 && m.factor2.reduced_dim == 1) {
      report.partner_label = "Km(L1 x L2)";
      report.z2_label = "h1(L1) (x) h1(L2)";
    } else if ((m.factor1.reduced_dim == 2 && m.factor1.schur_index == 2) ||
               (m.factor2.reduced_dim == 2 && m.factor2.schur_index == 2)) {
      report.partner_label = "Km(A)";
      report.z2_label = "(h1(A1) (x) h1(A2))^G";
      report.note =
          "quaternionic factor (Schur index 2): A ~ L^2 with L a CM elliptic curve; "
          "decompose with respect to a larger automorphism group to exhibit L1, L2";
    } else {
      report.partner_label = "undetermined";
      report.z2_label = "(h1(B1) (x) h1(B2))^G";
    }
  } else if (report.status == PairingStatus::MultipleMatches) {
    report.note = "several characters pair; needs review";
  }
  return report;
}

inline MotiveDecomposition motive_h2_decomposition(const GeneratingVector& gv1, const GeneratingVector& gv2,
                                                   const CharacterTable& ct, const std::vector<RationalCharacter>& rational,
                                                   std::int64_t eta) {
  detail::check_same_group(gv1, gv2);
  MotiveDecomposition d;
  d.rank_U = 2;
  d.rank_Z1 = 4 * gv1.g0 * gv2.g0;
  const auto z = to_int64(detail::invariant_rank(hurwitz_character(gv1), hurwitz_character(gv2)));
  d.rank_Z2 = z - d.rank_Z1;
  d.eta = eta;
  const auto pairing = k3_pairing(gv1, gv2, ct, rational, d.rank_Z2);
  d.z2_label = pairing.z2_label;
  d.partner_label = pairing.partner_label;
  d.generic_k = pairing.generic_k;
  d.generic_k_caveat = true;
  return d;
}

/// (1/2) <Res_H chi_V, 1_H>: genus of C/H for a subgroup H given by indices.
inline std::int64_t quotient_genus(const GeneratingVector& gv, std::span<const std::size_t> subgroup) {
  const auto chi_v = hurwitz_character(gv);
  const Group& G = gv.group;
  Cyclotomic sum(G.exponent());
  for (auto h : subgroup) sum += chi_v[G.class_of(h)];
  const auto v = sum.rational_value();
  const auto denom = static_cast<std::int64_t>(2 * subgroup.size());
  if (!v || *v % denom != 0) throw Error(ErrorKind::InvalidParameter, "quotient genus is not integral");
  return to_int64(*v / denom);
}

}  // namespace pqsurf
