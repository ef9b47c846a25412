#pragma once

#include <pqsurf/catalog.hpp>
#include <pqsurf/surface.hpp>

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace pqsurf {

// A reduced factor [d, n, k] of a Jacobian: dimension d, multiplicity n, at
// the character with reference index k (1-based, reference numbering).
struct ReferenceFactor {
  std::int64_t d = 0;
  std::int64_t n = 0;
  std::size_t k = 0;
  friend bool operator==(const ReferenceFactor&, const ReferenceFactor&) = default;
};

// One unmixed surface with p_g = q = 2 and its recorded invariants. The
// factor lists hold the nontrivial positive-dimensional factors of each curve.
struct TableRow {
  std::string name;
  std::string group;
  std::vector<std::int64_t> orders1, orders2;  // branch orders, elliptic base
  std::int64_t K2 = 0;
  std::int64_t genus1 = 0, genus2 = 0;
  std::string singularities;  // singularity_summary form
  std::int64_t eta = 0;
  std::int64_t family_dim = 0;
  std::vector<ReferenceFactor> factors1, factors2;
  std::size_t paired_k = 0;
  bool quaternionic = false;
};

inline const std::vector<TableRow>& catalog_rows() {
  static const std::vector<TableRow> rows{
      {"V4", "V4", {2, 2}, {2, 2}, 8, 3, 3, "-", 0, 4, {{1, 1, 2}, {1, 1, 4}}, {{1, 1, 3}, {1, 1, 4}}, 4, false},
      {"S3a", "S3", {3}, {2, 2}, 8, 3, 4, "-", 0, 3, {{1, 2, 3}}, {{1, 1, 2}, {1, 2, 3}}, 3, false},
      {"D4a", "D4", {2}, {2, 2}, 8, 3, 5, "-", 0, 3, {{1, 2, 5}}, {{1, 1, 3}, {1, 1, 4}, {1, 2, 5}}, 5, false},
      {"A4", "A4", {2}, {2}, 6, 4, 4, "2 x 1/2(1,1)", 2, 2, {{1, 3, 4}}, {{1, 3, 4}}, 4, false},
      {"S3b", "S3", {3}, {3}, 5, 3, 3, "1/3(1,1) + 1/3(1,2)", 3, 2, {{1, 2, 3}}, {{1, 2, 3}}, 3, false},
      {"Q8", "Q8", {2}, {2}, 4, 3, 3, "4 x 1/2(1,1)", 4, 2, {{2, 1, 5}}, {{2, 1, 5}}, 5, true},
      {"D4b", "D4", {2}, {2}, 4, 3, 3, "4 x 1/2(1,1)", 4, 2, {{1, 2, 5}}, {{1, 2, 5}}, 5, false},
      {"C2", "C2", {2, 2}, {2, 2}, 4, 2, 2, "4 x 1/2(1,1)", 4, 4, {{1, 1, 2}}, {{1, 1, 2}}, 2, false},
  };
  return rows;
}

// Reference character numbers translated to canonical table indices. Each
// entry names the property that pins the character; where the property only
// determines it up to automorphisms of the group, every admissible index is
// returned and matching requires distinct numbers to land on distinct
// characters.
struct CharacterAlias {
  std::string group;
  std::size_t k;
  std::string criterion;
  std::function<bool(const CharacterTable&, std::size_t)> admits;
};

inline const std::vector<CharacterAlias>& character_aliases() {
  auto degree = [](std::int64_t d) {
    return [d](const CharacterTable& ct, std::size_t i) { return ct.degrees[i] == d; };
  };
  auto nontrivial_linear = [](const CharacterTable& ct, std::size_t i) { return i != 0 && ct.degrees[i] == 1; };
  auto real_linear_nontrivial = [](const CharacterTable& ct, std::size_t i) {
    return i != 0 && ct.degrees[i] == 1 && ct.is_real(i);
  };
  static const std::vector<CharacterAlias> aliases{
      {"V4", 1, "trivial", [](const CharacterTable&, std::size_t i) { return i == 0; }},
      {"V4", 2, "nontrivial linear (up to Aut(V4))", nontrivial_linear},
      {"V4", 3, "nontrivial linear (up to Aut(V4))", nontrivial_linear},
      {"V4", 4, "nontrivial linear (up to Aut(V4))", nontrivial_linear},
      {"S3", 2, "sign: the nontrivial linear character", nontrivial_linear},
      {"S3", 3, "unique of degree 2", degree(2)},
      {"D4", 3, "nontrivial linear (up to Aut(D4))", nontrivial_linear},
      {"D4", 4, "nontrivial linear (up to Aut(D4))", nontrivial_linear},
      {"D4", 5, "unique of degree 2", degree(2)},
      {"Q8", 5, "unique of degree 2", degree(2)},
      {"A4", 4, "unique of degree 3", degree(3)},
      {"C2", 2, "unique nontrivial", real_linear_nontrivial},
      {"C4xC2semiC2", 9, "degree 2 and not self-dual", [](const CharacterTable& ct, std::size_t i) {
         return ct.degrees[i] == 2 && !ct.is_self_dual(i);
       }},
  };
  return aliases;
}

// Exact V4 numbering for a fixed identification V4 = (Z/2)^2 with
// (1,0) = (1,2)(3,4), (0,1) = (1,3)(2,4): references 2, 3, 4 are the
// characters chi_(0,1), chi_(1,0), chi_(1,1), where chi_g is the nontrivial
// character with g in its kernel.
inline std::size_t v4_exact_alias(std::size_t k) {
  static constexpr std::size_t map[] = {0, 0, 2, 1, 3};
  if (k < 1 || k > 4) throw Error(ErrorKind::OutOfRange, "V4 has characters 1..4");
  return map[k];
}

inline std::vector<std::size_t> alias_candidates(const CharacterTable& ct, std::string_view group, std::size_t k) {
  for (const auto& a : character_aliases()) {
    if (a.group != group || a.k != k) continue;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ct.size(); ++i)
      if (a.admits(ct, i)) out.push_back(i);
    return out;
  }
  throw Error(ErrorKind::UnknownName, "no alias for character " + std::to_string(k) + " of " + std::string(group));
}

// Rational-character index containing the complex character i.
inline std::size_t orbit_of(const std::vector<RationalCharacter>& rational, std::size_t i) {
  for (std::size_t r = 0; r < rational.size(); ++r)
    if (std::find(rational[r].orbit.begin(), rational[r].orbit.end(), i) != rational[r].orbit.end()) return r;
  throw Error(ErrorKind::InvalidParameter, "character outside every Galois orbit");
}

struct ComputedFactor {
  std::int64_t d = 0, n = 0;
  std::size_t rational = 0;
  friend bool operator==(const ComputedFactor&, const ComputedFactor&) = default;
  friend auto operator<=>(const ComputedFactor&, const ComputedFactor&) = default;
};

inline std::vector<ComputedFactor> nontrivial_factors(const std::vector<IsotypicalFactor>& factors) {
  std::vector<ComputedFactor> out;
  for (const auto& f : factors)
    if (!f.trivial && f.reduced_dim > 0) out.push_back({f.reduced_dim, f.multiplicity, f.rational_char_index});
  std::sort(out.begin(), out.end());
  return out;
}

/// Looks for an injective assignment of reference numbers to rational
/// characters, each admitted by the alias map, under which both factor lists
/// and the paired character agree. Returns the assignment k -> rational index.
inline std::optional<std::map<std::size_t, std::size_t>> match_reference(
    const CharacterTable& ct, const std::vector<RationalCharacter>& rational, std::string_view group,
    const std::vector<ReferenceFactor>& ref1, const std::vector<ReferenceFactor>& ref2, std::size_t paired_k,
    const std::vector<ComputedFactor>& got1, const std::vector<ComputedFactor>& got2,
    std::optional<std::size_t> paired_rational) {
  std::vector<std::size_t> ks;
  for (const auto* ref : {&ref1, &ref2})
    for (const auto& f : *ref) ks.push_back(f.k);
  ks.push_back(paired_k);
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

  std::vector<std::vector<std::size_t>> options;
  for (auto k : ks) {
    std::vector<std::size_t> r;
    for (auto i : alias_candidates(ct, group, k)) r.push_back(orbit_of(rational, i));
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    options.push_back(std::move(r));
  }

  std::map<std::size_t, std::size_t> assignment;
  auto consistent = [&] {
    auto translate = [&](const std::vector<ReferenceFactor>& ref) {
      std::vector<ComputedFactor> out;
      for (const auto& f : ref) out.push_back({f.d, f.n, assignment.at(f.k)});
      std::sort(out.begin(), out.end());
      return out;
    };
    if (translate(ref1) != got1 || translate(ref2) != got2) return false;
    return !paired_rational || assignment.at(paired_k) == *paired_rational;
  };
  std::vector<bool> used(rational.size(), false);
  auto search = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == ks.size()) return consistent();
    for (auto r : options[pos]) {
      if (used[r]) continue;
      used[r] = true;
      assignment[ks[pos]] = r;
      if (self(self, pos + 1)) return true;
      used[r] = false;
    }
    assignment.erase(ks[pos]);
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return assignment;
}

// Check on a larger group acting on the same curves: the order-16 group
// containing Q8, with signature (0; 2, 2, 2, 4), whose witness restricts to an
// elliptic quotient by the Q8 subgroup.
struct SupergroupCheck {
  bool found = false;
  std::optional<GeneratingVector> witness;
  std::int64_t genus = 0;
  std::int64_t d = 0, n = 0;
  std::int64_t quotient_genus_by_q8 = 0;
  bool schur_index_unverified = false;
  std::string note;
};

// Order-8 subgroup of G with exactly one involution, if any.
inline std::optional<std::vector<std::size_t>> quaternion_subgroup(const Group& G) {
  for (std::size_t a = 1; a < G.order(); ++a)
    for (std::size_t b = a + 1; b < G.order(); ++b) {
      const std::size_t gens[] = {a, b};
      const auto H = G.generated_subgroup(gens);
      if (H.size() != 8) continue;
      const auto involutions = std::count_if(H.begin(), H.end(), [&](std::size_t h) { return G.element_order(h) == 2; });
      if (involutions == 1) return H;
    }
  return std::nullopt;
}

inline SupergroupCheck q8_supergroup_check() {
  SupergroupCheck out;
  const auto G = catalog_group("C4xC2semiC2");
  const auto ct = character_table(G);
  const auto rational = rational_characters(ct);
  const auto q8 = quaternion_subgroup(G);
  if (!q8) return out;
  for (auto& gv : search_generating_vectors(G, 0, {2, 2, 2, 4})) {
    const auto qg = quotient_genus(gv, *q8);
    if (qg != 1) continue;
    out.found = true;
    out.genus = genus(gv);
    out.quotient_genus_by_q8 = qg;
    const auto candidates = alias_candidates(ct, "C4xC2semiC2", 9);
    const auto r = orbit_of(rational, candidates.front());
    const auto factors = isotypical_dimensions(gv, ct, rational);
    out.d = factors[r].reduced_dim;
    out.n = factors[r].multiplicity;
    out.schur_index_unverified = rational[r].schur_index_unverified;
    out.note = "A ~ L^2 over the order-16 group; Schur index of the non-real degree-2 character taken as 1";
    out.witness = std::move(gv);
    break;
  }
  return out;
}

struct RowResult {
  TableRow expected;
  bool witness_found = false;
  std::optional<GeneratingVector> witness1, witness2;
  SurfaceReport report;
  std::vector<ComputedFactor> factors1, factors2;
  std::optional<std::map<std::size_t, std::size_t>> alias_assignment;
  std::optional<SupergroupCheck> supergroup;
  std::vector<std::string> mismatches;

  bool matched() const { return mismatches.empty(); }
};

/// Witness selection: search both curves' generating vectors and take the
/// first pair, in search order, with p_g = 2 (q = 2 holds for an elliptic
/// base on both sides).
inline std::optional<std::pair<GeneratingVector, GeneratingVector>> find_witness(const Group& G, std::int64_t g0,
                                                                                 const std::vector<std::int64_t>& orders1,
                                                                                 const std::vector<std::int64_t>& orders2,
                                                                                 const CharacterTable& ct) {
  const auto v1 = search_generating_vectors(G, g0, orders1);
  const auto v2 = search_generating_vectors(G, g0, orders2);
  for (const auto& a : v1) {
    const auto h1 = holomorphic_character(a, ct);
    for (const auto& b : v2)
      if (detail::invariant_rank(h1, holomorphic_character(b, ct)) == 2) return std::pair{a, b};
  }
  return std::nullopt;
}

inline RowResult reproduce_row(const TableRow& row) {
  RowResult res;
  res.expected = row;
  const auto G = catalog_group(row.group);
  const auto ct = character_table(G);
  const auto rational = rational_characters(ct);
  auto w = find_witness(G, 1, row.orders1, row.orders2, ct);
  if (!w) {
    res.mismatches.push_back("no witness with p_g = 2");
    return res;
  }
  res.witness_found = true;
  res.witness1 = w->first;
  res.witness2 = w->second;
  res.report = invariants(w->first, w->second, ct, rational);
  const auto& r = res.report;

  auto check = [&](const std::string& what, const auto& got, const auto& want) {
    if (!(got == want)) {
      std::ostringstream s;
      s << what << ": computed " << got << ", expected " << want;
      res.mismatches.push_back(s.str());
    }
  };
  check("K2", r.K2, row.K2);
  check("g1", r.genus1, row.genus1);
  check("g2", r.genus2, row.genus2);
  check("sing", singularity_summary(r.singularities), row.singularities);
  check("eta", r.eta, row.eta);
  check("dim", r.family_dim, row.family_dim);

  res.factors1 = nontrivial_factors(r.factors1);
  res.factors2 = nontrivial_factors(r.factors2);
  std::optional<std::size_t> paired;
  if (r.pairing.status == PairingStatus::Unique) {
    paired = r.pairing.matches.front().rational1;
  } else {
    res.mismatches.push_back("pairing: " + std::string(to_string(r.pairing.status)));
  }
  res.alias_assignment =
      match_reference(ct, rational, row.group, row.factors1, row.factors2, row.paired_k, res.factors1, res.factors2, paired);
  if (!res.alias_assignment) res.mismatches.push_back("[d,n,k] factors do not match under the alias map");
  check("quaternionic", r.pairing.quaternionic, row.quaternionic);

  if (row.group == "Q8") {
    res.supergroup = q8_supergroup_check();
    const auto& s = *res.supergroup;
    if (!s.found) {
      res.mismatches.push_back("order-16 supergroup: no witness");
    } else {
      check("order-16 supergroup [d,n]", std::to_string(s.d) + "," + std::to_string(s.n), std::string("1,2"));
      check("order-16 supergroup genus", s.genus, row.genus1);
    }
  }
  return res;
}

/// Rows whose name or group equals filter (all rows if empty), computed on up
/// to `parallel` threads; results come back in row order.
inline std::vector<RowResult> reproduce_tables(const std::vector<TableRow>& rows, const std::string& filter = "",
                                               unsigned parallel = 1) {
  std::vector<const TableRow*> selected;
  for (const auto& row : rows)
    if (filter.empty() || row.name == filter || row.group == filter) selected.push_back(&row);
  if (!filter.empty() && selected.empty()) throw Error(ErrorKind::UnknownName, "no table row \"" + filter + "\"");

  std::vector<RowResult> results(selected.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(parallel, static_cast<unsigned>(selected.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < selected.size(); ++i) results[i] = reproduce_row(*selected[i]);
    return results;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w)
    threads.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < selected.size(); i += workers) results[i] = reproduce_row(*selected[i]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace pqsurf
