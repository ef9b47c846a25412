#include "corpus.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace pqsurf;

namespace {

Permutation cyc(std::string_view s) { return Permutation::from_cycles(s, 4); }

struct V4Example {
  Group G = catalog_group("V4");
  CharacterTable ct = character_table(G);
  std::vector<RationalCharacter> rational = rational_characters(ct);
  GeneratingVector c1, c2;

  V4Example() {
    const auto e10 = cyc("(1,2)(3,4)"), e01 = cyc("(1,3)(2,4)"), id = Permutation::identity(4);
    c1 = GeneratingVector::from_permutations(G, 1, {{e01, id}}, {e10, e10}, {2, 2});
    c2 = GeneratingVector::from_permutations(G, 1, {{e10, id}}, {e01, e01}, {2, 2});
  }

  // chi_g: the nontrivial character whose kernel contains g
  std::size_t chi(std::vector<std::int64_t> values) const {
    return orbit_of(rational, *ct.find(ClassFunction::from_integers(G, values)));
  }
  std::vector<std::int64_t> dims(const GeneratingVector& gv) const {
    const auto f = isotypical_dimensions(gv, ct, rational);
    return {f[chi({1, 1, 1, 1})].reduced_dim, f[chi({1, -1, 1, -1})].reduced_dim, f[chi({1, 1, -1, -1})].reduced_dim,
            f[chi({1, -1, -1, 1})].reduced_dim};
  }
};

std::pair<GeneratingVector, GeneratingVector> row_witness(const std::string& name) {
  for (const auto& row : catalog_rows())
    if (row.name == name) {
      const auto G = catalog_group(row.group);
      const auto w = find_witness(G, 1, row.orders1, row.orders2, character_table(G));
      if (!w) throw std::runtime_error("no witness for " + name);
      return *w;
    }
  throw std::runtime_error("no row " + name);
}

const IsotypicalFactor& nontrivial(const std::vector<IsotypicalFactor>& fs) {
  const IsotypicalFactor* hit = nullptr;
  for (const auto& f : fs)
    if (!f.trivial && f.reduced_dim > 0) {
      EXPECT_EQ(hit, nullptr) << "more than one nontrivial factor";
      hit = &f;
    }
  if (!hit) throw std::runtime_error("no nontrivial factor");
  return *hit;
}

}  // namespace

TEST(IsotypicalDimensions, ExplicitV4Example) {
  const V4Example ex;
  // order: chi_(0,0), chi_(0,1), chi_(1,0), chi_(1,1)
  EXPECT_EQ(ex.dims(ex.c1), (std::vector<std::int64_t>{1, 1, 0, 1}));
  EXPECT_EQ(ex.dims(ex.c2), (std::vector<std::int64_t>{1, 0, 1, 1}));
  EXPECT_EQ(genus(ex.c1), 3);
  EXPECT_EQ(genus(ex.c2), 3);
}

TEST(IsotypicalDimensions, QuaternionFactor) {
  const auto G = catalog_group("Q8");
  const auto gv = search_generating_vectors(G, 1, {2}).front();
  const auto& f = nontrivial(isotypical_dimensions(gv));
  EXPECT_EQ(f.reduced_dim, 2);
  EXPECT_EQ(f.multiplicity, 1);
  EXPECT_EQ(f.schur_index, 2);
  EXPECT_EQ(f.degree, 2);
  EXPECT_TRUE(f.quaternionic);
  EXPECT_EQ(f.inner, Rational(4));
}

TEST(IsotypicalDimensions, CorpusProperties) {
  for (const auto& gv : corpus::vectors()) {
    const auto ct = character_table(gv.group);
    const auto rational = rational_characters(ct);
    const auto fs = isotypical_dimensions(gv, ct, rational);
    ASSERT_EQ(fs.size(), rational.size());
    std::int64_t total = 0;
    for (const auto& f : fs) {
      EXPECT_GE(f.reduced_dim, 0);
      EXPECT_TRUE(is_integral(f.inner / 2));
      EXPECT_EQ(f.multiplicity * f.schur_index, ct.degrees[f.constituent]);
      if (f.trivial) {
        EXPECT_EQ(f.reduced_dim, gv.g0);
      }
      total += f.reduced_dim * f.multiplicity;
    }
    EXPECT_EQ(total, genus(gv));
  }
}

TEST(DecompositionLabel, Examples) {
  const V4Example ex;
  EXPECT_EQ(decomposition_label(ex.c1), "E x L_1 x L_2");

  const auto s3 = search_generating_vectors(catalog_group("S3"), 1, {3}).front();
  EXPECT_EQ(decomposition_label(s3), "E x L^2");

  const auto q8 = search_generating_vectors(catalog_group("Q8"), 1, {2}).front();
  EXPECT_EQ(decomposition_label(q8), "E x A");

  const auto spherical = search_generating_vectors(catalog_group("S3"), 0, {2, 2, 3}).front();
  try {
    decomposition_label(spherical);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BaseGenusUnsupported);
  }
}

TEST(Motive, Ranks) {
  const V4Example ex;
  const auto m = motive_h2_decomposition(ex.c1, ex.c2, ex.ct, ex.rational, 0);
  EXPECT_EQ(m.rank_U, 2);
  EXPECT_EQ(m.rank_Z1, 4);
  EXPECT_EQ(m.rank_Z2, 4);
  EXPECT_EQ(m.total(), 10);
  EXPECT_EQ(m.generic_k, 0);
  EXPECT_TRUE(m.generic_k_caveat);

  for (const auto& [name, eta] : std::vector<std::pair<std::string, std::int64_t>>{{"S3b", 3}, {"A4", 2}}) {
    const auto [a, b] = row_witness(name);
    const auto r = invariants(a, b);
    EXPECT_EQ(r.decomposition.rank_Z2, 4) << name;
    EXPECT_EQ(r.decomposition.eta, eta) << name;
  }
}

TEST(Motive, RankZ2EvenOnAllRows) {
  for (const auto& row : catalog_rows()) {
    const auto [a, b] = row_witness(row.name);
    const auto ct = character_table(a.group);
    const auto chi1 = oracle::hurwitz_by_lefschetz(a), chi2 = oracle::hurwitz_by_lefschetz(b);
    std::int64_t sum = 0;
    for (std::size_t c = 0; c < a.group.num_classes(); ++c)
      sum += static_cast<std::int64_t>(a.group.class_size(c)) * chi1[c] * chi2[c];
    ASSERT_EQ(sum % static_cast<std::int64_t>(a.group.order()), 0);
    const auto m = motive_h2_decomposition(a, b, ct, rational_characters(ct), 0);
    EXPECT_EQ(m.rank_Z1 + m.rank_Z2, sum / static_cast<std::int64_t>(a.group.order())) << row.name;
    EXPECT_GE(m.rank_Z2, 0);
    EXPECT_EQ(m.rank_Z2 % 2, 0);
  }
}

TEST(Pairing, V4) {
  const V4Example ex;
  const auto p = k3_pairing(ex.c1, ex.c2, ex.ct, ex.rational, 4);
  ASSERT_EQ(p.status, PairingStatus::Unique);
  const auto& m = p.matches.front();
  EXPECT_EQ(m.rational1, ex.chi({1, -1, -1, 1}));
  EXPECT_EQ(m.factor1.reduced_dim, 1);
  EXPECT_EQ(m.factor2.reduced_dim, 1);
  EXPECT_TRUE(m.self_dual);
  EXPECT_EQ(p.partner_label, "Km(L1 x L2)");
  EXPECT_FALSE(p.quaternionic);
}

TEST(Pairing, Quaternion) {
  const auto [a, b] = row_witness("Q8");
  const auto ct = character_table(a.group);
  const auto p = k3_pairing(a, b, ct, rational_characters(ct), 4);
  ASSERT_EQ(p.status, PairingStatus::Unique);
  EXPECT_EQ(ct.degrees[p.matches.front().constituent1], 2);
  EXPECT_EQ(p.matches.front().factor1.schur_index, 2);
  EXPECT_TRUE(p.quaternionic);
  EXPECT_EQ(p.partner_label, "Km(A)");
  EXPECT_NE(p.note.find("CM"), std::string::npos);
}

TEST(Pairing, SymmetricGroup) {
  const auto [a, b] = row_witness("S3a");
  const auto ct = character_table(a.group);
  const auto p = k3_pairing(a, b, ct, rational_characters(ct), 4);
  ASSERT_EQ(p.status, PairingStatus::Unique);
  const auto& m = p.matches.front();
  EXPECT_EQ(ct.degrees[m.constituent1], 2);
  EXPECT_EQ(m.factor1.reduced_dim, 1);
  EXPECT_EQ(m.factor1.multiplicity, 2);
  EXPECT_EQ(m.factor2.reduced_dim, 1);
  EXPECT_EQ(m.factor2.multiplicity, 2);
}

TEST(Pairing, GroupMismatch) {
  const V4Example ex;
  const auto other = search_generating_vectors(catalog_group("S3"), 1, {3}).front();
  try {
    k3_pairing(ex.c1, other, ex.ct, ex.rational, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GroupMismatch);
  }
}

TEST(QuotientGenus, MatchesCounting) {
  // g(C/H) by Riemann-Hurwitz for the H-cover C -> C/H: count H-orbits of points.
  for (const auto& gv : corpus::vectors()) {
    const auto& G = gv.group;
    for (std::size_t c = 1; c < G.order(); ++c) {
      const auto H = oracle::cyclic(G, c);
      std::int64_t ramification = 0;
      for (auto h : H)
        if (h != 0) ramification += static_cast<std::int64_t>(oracle::fixed_count(gv, h));
      // 2g - 2 = |H| (2g' - 2) + sum over nontrivial h of #Fix(h)
      const auto g = genus(gv);
      const auto n = static_cast<std::int64_t>(H.size());
      const auto two_g_prime = (2 * g - 2 - ramification) / n + 2;
      EXPECT_EQ(quotient_genus(gv, H) * 2, two_g_prime);
    }
  }
}
