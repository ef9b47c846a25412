#include "corpus.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace pqsurf;

namespace {

Permutation cyc(std::string_view s) { return Permutation::from_cycles(s, 4); }

std::pair<GeneratingVector, GeneratingVector> v4_pair() {
  const auto G = catalog_group("V4");
  const auto e10 = cyc("(1,2)(3,4)"), e01 = cyc("(1,3)(2,4)"), id = Permutation::identity(4);
  return {GeneratingVector::from_permutations(G, 1, {{e01, id}}, {e10, e10}, {2, 2}),
          GeneratingVector::from_permutations(G, 1, {{e10, id}}, {e01, e01}, {2, 2})};
}

std::pair<GeneratingVector, GeneratingVector> row_witness(const TableRow& row) {
  const auto G = catalog_group(row.group);
  const auto w = find_witness(G, 1, row.orders1, row.orders2, character_table(G));
  if (!w) throw std::runtime_error("no witness for " + row.name);
  return *w;
}

std::pair<GeneratingVector, GeneratingVector> row_witness(const std::string& name) {
  for (const auto& row : catalog_rows())
    if (row.name == name) return row_witness(row);
  throw std::runtime_error("no row " + name);
}

std::multiset<oracle::Singularity> as_multiset(const std::vector<QuotientSingularity>& s) {
  std::multiset<oracle::Singularity> out;
  for (const auto& x : s) out.insert({x.n, x.q});
  return out;
}

}  // namespace

TEST(HirzebruchJung, Examples) {
  EXPECT_EQ(hirzebruch_jung(2, 1), (std::vector<std::int64_t>{2}));
  EXPECT_EQ(hirzebruch_jung(3, 2), (std::vector<std::int64_t>{2, 2}));
  EXPECT_EQ(hirzebruch_jung(3, 1), (std::vector<std::int64_t>{3}));
  try {
    hirzebruch_jung(4, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotCoprime);
  }
  try {
    hirzebruch_jung(3, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OutOfRange);
  }
  EXPECT_THROW(hirzebruch_jung(1, 0), Error);
}

TEST(HirzebruchJung, Reconstructs) {
  for (std::int64_t n = 2; n <= 40; ++n)
    for (std::int64_t q = 1; q < n; ++q) {
      if (std::gcd(n, q) != 1) continue;
      const auto chain = hirzebruch_jung(n, q);
      ASSERT_FALSE(chain.empty());
      for (auto b : chain) EXPECT_GE(b, 2);
      EXPECT_EQ(oracle::continued_fraction(chain), Rational(n, q));
    }
}

TEST(Singularities, Examples) {
  const auto [a, b] = v4_pair();
  EXPECT_TRUE(quotient_singularities(a, b).empty());

  const auto [s1, s2] = row_witness("S3b");
  const auto s3 = quotient_singularities(s1, s2);
  EXPECT_EQ(as_multiset(s3), (std::multiset<oracle::Singularity>{{3, 1}, {3, 2}}));
  EXPECT_EQ(singularity_summary(s3), "1/3(1,1) + 1/3(1,2)");

  const auto [a1, a2] = row_witness("A4");
  const auto a4 = quotient_singularities(a1, a2);
  EXPECT_EQ(as_multiset(a4), (std::multiset<oracle::Singularity>{{2, 1}, {2, 1}}));
  EXPECT_EQ(singularity_summary(a4), "2 x 1/2(1,1)");
  EXPECT_EQ(eta(a4), 2);
}

TEST(Singularities, MatchOrbitEnumeration) {
  for (const auto& row : catalog_rows()) {
    SCOPED_TRACE(row.name);
    const auto G = catalog_group(row.group);
    const auto v1 = search_generating_vectors(G, 1, row.orders1);
    const auto v2 = search_generating_vectors(G, 1, row.orders2);
    std::size_t pairs = 0;
    for (const auto& a : v1)
      for (const auto& b : v2) {
        if (++pairs > 12) break;
        const auto got = quotient_singularities(a, b);
        EXPECT_EQ(as_multiset(got), oracle::singularities(a, b));
        std::int64_t chain_total = 0;
        for (const auto& s : got) {
          EXPECT_EQ(s.hj_chain, hirzebruch_jung(s.n, s.q));
          chain_total += static_cast<std::int64_t>(s.hj_chain.size());
        }
        EXPECT_EQ(eta(got), chain_total);
      }
  }
}

TEST(ChevalleyWeil, Examples) {
  const auto C2 = catalog_group("C2");
  const auto unbranched = GeneratingVector::from_permutations(C2, 1, {{C2.element(1), C2.element(0)}}, {}, {});
  EXPECT_EQ(chevalley_weil(unbranched), (std::vector<std::int64_t>{1, 0}));

  const auto [a, b] = v4_pair();
  const auto ct = character_table(a.group);
  const auto n = chevalley_weil(a, ct);
  auto at = [&](std::vector<std::int64_t> v) { return n[*ct.find(ClassFunction::from_integers(a.group, v))]; };
  EXPECT_EQ(at({1, 1, 1, 1}), 1);
  EXPECT_EQ(at({1, -1, 1, -1}), 1);  // chi_(0,1)
  EXPECT_EQ(at({1, 1, -1, -1}), 0);  // chi_(1,0)
  EXPECT_EQ(at({1, -1, -1, 1}), 1);  // chi_(1,1)

  // S3 order: trivial, sign, standard
  const auto s3 = search_generating_vectors(catalog_group("S3"), 1, {3}).front();
  EXPECT_EQ(chevalley_weil(s3), (std::vector<std::int64_t>{1, 0, 1}));
}

TEST(ChevalleyWeil, CW1AndTraceFormulaOnCorpus) {
  for (const auto& gv : corpus::vectors()) {
    const auto ct = character_table(gv.group);
    const auto n = chevalley_weil(gv, ct);
    std::int64_t dim = 0;
    for (std::size_t i = 0; i < n.size(); ++i) {
      EXPECT_GE(n[i], 0);
      dim += n[i] * ct.degrees[i];
    }
    EXPECT_EQ(dim, genus(gv));
    EXPECT_EQ(n[0], gv.g0);

    const auto omega = holomorphic_character(gv, ct);
    EXPECT_EQ(omega + omega.conj(), hurwitz_character(gv));

    const auto trace = oracle::eichler_trace(gv);
    for (std::size_t c = 0; c < trace.size(); ++c)
      EXPECT_NEAR(std::abs(oracle::numeric(omega[c]) - trace[c]), 0.0, 1e-9)
          << gv.group.name() << " class " << c;
  }
}

TEST(EulerCharacteristic, Examples) {
  const auto [a, b] = v4_pair();
  const auto v4 = euler_characteristic(a, b);
  EXPECT_EQ(v4.quotient, 4);
  EXPECT_EQ(v4.resolved, 4);

  const auto [s1, s2] = row_witness("S3b");
  const auto s3 = euler_characteristic(s1, s2);
  EXPECT_EQ(s3.quotient, 4);
  EXPECT_EQ(s3.resolved, 7);

  const auto [a1, a2] = row_witness("A4");
  const auto a4 = euler_characteristic(a1, a2);
  EXPECT_EQ(a4.quotient, 4);
  EXPECT_EQ(a4.resolved, 6);
}

TEST(EulerCharacteristic, LefschetzAverage) {
  for (const auto& row : catalog_rows()) {
    const auto [a, b] = row_witness(row);
    const auto& G = a.group;
    std::int64_t sum = (2 - 2 * oracle::genus_by_counting(a)) * (2 - 2 * oracle::genus_by_counting(b));
    for (std::size_t g = 1; g < G.order(); ++g)
      sum += static_cast<std::int64_t>(oracle::fixed_count(a, g) * oracle::fixed_count(b, g));
    ASSERT_EQ(sum % static_cast<std::int64_t>(G.order()), 0) << row.name;
    EXPECT_EQ(euler_characteristic(a, b).quotient, sum / static_cast<std::int64_t>(G.order())) << row.name;
  }
}

TEST(Invariants, Examples) {
  const auto [a, b] = v4_pair();
  const auto v4 = invariants(a, b);
  EXPECT_EQ(v4.p_g, 2);
  EXPECT_EQ(v4.q, 2);
  EXPECT_EQ(v4.K2, 8);
  EXPECT_EQ(v4.family_dim, 4);
  EXPECT_EQ(v4.b2, 10);
  EXPECT_FALSE(v4.not_pg_q2);

  const auto [s1, s2] = row_witness("S3b");
  const auto s3 = invariants(s1, s2);
  EXPECT_EQ(s3.K2, 5);
  EXPECT_EQ(s3.eta, 3);
  EXPECT_EQ(s3.family_dim, 2);

  const auto [a1, a2] = row_witness("A4");
  const auto a4 = invariants(a1, a2);
  EXPECT_EQ(a4.K2, 6);
  EXPECT_EQ(a4.eta, 2);
  EXPECT_EQ(a4.family_dim, 2);
}

TEST(Invariants, ConsistencyOnAllPairs) {
  for (const auto& row : catalog_rows()) {
    SCOPED_TRACE(row.name);
    const auto G = catalog_group(row.group);
    const auto ct = character_table(G);
    const auto rational = rational_characters(ct);
    for (const auto& a : search_generating_vectors(G, 1, row.orders1))
      for (const auto& b : search_generating_vectors(G, 1, row.orders2)) {
        const auto r = invariants(a, b, ct, rational);
        EXPECT_EQ(r.e + r.K2, 12 * r.chi);
        EXPECT_EQ(r.b2, r.e - 2 + 4 * r.q);
        EXPECT_EQ(r.decomposition.total(), r.b2);
        EXPECT_EQ(r.not_pg_q2, r.p_g != 2 || r.q != 2);
        if (!r.not_pg_q2) {
          EXPECT_EQ(r.rank_new, 12 - r.K2);
        }
      }
  }
}

TEST(Invariants, FlagsNonPgQ2) {
  const auto gv = search_generating_vectors(catalog_group("S3"), 0, {2, 2, 3}).front();
  const auto r = invariants(gv, gv);
  EXPECT_EQ(r.q, 0);
  EXPECT_TRUE(r.not_pg_q2);
  EXPECT_EQ(r.rank_new_note, std::string(kRankNewNote));
}

TEST(Invariants, FamilyDimensionTerms) {
  const auto sph = search_generating_vectors(catalog_group("C4xC2semiC2"), 0, {2, 2, 2, 4}).front();
  EXPECT_EQ(family_dimension_term(sph), 1);
  const auto ell = search_generating_vectors(catalog_group("V4"), 1, {2, 2}).front();
  EXPECT_EQ(family_dimension_term(ell), 2);
  const auto C2 = catalog_group("C2");
  const auto g2 = GeneratingVector::from_permutations(
      C2, 2, {{C2.element(1), C2.element(0)}, {C2.element(0), C2.element(0)}}, {C2.element(1), C2.element(1)}, {2, 2});
  EXPECT_EQ(family_dimension_term(g2), 5);
}

TEST(Invariants, GroupMismatch) {
  const auto [a, b] = v4_pair();
  const auto other = search_generating_vectors(catalog_group("S3"), 1, {3}).front();
  try {
    euler_characteristic(a, other);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GroupMismatch);
  }
  EXPECT_THROW(quotient_singularities(other, b), Error);
}
