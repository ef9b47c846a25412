#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace pqsurf;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorKind::Parse;
}

IntegralLattice random_lattice(std::mt19937& rng, std::size_t max_parts) {
  std::uniform_int_distribution<int> kind(0, 3), coeff(-6, 6);
  std::uniform_int_distribution<std::size_t> parts(1, max_parts);
  std::vector<IntegralLattice> ls;
  for (std::size_t i = parts(rng); i > 0; --i) {
    switch (kind(rng)) {
      case 0: ls.push_back(lattice_U()); break;
      case 1: {
        auto c = coeff(rng);
        ls.push_back(rescale(lattice_U(), c == 0 ? 3 : c));
        break;
      }
      case 2: {
        auto v = coeff(rng);
        ls.push_back(lattice_rank1(v == 0 ? -2 : v));
        break;
      }
      default: {
        // a random symmetric 2x2 block
        IntMatrix g{{coeff(rng), coeff(rng)}, {0, coeff(rng)}};
        g[1][0] = g[0][1];
        if (g[0][0] * g[1][1] - g[0][1] * g[0][1] == 0) g[0][0] += 1;
        ls.emplace_back(g);
      }
    }
  }
  return direct_sum(ls);
}

}  // namespace

TEST(Lattice, Constructors) {
  const auto U = lattice_U();
  EXPECT_EQ(U.rank(), 2u);
  EXPECT_EQ(determinant(U), -1);

  const auto K3 = lattice_K3();
  EXPECT_EQ(K3.rank(), 22u);
  EXPECT_EQ(determinant(K3), -1);
  EXPECT_EQ(signature(K3), (std::pair<std::size_t, std::size_t>{3, 19}));
  EXPECT_TRUE(is_even(K3));

  const auto L1 = lattice_Lambda_d(1);
  EXPECT_EQ(L1.rank(), 21u);
  EXPECT_EQ(signature(L1), (std::pair<std::size_t, std::size_t>{2, 19}));

  EXPECT_EQ(make_lattice("K3_Lambda"), K3);
  EXPECT_EQ(make_lattice("Lambda_d(3)"), lattice_Lambda_d(3));
  EXPECT_EQ(make_lattice("U + rank1(-2)"), direct_sum({U, lattice_rank1(-2)}));
  EXPECT_EQ(make_lattice("E8_minus"), lattice_E8_minus());

  EXPECT_EQ(kind_of([] { lattice_Lambda_d(0); }), ErrorKind::InvalidParameter);
  EXPECT_EQ(kind_of([] { lattice_rank1(0); }), ErrorKind::InvalidParameter);
  EXPECT_EQ(kind_of([] { rescale(lattice_U(), 0); }), ErrorKind::InvalidParameter);
  EXPECT_EQ(kind_of([] { make_lattice("Z"); }), ErrorKind::InvalidParameter);
}

TEST(Lattice, E8IsTheRootLattice) {
  const auto E8 = lattice_E8_minus();
  EXPECT_EQ(determinant(E8), 1);
  EXPECT_EQ(signature(E8), (std::pair<std::size_t, std::size_t>{0, 8}));
  EXPECT_EQ(oracle::signature(E8.gram()), (std::pair<std::size_t, std::size_t>{0, 8}));
  EXPECT_TRUE(is_even(E8));
  std::size_t edges = 0;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i + 1; j < 8; ++j) edges += E8(i, j) != 0;
  EXPECT_EQ(edges, 7u);
}

TEST(Lattice, Signature) {
  EXPECT_EQ(signature(lattice_U()), (std::pair<std::size_t, std::size_t>{1, 1}));
  EXPECT_EQ(signature(lattice_E8_minus()), (std::pair<std::size_t, std::size_t>{0, 8}));
  // all diagonal entries zero: needs the two-step pivot
  const IntegralLattice hollow({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  EXPECT_EQ(signature(hollow), oracle::signature(hollow.gram()));
  const IntegralLattice degenerate({{1, 1}, {1, 1}});
  EXPECT_EQ(kind_of([&] { signature(degenerate); }), ErrorKind::Degenerate);
  EXPECT_EQ(kind_of([&] { discriminant_group(degenerate); }), ErrorKind::Degenerate);
}

TEST(Lattice, Parity) {
  EXPECT_TRUE(is_even(lattice_rank1(-6)));
  EXPECT_FALSE(is_even(IntegralLattice(IntMatrix{{1}})));
  EXPECT_TRUE(is_even(lattice_K3()));
}

TEST(Lattice, DiscriminantGroup) {
  EXPECT_EQ(discriminant_group(lattice_U()).ell(), 0u);
  for (int d = 1; d <= 6; ++d) {
    const auto r = discriminant_group(lattice_rank1(-2 * d));
    ASSERT_EQ(r.ell(), 1u);
    EXPECT_EQ(r.invariant_factors.front(), 2 * d);
    const auto L = discriminant_group(lattice_Lambda_d(d));
    ASSERT_EQ(L.ell(), 1u);
    EXPECT_EQ(L.invariant_factors.front(), 2 * d);
    EXPECT_EQ(boost::multiprecision::abs(determinant(lattice_Lambda_d(d))), 2 * d);
  }
  EXPECT_EQ(discriminant_group(lattice_K3()).ell(), 0u);
}

TEST(Lattice, RandomPropertySuite) {
  std::mt19937 rng(20240611);
  for (int t = 0; t < 200; ++t) {
    const auto A = random_lattice(rng, 4), B = random_lattice(rng, 3);
    const auto det = determinant(A);
    EXPECT_EQ(Rational(det), oracle::determinant(A.gram()));
    if (det == 0) continue;

    const auto sa = signature(A);
    EXPECT_EQ(sa, oracle::signature(A.gram()));
    EXPECT_EQ(sa.first + sa.second, A.rank());

    const auto D = discriminant_group(A);
    EXPECT_EQ(D.order(), boost::multiprecision::abs(det));
    EXPECT_EQ(D.ell(), oracle::ell(A.gram()));
    for (std::size_t i = 1; i < D.invariant_factors.size(); ++i)
      EXPECT_EQ(D.invariant_factors[i] % D.invariant_factors[i - 1], 0);

    if (determinant(B) != 0) {
      const auto sb = signature(B);
      EXPECT_EQ(signature(direct_sum({A, B})), (std::pair{sa.first + sb.first, sa.second + sb.second}));
    }

    for (int c : {2, -3}) {
      const auto R = rescale(A, c);
      Integer pow = 1;
      for (std::size_t i = 0; i < A.rank(); ++i) pow *= c;
      EXPECT_EQ(determinant(R), det * pow);
      EXPECT_EQ(signature(R), (c > 0 ? sa : std::pair{sa.second, sa.first}));
    }
  }
}

TEST(Nikulin, Examples) {
  const auto K3 = lattice_K3();
  EXPECT_EQ(nikulin_embeds(direct_sum({lattice_U(), lattice_rank1(-2)}), K3), EmbeddingDecision::Guaranteed);
  EXPECT_EQ(nikulin_embeds(lattice_Lambda_d(1), K3), EmbeddingDecision::CriterionNotSatisfied);
  EXPECT_EQ(nikulin_embeds(K3, K3), EmbeddingDecision::CriterionNotSatisfied);
  EXPECT_EQ(to_string(EmbeddingDecision::Guaranteed), "guaranteed");
  EXPECT_EQ(to_string(EmbeddingDecision::CriterionNotSatisfied), "criterion_not_satisfied");

  EXPECT_EQ(kind_of([&] { nikulin_embeds(IntegralLattice(IntMatrix{{1}}), K3); }), ErrorKind::NotEven);
  EXPECT_EQ(kind_of([&] { nikulin_embeds(lattice_U(), lattice_rank1(-2)); }), ErrorKind::NotUnimodular);
}

TEST(K3Embeddable, Examples) {
  const auto U = lattice_U(), E8 = lattice_E8_minus();
  // (2,8): U + U + six copies of <-2>
  std::vector<IntegralLattice> parts{U, U};
  for (int i = 0; i < 6; ++i) parts.push_back(lattice_rank1(-2));
  const auto m28 = direct_sum(parts);
  ASSERT_EQ(signature(m28), (std::pair<std::size_t, std::size_t>{2, 8}));
  EXPECT_EQ(k3_embeddable(m28), EmbeddingDecision::Guaranteed);

  // (2,12), rank 14, ell = 2: only the full criterion applies
  const auto m212 = direct_sum({U, U, E8, lattice_rank1(-2), lattice_rank1(-4)});
  ASSERT_EQ(signature(m212), (std::pair<std::size_t, std::size_t>{2, 12}));
  ASSERT_LE(discriminant_group(m212).ell(), 6u);
  EXPECT_EQ(k3_embeddable(m212), EmbeddingDecision::Guaranteed);

  EXPECT_EQ(k3_embeddable(lattice_K3()), EmbeddingDecision::CriterionNotSatisfied);
  EXPECT_EQ(kind_of([] { k3_embeddable(IntegralLattice(IntMatrix{{1}})); }), ErrorKind::NotEven);
}
