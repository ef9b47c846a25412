#pragma once

#include <pqsurf/error.hpp>
#include <pqsurf/integer.hpp>

#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pqsurf {

using IntMatrix = std::vector<std::vector<Integer>>;

// A free Z-module with a symmetric bilinear form, given by its Gram matrix.
class IntegralLattice {
 public:
  IntegralLattice() = default;
  explicit IntegralLattice(IntMatrix gram) : gram_(std::move(gram)) {
    for (const auto& row : gram_)
      if (row.size() != gram_.size()) throw Error(ErrorKind::InvalidParameter, "Gram matrix must be square");
    for (std::size_t i = 0; i < gram_.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (gram_[i][j] != gram_[j][i]) throw Error(ErrorKind::InvalidParameter, "Gram matrix must be symmetric");
  }

  std::size_t rank() const { return gram_.size(); }
  const IntMatrix& gram() const { return gram_; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return gram_[i][j]; }

  friend bool operator==(const IntegralLattice&, const IntegralLattice&) = default;

 private:
  IntMatrix gram_;
};

inline IntegralLattice lattice_U() { return IntegralLattice({{0, 1}, {1, 0}}); }

inline IntegralLattice lattice_rank1(const Integer& value) {
  if (value == 0) throw Error(ErrorKind::InvalidParameter, "rank-one lattice must be nondegenerate");
  return IntegralLattice({{value}});
}

// E8 with the form negated: diagonal -2, +1 on the edges of the Dynkin diagram.
inline IntegralLattice lattice_E8_minus() {
  // Bourbaki labelling: chain 1-3-4-5-6-7-8, node 2 attached to 4.
  static constexpr std::pair<int, int> edges[] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
  IntMatrix g(8, std::vector<Integer>(8, 0));
  for (std::size_t i = 0; i < 8; ++i) g[i][i] = -2;
  for (auto [a, b] : edges) g[a][b] = g[b][a] = 1;
  return IntegralLattice(std::move(g));
}

inline IntegralLattice direct_sum(const std::vector<IntegralLattice>& parts) {
  std::size_t n = 0;
  for (const auto& p : parts) n += p.rank();
  IntMatrix g(n, std::vector<Integer>(n, 0));
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.rank(); ++i)
      for (std::size_t j = 0; j < p.rank(); ++j) g[offset + i][offset + j] = p(i, j);
    offset += p.rank();
  }
  return IntegralLattice(std::move(g));
}

inline IntegralLattice rescale(const IntegralLattice& L, const Integer& c) {
  if (c == 0) throw Error(ErrorKind::InvalidParameter, "rescaling factor must be nonzero");
  IntMatrix g = L.gram();
  for (auto& row : g)
    for (auto& x : row) x *= c;
  return IntegralLattice(std::move(g));
}

// The K3 lattice E8(-1)^2 + U^3.
inline IntegralLattice lattice_K3() {
  const auto e8 = lattice_E8_minus();
  const auto u = lattice_U();
  return direct_sum({e8, e8, u, u, u});
}

// E8(-1)^2 + U^2 + <-2d>.
inline IntegralLattice lattice_Lambda_d(const Integer& d) {
  if (d < 1) throw Error(ErrorKind::InvalidParameter, "Lambda_d needs d >= 1");
  const auto e8 = lattice_E8_minus();
  const auto u = lattice_U();
  return direct_sum({e8, e8, u, u, lattice_rank1(-2 * d)});
}

/// Named constructors: "U", "E8_minus", "K3_Lambda", "Lambda_d(<d>)",
/// "rank1(<v>)". Sums are written with '+', e.g. "U + U + rank1(-2)".
inline IntegralLattice make_lattice(std::string_view spec) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  spec = trim(spec);
  if (auto plus = spec.find('+'); plus != std::string_view::npos && spec.substr(0, plus).find('(') == std::string_view::npos) {
    return direct_sum({make_lattice(spec.substr(0, plus)), make_lattice(spec.substr(plus + 1))});
  }
  auto argument = [&](std::string_view prefix) -> Integer {
    auto inner = trim(spec.substr(prefix.size()));
    if (inner.size() < 2 || inner.front() != '(' || inner.back() != ')')
      throw Error(ErrorKind::InvalidParameter, "expected " + std::string(prefix) + "(<integer>)");
    try {
      return Integer(std::string(trim(inner.substr(1, inner.size() - 2))));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidParameter, "bad integer in " + std::string(spec));
    }
  };
  if (spec == "U") return lattice_U();
  if (spec == "E8_minus") return lattice_E8_minus();
  if (spec == "K3_Lambda") return lattice_K3();
  if (spec.starts_with("Lambda_d")) return lattice_Lambda_d(argument("Lambda_d"));
  if (spec.starts_with("rank1")) return lattice_rank1(argument("rank1"));
  throw Error(ErrorKind::InvalidParameter, "unknown lattice \"" + std::string(spec) + "\"");
}

/// Fraction-free (Bareiss) determinant.
inline Integer determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

inline Integer determinant(const IntegralLattice& L) { return determinant(L.gram()); }

/// (s_+, s_-) by congruent diagonalization over Q.
inline std::pair<std::size_t, std::size_t> signature(const IntegralLattice& L) {
  const std::size_t n = L.rank();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(L(i, j));

  auto swap_index = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    for (auto& row : a) std::swap(row[i], row[j]);
  };
  std::size_t plus = 0, minus = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][piv] == 0) ++piv;
    if (piv == n) {
      // zero diagonal: e_i <- e_i + e_j turns a nonzero a_ij into a diagonal 2 a_ij
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = k; j < n; ++j)
          if (i != j && a[i][j] != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) throw Error(ErrorKind::Degenerate, "form is degenerate");
      for (std::size_t t = 0; t < n; ++t) a[pi][t] += a[pj][t];
      for (std::size_t t = 0; t < n; ++t) a[t][pi] += a[t][pj];
      piv = pi;
    }
    swap_index(k, piv);
    const Rational pivot = a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const Rational f = a[i][k] / pivot;
      for (std::size_t t = k; t < n; ++t) a[i][t] -= f * a[k][t];
      for (std::size_t t = k; t < n; ++t) a[t][i] -= f * a[t][k];
    }
    (pivot > 0 ? plus : minus) += 1;
  }
  return {plus, minus};
}

inline bool is_even(const IntegralLattice& L) {
  for (std::size_t i = 0; i < L.rank(); ++i)
    if (L(i, i) % 2 != 0) return false;
  return true;
}

// Diagonal of the Smith normal form (nonnegative, each dividing the next).
inline std::vector<Integer> smith_diagonal(IntMatrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<Integer> diag;
  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    for (;;) {
      // smallest nonzero entry of the trailing block to (k, k)
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = k; i < rows; ++i)
        for (std::size_t j = k; j < cols; ++j)
          if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) break;
      std::swap(a[k], a[pi]);
      for (auto& row : a) std::swap(row[k], row[pj]);
      bool clean = true;
      for (std::size_t i = k + 1; i < rows; ++i) {
        const Integer f = a[i][k] / a[k][k];
        for (std::size_t j = k; j < cols; ++j) a[i][j] -= f * a[k][j];
        clean = clean && a[i][k] == 0;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        const Integer f = a[k][j] / a[k][k];
        for (std::size_t i = k; i < rows; ++i) a[i][j] -= f * a[i][k];
        clean = clean && a[k][j] == 0;
      }
      if (!clean) continue;
      // the pivot must divide the rest of the block
      std::size_t bad = rows;
      for (std::size_t i = k + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = k + 1; j < cols; ++j)
          if (a[i][j] % a[k][k] != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = k; j < cols; ++j) a[k][j] += a[bad][j];
    }
    diag.push_back(abs(a[k][k]));
  }
  return diag;
}

// Discriminant group M^dual / M as a product of cyclic groups Z/d_i.
struct DiscriminantGroup {
  std::vector<Integer> invariant_factors;  // each >= 2, d_i | d_{i+1}
  std::size_t ell() const { return invariant_factors.size(); }
  Integer order() const {
    Integer o = 1;
    for (const auto& d : invariant_factors) o *= d;
    return o;
  }
};

inline DiscriminantGroup discriminant_group(const IntegralLattice& L) {
  DiscriminantGroup g;
  for (const auto& d : smith_diagonal(L.gram())) {
    if (d == 0) throw Error(ErrorKind::Degenerate, "form is degenerate");
    if (d > 1) g.invariant_factors.push_back(d);
  }
  return g;
}

enum class EmbeddingDecision { Guaranteed, CriterionNotSatisfied };

inline std::string_view to_string(EmbeddingDecision d) {
  return d == EmbeddingDecision::Guaranteed ? "guaranteed" : "criterion_not_satisfied";
}

/// Sufficient criterion for a unique primitive embedding of the even lattice
/// M into the even unimodular L: t_+ < s_+, t_- < s_-, and
/// rk L - rk M >= l(A_M) + 2. CriterionNotSatisfied does not rule out an
/// embedding.
inline EmbeddingDecision nikulin_embeds(const IntegralLattice& M, const IntegralLattice& L) {
  if (!is_even(M) || !is_even(L)) throw Error(ErrorKind::NotEven, "both lattices must be even");
  if (abs(determinant(L)) != 1) throw Error(ErrorKind::NotUnimodular, "target lattice must be unimodular");
  const auto [s_plus, s_minus] = signature(L);
  const auto [t_plus, t_minus] = signature(M);
  const bool signs = t_plus < s_plus && t_minus < s_minus;
  const bool room = L.rank() >= M.rank() + discriminant_group(M).ell() + 2;
  return signs && room ? EmbeddingDecision::Guaranteed : EmbeddingDecision::CriterionNotSatisfied;
}

/// Even lattices of signature (2, n), 0 <= n <= 8, embed primitively into the
/// K3 lattice; other signatures fall back to the general criterion.
inline EmbeddingDecision k3_embeddable(const IntegralLattice& M) {
  if (!is_even(M)) throw Error(ErrorKind::NotEven, "lattice must be even");
  const auto [plus, minus] = signature(M);
  if (plus == 2 && minus <= 8) return EmbeddingDecision::Guaranteed;
  return nikulin_embeds(M, lattice_K3());
}

}  // namespace pqsurf
