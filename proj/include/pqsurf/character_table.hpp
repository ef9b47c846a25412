#pragma once

#include <pqsurf/class_function.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace pqsurf {

// Complex irreducible characters of a finite group. Every value is stored as
// the eigenvalue multiset of the representing matrix: coefficient a of
// irreducibles[i][c] counts eigenvalues z^a, z = exp(2 pi i / exponent).
//
// Ordering: degree ascending, then value sequences in decreasing order of
// their cyclotomic normal forms (so the trivial character is first).
struct CharacterTable {
  Group group;
  std::vector<ClassFunction> irreducibles;
  std::vector<std::int64_t> degrees;
  std::int64_t prime = 0;  // modulus used by the modular construction

  std::size_t size() const { return irreducibles.size(); }
  const ClassFunction& operator[](std::size_t i) const { return irreducibles.at(i); }

  // Index of an irreducible equal to f, if any.
  std::optional<std::size_t> find(const ClassFunction& f) const {
    for (std::size_t i = 0; i < irreducibles.size(); ++i)
      if (irreducibles[i] == f) return i;
    return std::nullopt;
  }

  // Index of the dual character g -> chi(g^-1).
  std::size_t dual(std::size_t i) const { return find(irreducibles.at(i).power(-1)).value(); }
  bool is_self_dual(std::size_t i) const { return dual(i) == i; }
  bool is_real(std::size_t i) const { return irreducibles.at(i) == irreducibles.at(i).conj(); }
};

namespace detail {

// Matrices and vectors over F_p.
using ModVec = std::vector<std::int64_t>;

// Null space of the rows x cols matrix A (row-major), as basis vectors in F_p^cols.
inline std::vector<ModVec> null_space_mod(std::vector<ModVec> A, std::size_t cols, std::int64_t p) {
  const std::size_t rows = A.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && A[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(A[piv], A[r]);
    const auto inv = inv_mod(A[r][c], p);
    for (auto& x : A[r]) x = x * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      const auto f = A[i][c];
      for (std::size_t k = 0; k < cols; ++k) A[i][k] = mod(A[i][k] - f * A[r][k], p);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<ModVec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    ModVec v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = mod(-A[i][free], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::int64_t primitive_root(std::int64_t p) {
  std::vector<std::int64_t> factors;
  std::int64_t m = p - 1;
  for (std::int64_t q = 2; q * q <= m; ++q)
    if (m % q == 0) {
      factors.push_back(q);
      while (m % q == 0) m /= q;
    }
  if (m > 1) factors.push_back(m);
  for (std::int64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : factors) ok = ok && pow_mod(g, (p - 1) / q, p) != 1;
    if (ok) return g;
  }
  return 1;
}

// Smallest prime p = 1 (mod e) with p > 2 * ceil(sqrt(n)).
inline std::int64_t dixon_prime(std::int64_t e, std::int64_t n) {
  const auto root = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  std::int64_t p = e + 1;
  while (p <= 2 * root || !is_prime(p)) p += e;
  return p;
}

}  // namespace detail

/// Character table by Dixon's method: split the class-multiplication
/// matrices into common eigenvectors modulo a prime p = 1 (mod exponent),
/// recover each character modulo p, and lift every value to its exact
/// eigenvalue multiset by the inverse discrete Fourier transform on <g>.
inline CharacterTable character_table(const Group& G) {
  using detail::ModVec;
  const std::size_t r = G.num_classes();
  const auto n = static_cast<std::int64_t>(G.order());
  const auto e = static_cast<std::int64_t>(G.exponent());
  const std::int64_t p = detail::dixon_prime(e, n);

  std::vector<std::int64_t> class_sizes(r);
  for (std::size_t c = 0; c < r; ++c) class_sizes[c] = static_cast<std::int64_t>(G.class_size(c));

  // M_j[i][k] = #{x in C_j : x^-1 z_k in C_i}, z_k the representative of C_k.
  auto class_matrix = [&](std::size_t j) {
    std::vector<ModVec> M(r, ModVec(r, 0));
    for (std::size_t k = 0; k < r; ++k) {
      const auto z = G.conjugacy_class(k).representative;
      for (auto x : G.conjugacy_class(j).members) ++M[G.class_of(G.mul(G.inv(x), z))][k];
    }
    return M;
  };

  // Common eigenspaces, each given by a basis of column vectors.
  std::vector<std::vector<ModVec>> spaces;
  {
    std::vector<ModVec> full;
    for (std::size_t i = 0; i < r; ++i) {
      ModVec v(r, 0);
      v[i] = 1;
      full.push_back(v);
    }
    spaces.push_back(std::move(full));
  }
  for (std::size_t j = 1; j < r; ++j) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const auto& s) { return s.size() == 1; })) break;
    const auto M = class_matrix(j);
    std::vector<std::vector<ModVec>> next;
    for (auto& basis : spaces) {
      if (basis.size() == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      const std::size_t s = basis.size();
      std::vector<ModVec> image(s, ModVec(r, 0));
      for (std::size_t t = 0; t < s; ++t)
        for (std::size_t i = 0; i < r; ++i) {
          std::int64_t acc = 0;
          for (std::size_t k = 0; k < r; ++k) acc = (acc + M[i][k] * basis[t][k]) % p;
          image[t][i] = acc;
        }
      std::size_t found = 0;
      for (std::int64_t lambda = 0; lambda < p && found < s; ++lambda) {
        std::vector<ModVec> A(r, ModVec(s, 0));
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t t = 0; t < s; ++t) A[i][t] = mod(image[t][i] - lambda * basis[t][i], p);
        auto kernel = detail::null_space_mod(std::move(A), s, p);
        if (kernel.empty()) continue;
        std::vector<ModVec> eigen;
        for (const auto& a : kernel) {
          ModVec v(r, 0);
          for (std::size_t t = 0; t < s; ++t)
            for (std::size_t i = 0; i < r; ++i) v[i] = (v[i] + a[t] * basis[t][i]) % p;
          eigen.push_back(std::move(v));
        }
        found += eigen.size();
        next.push_back(std::move(eigen));
      }
      if (found != s) throw Error(ErrorKind::InvalidParameter, "class algebra did not split modulo p");
    }
    spaces = std::move(next);
  }
  for (const auto& s : spaces)
    if (s.size() != 1) throw Error(ErrorKind::InvalidParameter, "class algebra eigenspaces did not separate");

  const auto inverse_class = G.power_map(-1);
  const std::int64_t z_e = pow_mod(detail::primitive_root(p), (p - 1) / e, p);
  const auto max_degree = static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(n))));

  CharacterTable table{G, {}, {}, p};
  for (const auto& s : spaces) {
    ModVec omega = s.front();
    const auto norm = inv_mod(omega[0], p);
    for (auto& x : omega) x = x * norm % p;

    // sum_i omega_i omega_i* / |C_i| = |G| / deg^2
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < r; ++i)
      acc = (acc + omega[i] * omega[inverse_class[i]] % p * inv_mod(class_sizes[i], p)) % p;
    const auto deg_sq = mod(n % p * inv_mod(acc, p), p);
    std::int64_t degree = 0;
    for (std::int64_t d = 1; d <= max_degree; ++d)
      if (d * d % p == deg_sq) degree = d;
    if (degree == 0) throw Error(ErrorKind::InvalidParameter, "no degree lift modulo p");

    ModVec chi(r);
    for (std::size_t i = 0; i < r; ++i) chi[i] = omega[i] * degree % p * inv_mod(class_sizes[i], p) % p;

    ClassFunction f{G, {}};
    for (std::size_t c = 0; c < r; ++c) {
      const auto rep = G.conjugacy_class(c).representative;
      const auto m = static_cast<std::int64_t>(G.element_order(rep));
      const auto zeta = pow_mod(z_e, e / m, p);
      const auto inv_m = inv_mod(m, p);
      Cyclotomic value(static_cast<std::uint64_t>(e));
      std::int64_t total = 0;
      for (std::int64_t alpha = 0; alpha < m; ++alpha) {
        std::int64_t acc2 = 0;
        for (std::int64_t t = 0; t < m; ++t) {
          const auto cls = G.class_of(G.pow(rep, t));
          acc2 = (acc2 + chi[cls] * pow_mod(zeta, mod(-alpha * t, m), p)) % p;
        }
        const auto mult = acc2 * inv_m % p;
        if (mult > degree) throw Error(ErrorKind::InvalidParameter, "eigenvalue multiplicity lift failed");
        total += mult;
        value.add_root(alpha * (e / m), mult);
      }
      if (total != degree) throw Error(ErrorKind::InvalidParameter, "eigenvalue multiset has wrong size");
      f.values.push_back(std::move(value));
    }
    table.irreducibles.push_back(std::move(f));
    table.degrees.push_back(degree);
  }

  std::vector<std::size_t> order(table.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<std::vector<Integer>>> keys;
  for (const auto& chi : table.irreducibles) {
    std::vector<std::vector<Integer>> k;
    for (const auto& v : chi.values) k.push_back(v.normal_form());
    keys.push_back(std::move(k));
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (table.degrees[a] != table.degrees[b]) return table.degrees[a] < table.degrees[b];
    return keys[a] > keys[b];
  });
  CharacterTable sorted{G, {}, {}, p};
  for (auto i : order) {
    sorted.irreducibles.push_back(table.irreducibles[i]);
    sorted.degrees.push_back(table.degrees[i]);
  }
  return sorted;
}

/// Frobenius-Schur indicator (1/|G|) sum_g chi(g^2).
inline int frobenius_schur(const CharacterTable& ct, std::size_t i) {
  const Group& G = ct.group;
  const auto& chi = ct[i];
  const auto squares = G.power_map(2);
  Cyclotomic sum(G.exponent());
  for (std::size_t c = 0; c < G.num_classes(); ++c) sum += chi[squares[c]] * Integer(G.class_size(c));
  const auto v = sum.rational_value();
  if (!v || *v % G.order() != 0) throw Error(ErrorKind::InvalidParameter, "indicator is not an integer");
  return static_cast<int>(to_int64(*v / G.order()));
}

/// Eigenvalue multiplicities of rho_i(g) as residues modulo ord(g), recovered
/// exactly from chi_i(g^t), t = 0..ord(g)-1.
inline std::map<std::int64_t, std::int64_t> eigenvalue_multiplicities(const CharacterTable& ct, std::size_t i,
                                                                      const Permutation& g) {
  const Group& G = ct.group;
  const auto a = G.index_of(g);
  const auto m = static_cast<std::int64_t>(G.element_order(a));
  const auto e = static_cast<std::int64_t>(G.exponent());
  const auto& chi = ct[i];
  std::map<std::int64_t, std::int64_t> out;
  for (std::int64_t alpha = 0; alpha < m; ++alpha) {
    Cyclotomic sum(static_cast<std::uint64_t>(e));
    for (std::int64_t t = 0; t < m; ++t)
      sum += chi[G.class_of(G.pow(a, t))] * Cyclotomic::root(static_cast<std::uint64_t>(e), -alpha * t * (e / m));
    const auto v = sum.rational_value();
    if (!v || *v % m != 0) throw Error(ErrorKind::InvalidParameter, "eigenvalue transform is not integral");
    const auto mult = to_int64(*v / m);
    if (mult != 0) out[alpha] = mult;
  }
  return out;
}

// A Galois orbit of complex irreducibles together with the rational
// character psi = m * (sum over the orbit).
struct RationalCharacter {
  ClassFunction psi;
  std::vector<std::size_t> orbit;  // ascending indices into the character table
  int schur_index = 1;
  int multiplicity_n = 1;          // deg chi = schur_index * multiplicity_n
  int frobenius_schur = 0;         // of the first constituent
  bool real_valued = false;        // constituents are real-valued
  bool schur_index_unverified = false;

  std::size_t representative() const { return orbit.front(); }
  bool is_trivial() const { return orbit.front() == 0; }
  bool quaternionic() const { return schur_index == 2; }
};

/// Galois orbits under chi -> (g -> chi(g^k)), gcd(k, exponent) = 1. The Schur
/// index is taken as 2 exactly for real-valued constituents with indicator -1,
/// and 1 otherwise; non-real orbits of degree > 1 are flagged as unverified.
inline std::vector<RationalCharacter> rational_characters(const CharacterTable& ct) {
  const Group& G = ct.group;
  const auto e = static_cast<std::int64_t>(G.exponent());
  std::vector<bool> used(ct.size(), false);
  std::vector<RationalCharacter> out;
  for (std::size_t i = 0; i < ct.size(); ++i) {
    if (used[i]) continue;
    std::vector<std::size_t> orbit;
    for (std::int64_t k = 1; k <= e; ++k) {
      if (std::gcd(k, e) != 1) continue;
      const auto j = ct.find(ct[i].power(k));
      if (!j) throw Error(ErrorKind::InvalidParameter, "Galois image is not irreducible");
      if (std::find(orbit.begin(), orbit.end(), *j) == orbit.end()) orbit.push_back(*j);
    }
    std::sort(orbit.begin(), orbit.end());
    for (auto j : orbit) used[j] = true;

    RationalCharacter rc;
    rc.orbit = orbit;
    rc.frobenius_schur = frobenius_schur(ct, i);
    rc.real_valued = ct.is_real(i);
    rc.schur_index = (rc.real_valued && rc.frobenius_schur == -1) ? 2 : 1;
    rc.schur_index_unverified = !rc.real_valued && ct.degrees[i] > 1;
    rc.multiplicity_n = static_cast<int>(ct.degrees[i] / rc.schur_index);
    rc.psi = ClassFunction::constant(G, 0);
    for (auto j : orbit) rc.psi += ct[j];
    rc.psi *= Integer(rc.schur_index);
    (void)rc.psi.integer_values();  // throws unless rational
    out.push_back(std::move(rc));
  }
  return out;
}

}  // namespace pqsurf
