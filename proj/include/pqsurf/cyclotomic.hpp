#pragma once

#include <pqsurf/error.hpp>
#include <pqsurf/integer.hpp>

#include <compare>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace pqsurf {

namespace detail {

// Exact quotient of poly by a monic divisor (both constant term first).
inline std::vector<Integer> divide_monic(std::vector<Integer> poly, const std::vector<Integer>& divisor) {
  const std::size_t dd = divisor.size() - 1;
  std::vector<Integer> quotient(poly.size() - dd, 0);
  for (std::size_t i = poly.size(); i-- > dd;) {
    const Integer c = poly[i];
    quotient[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) poly[i - dd + j] -= c * divisor[j];
  }
  return quotient;
}

inline std::vector<Integer> compute_cyclotomic_polynomial(std::uint64_t n) {
  std::map<std::uint64_t, std::vector<Integer>> phi;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    std::vector<Integer> poly(d + 1, 0);
    poly[0] = -1;
    poly[d] = 1;
    for (const auto& [k, f] : phi)
      if (d % k == 0) poly = divide_monic(std::move(poly), f);
    phi.emplace(d, std::move(poly));
  }
  return phi.at(n);
}

}  // namespace detail

// Coefficients of the n-th cyclotomic polynomial, constant term first.
inline const std::vector<Integer>& cyclotomic_polynomial(std::uint64_t n) {
  static std::mutex mutex;
  static std::map<std::uint64_t, std::vector<Integer>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, detail::compute_cyclotomic_polynomial(n)).first;
  return it->second;
}

// An element sum_a c_a z^a of Z[z], z = exp(2 pi i / e), carried as the
// coefficient vector (c_0, ..., c_{e-1}). The representation is not unique;
// equality reduces modulo the e-th cyclotomic polynomial. A character value
// built from an eigenvalue multiset has nonnegative coefficients equal to the
// eigenvalue multiplicities.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(std::uint64_t e) : coeffs_(e, 0) {
    if (e == 0) throw Error(ErrorKind::InvalidParameter, "cyclotomic order must be positive");
  }

  static Cyclotomic integer(std::uint64_t e, const Integer& value) {
    Cyclotomic c(e);
    c.coeffs_[0] = value;
    return c;
  }

  static Cyclotomic root(std::uint64_t e, std::int64_t exponent) {
    Cyclotomic c(e);
    c.coeffs_[static_cast<std::size_t>(mod(exponent, static_cast<std::int64_t>(e)))] = 1;
    return c;
  }

  std::uint64_t order() const { return coeffs_.size(); }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  const Integer& coefficient(std::size_t a) const { return coeffs_.at(a); }
  void add_root(std::int64_t exponent, const Integer& count = 1) {
    coeffs_[static_cast<std::size_t>(mod(exponent, static_cast<std::int64_t>(order())))] += count;
  }

  Cyclotomic& operator+=(const Cyclotomic& o) {
    check(o);
    for (std::size_t a = 0; a < coeffs_.size(); ++a) coeffs_[a] += o.coeffs_[a];
    return *this;
  }
  Cyclotomic& operator-=(const Cyclotomic& o) {
    check(o);
    for (std::size_t a = 0; a < coeffs_.size(); ++a) coeffs_[a] -= o.coeffs_[a];
    return *this;
  }
  Cyclotomic& operator*=(const Integer& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Integer& s) { return a *= s; }
  friend Cyclotomic operator*(const Integer& s, Cyclotomic a) { return a *= s; }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    a.check(b);
    const std::size_t e = a.coeffs_.size();
    Cyclotomic c(e);
    for (std::size_t i = 0; i < e; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < e; ++j)
        if (b.coeffs_[j] != 0) c.coeffs_[(i + j) % e] += a.coeffs_[i] * b.coeffs_[j];
    }
    return c;
  }

  // Image under z -> z^k (k coprime to e gives a Galois automorphism).
  Cyclotomic galois(std::int64_t k) const {
    Cyclotomic c(order());
    const auto e = static_cast<std::int64_t>(order());
    for (std::size_t a = 0; a < coeffs_.size(); ++a)
      c.coeffs_[static_cast<std::size_t>(mod(static_cast<std::int64_t>(a) * k, e))] += coeffs_[a];
    return c;
  }

  Cyclotomic conj() const { return galois(-1); }

  // Remainder modulo the cyclotomic polynomial: a unique representative of
  // length phi(e).
  std::vector<Integer> normal_form() const {
    const auto& phi = cyclotomic_polynomial(order());
    const std::size_t deg = phi.size() - 1;
    std::vector<Integer> r = coeffs_;
    for (std::size_t i = r.size(); i-- > deg;) {
      const Integer c = r[i];
      if (c == 0) continue;
      for (std::size_t j = 0; j <= deg; ++j) r[i - deg + j] -= c * phi[j];
    }
    r.resize(deg);
    return r;
  }

  bool is_zero() const {
    for (const auto& c : normal_form())
      if (c != 0) return false;
    return true;
  }

  std::optional<Integer> rational_value() const {
    auto nf = normal_form();
    for (std::size_t i = 1; i < nf.size(); ++i)
      if (nf[i] != 0) return std::nullopt;
    return nf.empty() ? Integer(0) : nf[0];
  }

  bool is_real() const { return *this == conj(); }

  // Sum of coefficients: the value at z = 1, i.e. the degree of an
  // eigenvalue multiset.
  Integer coefficient_sum() const {
    Integer s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    a.check(b);
    return a.normal_form() == b.normal_form();
  }

  // "2", "z^3", "z + 2*z^5" in the e-th root z, from the normal form.
  std::string to_string() const {
    const auto nf = normal_form();
    std::string out;
    for (std::size_t a = 0; a < nf.size(); ++a) {
      if (nf[a] == 0) continue;
      Integer c = nf[a];
      if (!out.empty()) {
        out += c < 0 ? " - " : " + ";
        if (c < 0) c = -c;
      } else if (c < 0 && a > 0) {
        out += "-";
        c = -c;
      }
      if (a == 0) {
        out += c.str();
      } else {
        if (c != 1) out += c.str() + "*";
        out += "z" + (a == 1 ? std::string() : "^" + std::to_string(a));
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  void check(const Cyclotomic& o) const {
    if (o.coeffs_.size() != coeffs_.size()) throw Error(ErrorKind::InvalidParameter, "cyclotomic orders differ");
  }

  std::vector<Integer> coeffs_;
};

}  // namespace pqsurf
