#pragma once

#include <pqsurf/cyclotomic.hpp>
#include <pqsurf/group.hpp>

#include <span>
#include <vector>

namespace pqsurf {

// A complex-valued function on the conjugacy classes of a group, with values
// in Z[z], z a primitive root of unity of order exponent(G).
struct ClassFunction {
  Group group;
  std::vector<Cyclotomic> values;

  static ClassFunction constant(const Group& G, const Integer& v) {
    return {G, std::vector<Cyclotomic>(G.num_classes(), Cyclotomic::integer(G.exponent(), v))};
  }

  static ClassFunction from_integers(const Group& G, std::span<const std::int64_t> v) {
    if (v.size() != G.num_classes()) throw Error(ErrorKind::InvalidParameter, "one value per class required");
    ClassFunction f{G, {}};
    for (auto x : v) f.values.push_back(Cyclotomic::integer(G.exponent(), x));
    return f;
  }

  std::size_t size() const { return values.size(); }
  const Cyclotomic& operator[](std::size_t c) const { return values[c]; }

  ClassFunction& operator+=(const ClassFunction& o) {
    check(o);
    for (std::size_t c = 0; c < values.size(); ++c) values[c] += o.values[c];
    return *this;
  }
  ClassFunction& operator-=(const ClassFunction& o) {
    check(o);
    for (std::size_t c = 0; c < values.size(); ++c) values[c] -= o.values[c];
    return *this;
  }
  ClassFunction& operator*=(const Integer& s) {
    for (auto& v : values) v *= s;
    return *this;
  }
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(const Integer& s, ClassFunction a) { return a *= s; }

  // Pointwise product (the character of a tensor product).
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
    a.check(b);
    ClassFunction out{a.group, {}};
    for (std::size_t c = 0; c < a.values.size(); ++c) out.values.push_back(a.values[c] * b.values[c]);
    return out;
  }

  ClassFunction conj() const {
    ClassFunction out{group, {}};
    for (const auto& v : values) out.values.push_back(v.conj());
    return out;
  }

  // g -> f(g^k)
  ClassFunction power(std::int64_t k) const {
    const auto pm = group.power_map(k);
    ClassFunction out{group, {}};
    for (std::size_t c = 0; c < values.size(); ++c) out.values.push_back(values[pm[c]]);
    return out;
  }

  // Integer values when every value is rational (throws otherwise).
  std::vector<Integer> integer_values() const {
    std::vector<Integer> out;
    for (const auto& v : values) {
      auto r = v.rational_value();
      if (!r) throw Error(ErrorKind::InvalidParameter, "class function is not rational-valued");
      out.push_back(*r);
    }
    return out;
  }

  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.group.same_as(b.group) && a.values == b.values;
  }

 private:
  void check(const ClassFunction& o) const {
    if (!group.same_as(o.group)) throw Error(ErrorKind::GroupMismatch, "class functions on different groups");
  }
};

/// (1/|G|) sum_g a(g) conj(b(g)), exact. Throws InvalidParameter when the
/// result is not rational.
inline Rational inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (!a.group.same_as(b.group)) throw Error(ErrorKind::GroupMismatch, "inner product across groups");
  const Group& G = a.group;
  Cyclotomic sum(G.exponent());
  for (std::size_t c = 0; c < G.num_classes(); ++c) sum += (a[c] * b[c].conj()) * Integer(G.class_size(c));
  auto value = sum.rational_value();
  if (!value) throw Error(ErrorKind::InvalidParameter, "inner product is not rational");
  return Rational(*value, Integer(G.order()));
}

/// Permutation character of G on the cosets of H: the value at g counts
/// x in G with x^-1 g x in H, divided by |H|.
inline ClassFunction induced_trivial(const Group& G, std::span<const std::size_t> subgroup) {
  std::vector<bool> in(G.order(), false);
  for (auto h : subgroup) in.at(h) = true;
  std::size_t h_order = 0;
  for (bool b : in) h_order += b;
  if (!in[0]) throw Error(ErrorKind::NotASubgroup, "identity missing");
  for (std::size_t a = 0; a < G.order(); ++a) {
    if (!in[a]) continue;
    for (std::size_t b = 0; b < G.order(); ++b)
      if (in[b] && !in[G.mul(a, b)]) throw Error(ErrorKind::NotASubgroup, "not closed under products");
  }
  ClassFunction f{G, {}};
  for (std::size_t c = 0; c < G.num_classes(); ++c) {
    const auto g = G.conjugacy_class(c).representative;
    std::size_t count = 0;
    for (std::size_t x = 0; x < G.order(); ++x) count += in[G.conjugate(g, x)];
    f.values.push_back(Cyclotomic::integer(G.exponent(), Integer(count / h_order)));
  }
  return f;
}

inline ClassFunction induced_trivial(const Group& G, std::span<const Permutation> subgroup) {
  std::vector<std::size_t> idx;
  for (const auto& h : subgroup) {
    if (!G.contains(h)) throw Error(ErrorKind::NotASubgroup, "element outside the group: " + h.to_cycles());
    idx.push_back(G.index_of(h));
  }
  return induced_trivial(G, std::span<const std::size_t>(idx));
}

inline ClassFunction regular_character(const Group& G) {
  const std::size_t trivial[] = {0};
  return induced_trivial(G, std::span<const std::size_t>(trivial));
}

}  // namespace pqsurf
