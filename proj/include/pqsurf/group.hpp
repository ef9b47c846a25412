#pragma once

#include <pqsurf/error.hpp>
#include <pqsurf/integer.hpp>
#include <pqsurf/permutation.hpp>

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace pqsurf {

inline constexpr std::size_t kDefaultOrderCap = 10000;
inline constexpr std::size_t kMaxDegree = 32;

struct ConjugacyClass {
  std::size_t representative;         // element index; the lexicographically least member
  std::vector<std::size_t> members;   // ascending element indices
  std::uint64_t element_order;
};

// A finite permutation group with its conjugacy classes. Immutable; copies
// share the underlying tables.
//
// Elements are indexed in lexicographic order of their image sequences, so
// index 0 is always the identity. Classes are ordered identity first, then by
// (element order, least member).
class Group {
 public:
  Group() = default;

  std::size_t order() const { return data_->elements.size(); }
  std::size_t degree() const { return data_->degree; }
  std::uint64_t exponent() const { return data_->exponent; }
  const std::string& name() const { return data_->name; }
  const std::vector<Permutation>& generators() const { return data_->generators; }
  const std::vector<Permutation>& elements() const { return data_->elements; }
  const Permutation& element(std::size_t i) const { return data_->elements.at(i); }

  bool contains(const Permutation& p) const { return find(p) < order(); }

  // Index of p; throws NotInGroup.
  std::size_t index_of(const Permutation& p) const {
    const std::size_t i = find(p);
    if (i >= order()) throw Error(ErrorKind::NotInGroup, p.to_cycles());
    return i;
  }

  std::size_t mul(std::size_t a, std::size_t b) const {
    if (!data_->table.empty()) return data_->table[a * order() + b];
    return find(data_->elements[a] * data_->elements[b]);
  }
  std::size_t inv(std::size_t a) const { return data_->inverse[a]; }
  std::size_t pow(std::size_t a, std::int64_t k) const {
    const auto n = static_cast<std::int64_t>(data_->orders[a]);
    std::int64_t e = mod(k, n);
    std::size_t result = 0;
    for (std::int64_t t = 0; t < e; ++t) result = mul(result, a);
    return result;
  }
  // x^-1 a x
  std::size_t conjugate(std::size_t a, std::size_t x) const { return mul(mul(inv(x), a), x); }
  // a^-1 b^-1 a b
  std::size_t commutator(std::size_t a, std::size_t b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }

  std::uint64_t element_order(std::size_t a) const { return data_->orders[a]; }

  std::size_t num_classes() const { return data_->classes.size(); }
  const std::vector<ConjugacyClass>& classes() const { return data_->classes; }
  const ConjugacyClass& conjugacy_class(std::size_t c) const { return data_->classes.at(c); }
  std::size_t class_of(std::size_t a) const { return data_->class_of[a]; }
  std::size_t class_size(std::size_t c) const { return data_->classes.at(c).members.size(); }
  std::size_t centralizer_order(std::size_t a) const { return order() / class_size(class_of(a)); }

  // Class index of rep^k for each class.
  std::vector<std::size_t> power_map(std::int64_t k) const {
    std::vector<std::size_t> out(num_classes());
    for (std::size_t c = 0; c < num_classes(); ++c) out[c] = class_of(pow(data_->classes[c].representative, k));
    return out;
  }

  // Subgroup generated by the given element indices, as ascending indices.
  std::vector<std::size_t> generated_subgroup(std::span<const std::size_t> gens) const {
    std::vector<bool> in(order(), false);
    std::vector<std::size_t> members{0};
    in[0] = true;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (auto g : gens) {
        const auto p = mul(members[head], g);
        if (!in[p]) {
          in[p] = true;
          members.push_back(p);
        }
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  }

  bool same_as(const Group& other) const {
    return data_ == other.data_ || (data_ && other.data_ && degree() == other.degree() && elements() == other.elements());
  }

  bool valid() const { return static_cast<bool>(data_); }

  friend Group group_from_generators(std::span<const Permutation> gens, std::size_t order_cap, std::string name);

 private:
  struct Data {
    std::string name;
    std::size_t degree = 0;
    std::vector<Permutation> generators;
    std::vector<Permutation> elements;
    std::vector<std::uint32_t> table;
    std::vector<std::size_t> inverse;
    std::vector<std::uint64_t> orders;
    std::vector<ConjugacyClass> classes;
    std::vector<std::size_t> class_of;
    std::uint64_t exponent = 1;
  };

  std::size_t find(const Permutation& p) const {
    const auto& els = data_->elements;
    auto it = std::lower_bound(els.begin(), els.end(), p);
    if (it == els.end() || *it != p) return els.size();
    return static_cast<std::size_t>(it - els.begin());
  }

  std::shared_ptr<const Data> data_;
};

/// Closes the generators under composition and derives the class structure.
/// Throws NonPermutation / SizeLimit / InvalidParameter.
inline Group group_from_generators(std::span<const Permutation> gens, std::size_t order_cap = kDefaultOrderCap,
                                   std::string name = {}) {
  if (gens.empty()) throw Error(ErrorKind::InvalidParameter, "at least one generator is required");
  const std::size_t degree = gens.front().degree();
  if (degree == 0 || degree > kMaxDegree)
    throw Error(ErrorKind::InvalidParameter, "degree must be in 1.." + std::to_string(kMaxDegree));
  for (const auto& g : gens)
    if (g.degree() != degree) throw Error(ErrorKind::InvalidParameter, "generators have unequal degree");

  auto data = std::make_shared<Group::Data>();
  data->name = std::move(name);
  data->degree = degree;
  data->generators.assign(gens.begin(), gens.end());

  // Breadth-first closure; right multiplication by generators reaches every element.
  std::vector<Permutation> found{Permutation::identity(degree)};
  std::vector<Permutation> sorted = found;
  auto seen = [&](const Permutation& p) { return std::binary_search(sorted.begin(), sorted.end(), p); };
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (const auto& g : gens) {
      Permutation p = found[head] * g;
      if (seen(p)) continue;
      if (found.size() >= order_cap)
        throw Error(ErrorKind::SizeLimit, "group order exceeds " + std::to_string(order_cap));
      sorted.insert(std::upper_bound(sorted.begin(), sorted.end(), p), p);
      found.push_back(std::move(p));
    }
  }
  data->elements = std::move(sorted);
  const std::size_t n = data->elements.size();

  Group group;
  group.data_ = data;

  if (n <= 1024) {
    data->table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        data->table[a * n + b] = static_cast<std::uint32_t>(group.find(data->elements[a] * data->elements[b]));
  }
  data->inverse.resize(n);
  data->orders.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    data->inverse[a] = group.find(data->elements[a].inverse());
    data->orders[a] = data->elements[a].order();
    data->exponent = std::lcm(data->exponent, data->orders[a]);
  }

  // Conjugacy classes: orbits under conjugation by the generators.
  std::vector<std::size_t> gen_idx;
  for (const auto& g : gens) gen_idx.push_back(group.find(g));
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> class_of(n, kUnassigned);
  std::vector<ConjugacyClass> classes;
  for (std::size_t a = 0; a < n; ++a) {
    if (class_of[a] != kUnassigned) continue;
    const std::size_t id = classes.size();
    ConjugacyClass cls{a, {a}, data->orders[a]};
    class_of[a] = id;
    for (std::size_t head = 0; head < cls.members.size(); ++head) {
      for (auto g : gen_idx) {
        const auto c = group.conjugate(cls.members[head], g);
        if (class_of[c] == kUnassigned) {
          class_of[c] = id;
          cls.members.push_back(c);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    classes.push_back(std::move(cls));
  }
  std::vector<std::size_t> perm(classes.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
    if (classes[x].element_order != classes[y].element_order) return classes[x].element_order < classes[y].element_order;
    return classes[x].representative < classes[y].representative;
  });
  std::vector<std::size_t> rank(classes.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    rank[perm[i]] = i;
    data->classes.push_back(std::move(classes[perm[i]]));
  }
  data->class_of.resize(n);
  for (std::size_t a = 0; a < n; ++a) data->class_of[a] = rank[class_of[a]];
  return group;
}

inline Group group_from_generators(std::initializer_list<Permutation> gens, std::size_t order_cap = kDefaultOrderCap,
                                   std::string name = {}) {
  std::vector<Permutation> v(gens);
  return group_from_generators(std::span<const Permutation>(v), order_cap, std::move(name));
}

inline std::uint64_t element_order(const Group& G, const Permutation& g) { return G.element_order(G.index_of(g)); }

inline std::vector<Permutation> cyclic_subgroup(const Group& G, const Permutation& g) {
  const std::size_t a = G.index_of(g);
  std::vector<Permutation> out;
  std::size_t x = 0;
  do {
    out.push_back(G.element(x));
    x = G.mul(x, a);
  } while (x != 0);
  return out;
}

inline std::size_t centralizer_order(const Group& G, const Permutation& g) { return G.centralizer_order(G.index_of(g)); }

inline std::vector<std::size_t> power_map(const Group& G, std::int64_t k) { return G.power_map(k); }

}  // namespace pqsurf
