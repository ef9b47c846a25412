#pragma once

#include <pqsurf/error.hpp>

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pqsurf {

// A bijection of {0..n-1}. Points are stored 0-based; parsing and printing use
// the customary 1-based labels.
//
// Products compose left to right: (a * b)(x) = b(a(x)), i.e. a is applied
// first. Conjugation a^b = b^-1 a b.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t degree) {
    Permutation p;
    p.images_.resize(degree);
    std::iota(p.images_.begin(), p.images_.end(), 0u);
    return p;
  }

  // 0-based images; throws NonPermutation unless bijective.
  static Permutation from_images0(std::vector<std::uint32_t> images) {
    std::vector<bool> seen(images.size(), false);
    for (auto v : images) {
      if (v >= images.size() || seen[v])
        throw Error(ErrorKind::NonPermutation, "image sequence is not a bijection");
      seen[v] = true;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  // 1-based image sequence, as written by hand.
  static Permutation from_images(std::span<const int> one_based) {
    std::vector<std::uint32_t> images;
    images.reserve(one_based.size());
    for (int v : one_based) {
      if (v < 1 || static_cast<std::size_t>(v) > one_based.size())
        throw Error(ErrorKind::NonPermutation, "image " + std::to_string(v) + " out of range");
      images.push_back(static_cast<std::uint32_t>(v - 1));
    }
    return from_images0(std::move(images));
  }

  static Permutation from_images(std::initializer_list<int> one_based) {
    std::vector<int> v(one_based);
    return from_images(std::span<const int>(v));
  }

  // Disjoint or overlapping cycles, e.g. "(1,2)(3,4)"; "()" is the identity.
  // Cycles are multiplied left to right.
  static Permutation from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator[](std::size_t point) const { return images_[point]; }
  const std::vector<std::uint32_t>& images0() const noexcept { return images_; }

  std::vector<int> images() const {
    std::vector<int> out(images_.size());
    std::transform(images_.begin(), images_.end(), out.begin(),
                   [](std::uint32_t v) { return static_cast<int>(v) + 1; });
    return out;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    Permutation p;
    p.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) p.images_[images_[i]] = static_cast<std::uint32_t>(i);
    return p;
  }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw Error(ErrorKind::InvalidParameter, "degree mismatch in product");
    Permutation p;
    p.images_.resize(a.degree());
    for (std::size_t i = 0; i < a.degree(); ++i) p.images_[i] = b.images_[a.images_[i]];
    return p;
  }

  Permutation pow(std::int64_t k) const {
    Permutation base = k < 0 ? inverse() : *this;
    std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
    Permutation result = identity(degree());
    while (e > 0) {
      if (e & 1) result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }

  std::uint64_t order() const {
    std::uint64_t result = 1;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

  // Cycle notation with 1-based points and comma separators.
  std::string to_cycles() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      out += '(';
      bool first = true;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        if (!first) out += ',';
        out += std::to_string(j + 1);
        first = false;
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<std::uint32_t> images_;
};

inline Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  Permutation result = identity(degree);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw Error(ErrorKind::Parse, "expected '(' in cycle string \"" + std::string(text) + "\"");
    ++pos;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip_space();
      if (pos >= text.size()) throw Error(ErrorKind::Parse, "unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw Error(ErrorKind::Parse, "unexpected character in cycle string");
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        value = value * 10 + static_cast<std::size_t>(text[pos++] - '0');
      if (value < 1 || value > degree)
        throw Error(ErrorKind::NonPermutation, "point " + std::to_string(value) + " exceeds degree " + std::to_string(degree));
      cycle.push_back(static_cast<std::uint32_t>(value - 1));
    }
    std::vector<std::uint32_t> images(degree);
    std::iota(images.begin(), images.end(), 0u);
    std::vector<bool> seen(degree, false);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (seen[cycle[i]]) throw Error(ErrorKind::NonPermutation, "repeated point within a cycle");
      seen[cycle[i]] = true;
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
    result = result * from_images0(std::move(images));
    skip_space();
  }
  return result;
}

}  // namespace pqsurf
