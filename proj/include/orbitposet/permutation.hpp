#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orbitposet/error.hpp"

/*
  Permutations of [n] = {1, ..., n} in one-line notation.

  Indexing convention: everything user-facing is 1-based, exactly as in
  one-line notation. w(i) is the value in position i, descents and simple
  transpositions s_i are indexed by i in [n-1]. Storage is a 0-based
  std::vector<int> holding the values 1..n; nothing outside this header
  touches it directly.

  Composition is functional: (u * v)(i) = u(v(i)). Right multiplication by
  s_i swaps positions i and i+1, left multiplication swaps values i and i+1.
*/

namespace orbitposet {

/// Default ceiling for full S_n enumeration (10! is about 3.6 million).
inline constexpr int kEnumerationLimit = 10;

/// A subset of {1, ..., 63}, used for descent sets and parabolic generator
/// sets.
class IndexSet {
 public:
  static constexpr int kMaxIndex = 63;

  constexpr IndexSet() = default;

  IndexSet(std::initializer_list<int> indices) {
    for (int i : indices) insert(i);
  }

  static constexpr IndexSet from_mask(std::uint64_t mask) {
    IndexSet s;
    s.mask_ = mask & ~std::uint64_t{1};
    return s;
  }

  /// {1, ..., n-1}
  static constexpr IndexSet full(int n) {
    if (n <= 1) return IndexSet{};
    if (n > kMaxIndex) return from_mask(~std::uint64_t{1});
    return from_mask(((std::uint64_t{1} << n) - 1) & ~std::uint64_t{1});
  }

  constexpr bool contains(int i) const noexcept {
    return i >= 1 && i <= kMaxIndex && ((mask_ >> i) & 1U) != 0;
  }

  void insert(int i) {
    if (i < 1 || i > kMaxIndex) {
      throw InvalidInput("index " + std::to_string(i) + " outside 1.." +
                         std::to_string(kMaxIndex));
    }
    mask_ |= std::uint64_t{1} << i;
  }

  constexpr void erase(int i) noexcept {
    if (i >= 1 && i <= kMaxIndex) mask_ &= ~(std::uint64_t{1} << i);
  }

  constexpr int size() const noexcept { return std::popcount(mask_); }
  constexpr bool empty() const noexcept { return mask_ == 0; }
  constexpr std::uint64_t mask() const noexcept { return mask_; }

  constexpr bool is_subset_of(IndexSet other) const noexcept {
    return (mask_ & ~other.mask_) == 0;
  }

  /// Complement inside [n-1].
  constexpr IndexSet complement_in(int n) const noexcept {
    return from_mask(full(n).mask_ & ~mask_);
  }

  /// Largest member, or 0 when empty.
  constexpr int max() const noexcept {
    return mask_ == 0 ? 0 : 63 - std::countl_zero(mask_);
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) noexcept {
    return from_mask(a.mask_ | b.mask_);
  }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) noexcept {
    return from_mask(a.mask_ & b.mask_);
  }
  friend constexpr bool operator==(IndexSet, IndexSet) = default;

 private:
  std::uint64_t mask_ = 0;
};

class Permutation {
 public:
  /// Validates that one_line is a bijection onto {1, ..., n} with n >= 1.
  explicit Permutation(std::vector<int> one_line) : values_(std::move(one_line)) {
    const int n = static_cast<int>(values_.size());
    if (n < 1) throw InvalidInput("a permutation needs at least one entry");
    std::vector<char> seen(n + 1, 0);
    for (int v : values_) {
      if (v < 1 || v > n || seen[v]) {
        throw InvalidInput("not a permutation of 1.." + std::to_string(n) + ": " +
                           render(values_));
      }
      seen[v] = 1;
    }
  }

  static Permutation identity(int n) {
    if (n < 1) throw InvalidInput("identity needs n >= 1");
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v), Unchecked{});
  }

  /// s_i, swapping i and i+1, for 1 <= i < n.
  static Permutation simple_transposition(int n, int i) {
    if (i < 1 || i >= n) {
      throw InvalidInput("s_" + std::to_string(i) + " is not a simple transposition of S_" +
                         std::to_string(n));
    }
    Permutation w = identity(n);
    std::swap(w.values_[i - 1], w.values_[i]);
    return w;
  }

  /// n n-1 ... 1
  static Permutation longest(int n) {
    Permutation w = identity(n);
    std::reverse(w.values_.begin(), w.values_.end());
    return w;
  }

  /// Accepts "3412" (single digits, n <= 9) or a comma/space separated list
  /// such as "3,4,1,2".
  static Permutation parse(std::string_view text) {
    std::vector<int> v;
    const bool separated = text.find_first_of(", ") != std::string_view::npos;
    if (!separated) {
      for (char c : text) {
        if (c < '0' || c > '9') throw InvalidInput("bad permutation literal: " + std::string(text));
        v.push_back(c - '0');
      }
    } else {
      int cur = -1;
      for (char c : text) {
        if (c >= '0' && c <= '9') {
          cur = (cur < 0 ? 0 : cur * 10) + (c - '0');
        } else if (c == ',' || c == ' ') {
          if (cur >= 0) v.push_back(cur);
          cur = -1;
        } else {
          throw InvalidInput("bad permutation literal: " + std::string(text));
        }
      }
      if (cur >= 0) v.push_back(cur);
    }
    return Permutation(std::move(v));
  }

  int size() const noexcept { return static_cast<int>(values_.size()); }

  /// w(i) for 1 <= i <= n.
  int operator()(int i) const { return values_.at(i - 1); }

  std::span<const int> one_line() const noexcept { return values_; }

  /// "3412" when n <= 9, otherwise "3,4,1,2,...".
  std::string to_string() const { return render(values_); }

  /// Right multiplication by s_i (swap positions i, i+1).
  Permutation times_simple(int i) const {
    Permutation w = *this;
    w.swap_positions(i);
    return w;
  }

  /// Left multiplication by s_i (swap values i, i+1).
  Permutation simple_times(int i) const {
    Permutation w = *this;
    w.swap_values(i);
    return w;
  }

  void swap_positions(int i) {
    check_simple(i);
    std::swap(values_[i - 1], values_[i]);
  }

  void swap_values(int i) {
    check_simple(i);
    for (int& v : values_) {
      if (v == i) {
        v = i + 1;
      } else if (v == i + 1) {
        v = i;
      }
    }
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

  static std::string render(std::span<const int> values) {
    std::string out;
    const bool compact = values.size() <= 9;
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (!compact && k > 0) out += ',';
      out += std::to_string(values[k]);
    }
    return out;
  }

 private:
  struct Unchecked {};
  Permutation(std::vector<int> values, Unchecked) : values_(std::move(values)) {}

  void check_simple(int i) const {
    if (i < 1 || i >= size()) {
      throw InvalidInput("s_" + std::to_string(i) + " does not act on S_" + std::to_string(size()));
    }
  }

  friend Permutation inverse(const Permutation& w);
  friend Permutation compose(const Permutation& u, const Permutation& v);

  std::vector<int> values_;
};

/// Number of inversions {i < j : w_i > w_j}.
inline int length(std::span<const int> w) noexcept {
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

inline int length(const Permutation& w) noexcept { return length(w.one_line()); }

inline Permutation inverse(const Permutation& w) {
  std::vector<int> inv(w.values_.size());
  for (std::size_t i = 0; i < w.values_.size(); ++i) inv[w.values_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv), Permutation::Unchecked{});
}

/// (u * v)(i) = u(v(i)).
inline Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) {
    throw InvalidInput("compose: sizes differ (" + std::to_string(u.size()) + " vs " +
                       std::to_string(v.size()) + ")");
  }
  std::vector<int> out(v.values_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = u.values_[v.values_[i] - 1];
  return Permutation(std::move(out), Permutation::Unchecked{});
}

inline Permutation operator*(const Permutation& u, const Permutation& v) { return compose(u, v); }

/// {i : w_i > w_{i+1}}
inline IndexSet right_descents(std::span<const int> w) noexcept {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) mask |= std::uint64_t{1} << (i + 1);
  return IndexSet::from_mask(mask);
}

inline IndexSet right_descents(const Permutation& w) noexcept { return right_descents(w.one_line()); }

inline IndexSet right_ascents(const Permutation& w) noexcept {
  return right_descents(w).complement_in(w.size());
}

/// Right descents of w^{-1}, i.e. the values i with i+1 placed before i.
inline IndexSet left_descents(std::span<const int> w) noexcept {
  std::vector<int> pos(w.size() + 1);
  for (std::size_t k = 0; k < w.size(); ++k) pos[w[k]] = static_cast<int>(k);
  std::uint64_t mask = 0;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (pos[i] > pos[i + 1]) mask |= std::uint64_t{1} << i;
  return IndexSet::from_mask(mask);
}

inline IndexSet left_descents(const Permutation& w) noexcept { return left_descents(w.one_line()); }

/// Calls fn(std::span<const int>) once per element of S_n in lexicographic
/// order. Throws CapacityError above `limit`.
template <class Fn>
void for_each_permutation(int n, Fn&& fn, int limit = kEnumerationLimit) {
  if (n < 1) throw InvalidInput("S_n needs n >= 1");
  if (n > limit) {
    throw CapacityError("S_" + std::to_string(n) + " exceeds the enumeration limit of " +
                        std::to_string(limit) + "; use the matrix backend for larger ranks");
  }
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    fn(std::span<const int>(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

inline std::vector<Permutation> enumerate_symmetric_group(int n, int limit = kEnumerationLimit) {
  std::vector<Permutation> out;
  for_each_permutation(
      n, [&](std::span<const int> w) { out.emplace_back(std::vector<int>(w.begin(), w.end())); },
      limit);
  return out;
}

}  // namespace orbitposet
