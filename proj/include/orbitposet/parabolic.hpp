#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "orbitposet/bruhat.hpp"
#include "orbitposet/error.hpp"
#include "orbitposet/permutation.hpp"
#include "orbitposet/poset.hpp"

/*
  Standard parabolic data for S_n.

  A block composition (p_1, ..., p_r) of n and a generator set I in [n-1]
  describe the same parabolic subgroup: I is [n-1] minus the proper partial
  sums p_1, p_1+p_2, ..., and W_I permutes each block {p_1+...+p_{k-1}+1, ...,
  p_1+...+p_k} within itself.

  For a pair (I, J) the minimal double coset representatives are

      U(I,J) = { w : Des_R(w^{-1}) within I^c and Des_R(w) within J^c },

  i.e. w is increasing on each J-block of positions and the values of each
  I-block appear left to right in increasing order.
*/

namespace orbitposet {

class BlockComposition {
 public:
  BlockComposition() = default;

  explicit BlockComposition(std::vector<int> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw InvalidInput("a block composition needs at least one block");
    for (int b : blocks_) {
      if (b < 1) throw InvalidInput("block sizes must be positive: " + to_string());
    }
  }

  /// "3,3" or "3 3"; any non-digit separates.
  static BlockComposition parse(std::string_view text) {
    std::vector<int> out;
    int cur = -1;
    for (char c : text) {
      if (c >= '0' && c <= '9') {
        cur = (cur < 0 ? 0 : cur * 10) + (c - '0');
        if (cur > 1'000'000) throw InvalidInput("block size too large in '" + std::string(text) + "'");
      } else if (c == ',' || c == ' ') {
        if (cur < 0) throw InvalidInput("empty block in '" + std::string(text) + "'");
        out.push_back(cur);
        cur = -1;
      } else {
        throw InvalidInput("unexpected character in block list '" + std::string(text) + "'");
      }
    }
    if (cur < 0) throw InvalidInput("empty block in '" + std::string(text) + "'");
    out.push_back(cur);
    return BlockComposition(std::move(out));
  }

  const std::vector<int>& blocks() const noexcept { return blocks_; }
  int block_count() const noexcept { return static_cast<int>(blocks_.size()); }
  int operator[](int k) const { return blocks_.at(k); }
  int n() const noexcept { return std::accumulate(blocks_.begin(), blocks_.end(), 0); }

  /// Reversed composition; the image under s_i -> s_{n-i}.
  BlockComposition reversed() const {
    return BlockComposition(std::vector<int>(blocks_.rbegin(), blocks_.rend()));
  }

  /// 0-based index of the block containing point x in [n].
  int block_of(int x) const {
    int end = 0;
    for (int k = 0; k < block_count(); ++k) {
      end += blocks_[k];
      if (x <= end) return k;
    }
    throw InvalidInput("point " + std::to_string(x) + " beyond composition " + to_string());
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
      if (k > 0) out += ',';
      out += std::to_string(blocks_[k]);
    }
    return out;
  }

  friend auto operator<=>(const BlockComposition&, const BlockComposition&) = default;
  friend bool operator==(const BlockComposition&, const BlockComposition&) = default;

 private:
  std::vector<int> blocks_;
};

/// A subset of the simple reflections s_1..s_{n-1} of S_n.
class GeneratorSet {
 public:
  GeneratorSet() = default;

  GeneratorSet(int n, IndexSet indices) : n_(n), indices_(indices) {
    if (n < 1) throw InvalidInput("rank parameter n must be positive");
    if (n - 1 > IndexSet::kMaxIndex) throw CapacityError("generator sets support n <= 64");
    if (!indices.is_subset_of(IndexSet::full(n))) {
      throw InvalidInput("generator index outside [n-1] for n = " + std::to_string(n));
    }
  }

  int n() const noexcept { return n_; }
  const IndexSet& indices() const noexcept { return indices_; }
  bool contains(int i) const noexcept { return indices_.contains(i); }

  /// I^c, taken inside [n-1].
  GeneratorSet complement() const { return GeneratorSet(n_, indices_.complement_in(n_)); }

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  int n_ = 1;
  IndexSet indices_;
};

/// [n-1] minus the proper partial sums of the blocks.
inline GeneratorSet blocks_to_generators(const BlockComposition& b) {
  const int n = b.n();
  IndexSet cuts;
  int partial = 0;
  for (int k = 0; k + 1 < b.block_count(); ++k) {
    partial += b[k];
    cuts.insert(partial);
  }
  return GeneratorSet(n, cuts.complement_in(n));
}

inline BlockComposition generators_to_blocks(const GeneratorSet& g) {
  std::vector<int> blocks;
  int start = 0;
  for (int i = 1; i < g.n(); ++i) {
    if (!g.contains(i)) {
      blocks.push_back(i - start);
      start = i;
    }
  }
  blocks.push_back(g.n() - start);
  return BlockComposition(std::move(blocks));
}

/// The pair (I, J) over a common rank n.
class CosetSystem {
 public:
  CosetSystem(GeneratorSet i, GeneratorSet j) : left_(std::move(i)), right_(std::move(j)) {
    if (left_.n() != right_.n()) {
      throw InvalidInput("coset system ranks differ: " + std::to_string(left_.n()) + " vs " +
                         std::to_string(right_.n()));
    }
  }

  static CosetSystem from_blocks(const BlockComposition& rows, const BlockComposition& cols) {
    if (rows.n() != cols.n()) {
      throw InvalidInput("block totals differ: (" + rows.to_string() + ") sums to " + std::to_string(rows.n()) +
                         ", (" + cols.to_string() + ") sums to " + std::to_string(cols.n()));
    }
    return CosetSystem(blocks_to_generators(rows), blocks_to_generators(cols));
  }

  int n() const noexcept { return left_.n(); }
  const GeneratorSet& left() const noexcept { return left_; }    ///< I
  const GeneratorSet& right() const noexcept { return right_; }  ///< J
  IndexSet left_complement() const { return left_.complement().indices(); }
  IndexSet right_complement() const { return right_.complement().indices(); }
  BlockComposition left_blocks() const { return generators_to_blocks(left_); }
  BlockComposition right_blocks() const { return generators_to_blocks(right_); }

  friend bool operator==(const CosetSystem&, const CosetSystem&) = default;

 private:
  GeneratorSet left_;
  GeneratorSet right_;
};

inline bool is_minimal_rep(std::span<const int> w, const CosetSystem& sys) {
  return left_descents(w).is_subset_of(sys.left_complement()) &&
         right_descents(w).is_subset_of(sys.right_complement());
}

inline bool is_minimal_rep(const Permutation& w, const CosetSystem& sys) {
  return is_minimal_rep(w.one_line(), sys);
}

/// U(I,J) in lexicographic order; the identity comes first.
inline std::vector<Permutation> enumerate_minimal_reps(const CosetSystem& sys, int limit = kEnumerationLimit) {
  std::vector<Permutation> out;
  const IndexSet ic = sys.left_complement();
  const IndexSet jc = sys.right_complement();
  for_each_permutation(
      sys.n(),
      [&](std::span<const int> w) {
        if (right_descents(w).is_subset_of(jc) && left_descents(w).is_subset_of(ic)) {
          out.emplace_back(std::vector<int>(w.begin(), w.end()));
        }
      },
      limit);
  return out;
}

/// The double-coset poset on U(I,J) under Bruhat order.
inline FinitePoset<Permutation> coset_poset(const CosetSystem& sys, int limit = kEnumerationLimit) {
  return bruhat_poset(enumerate_minimal_reps(sys, limit));
}

/// Shortest element of W_I w W_J: strip left descents in I and right descents
/// in J until none remain.
inline Permutation minimal_coset_representative(const Permutation& w, const CosetSystem& sys) {
  if (w.size() != sys.n()) throw InvalidInput("permutation rank does not match coset system");
  Permutation x = w;
  bool changed = true;
  while (changed) {
    changed = false;
    const IndexSet left = left_descents(x) & sys.left().indices();
    if (!left.empty()) {
      x.swap_values(left.to_vector().front());
      changed = true;
      continue;
    }
    const IndexSet right = right_descents(x) & sys.right().indices();
    if (!right.empty()) {
      x.swap_positions(right.to_vector().front());
      changed = true;
    }
  }
  return x;
}

/// Longest element of W_I w W_J, by the dual greedy walk.
inline Permutation maximal_coset_representative(const Permutation& w, const CosetSystem& sys) {
  if (w.size() != sys.n()) throw InvalidInput("permutation rank does not match coset system");
  Permutation x = w;
  bool changed = true;
  while (changed) {
    changed = false;
    const IndexSet left = left_descents(x).complement_in(x.size()) & sys.left().indices();
    if (!left.empty()) {
      x.swap_values(left.to_vector().front());
      changed = true;
      continue;
    }
    const IndexSet right = right_ascents(x) & sys.right().indices();
    if (!right.empty()) {
      x.swap_positions(right.to_vector().front());
      changed = true;
    }
  }
  return x;
}

/// Every element of W_I: permutations mapping each block of I onto itself.
inline std::vector<Permutation> parabolic_subgroup(const GeneratorSet& g, int limit = kEnumerationLimit) {
  if (g.n() > limit) {
    throw CapacityError("parabolic subgroup of S_" + std::to_string(g.n()) + " exceeds the enumeration limit");
  }
  const BlockComposition blocks = generators_to_blocks(g);
  std::vector<int> w(g.n());
  std::iota(w.begin(), w.end(), 1);
  std::vector<std::pair<int, int>> ranges;
  int start = 0;
  for (int b : blocks.blocks()) {
    ranges.emplace_back(start, start + b);
    start += b;
  }
  std::vector<Permutation> out;
  while (true) {
    out.emplace_back(w);
    // Odometer over the blocks; next_permutation resets a block when it wraps.
    std::size_t k = ranges.size();
    bool advanced = false;
    while (k-- > 0) {
      if (std::next_permutation(w.begin() + ranges[k].first, w.begin() + ranges[k].second)) {
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return out;
}

/// H = I intersected with w J w^{-1}: the s_i (i in I) whose conjugate
/// w^{-1} s_i w is a simple reflection s_j with j in J.
inline IndexSet stabilizer_generators(const Permutation& w, const CosetSystem& sys) {
  IndexSet h;
  for (int i : sys.left().indices().to_vector()) {
    // w^{-1} s_i w is the transposition of positions w^{-1}(i) and w^{-1}(i+1).
    int a = 0, b = 0;
    for (int pos = 1; pos <= w.size(); ++pos) {
      if (w(pos) == i) a = pos;
      if (w(pos) == i + 1) b = pos;
    }
    if (std::abs(a - b) == 1 && sys.right().contains(std::min(a, b))) h.insert(i);
  }
  return h;
}

struct AdditiveDecomposition {
  Permutation u;  ///< in W_I, minimal in its coset u W_H
  Permutation w;  ///< minimal double coset representative
  Permutation v;  ///< in W_J
  IndexSet h;     ///< generators of W_H
};

inline constexpr int kDecompositionLimit = 7;

/// Finds the unique x = u w v with u in W_I minimal modulo W_H, v in W_J and
/// ell(x) = ell(u) + ell(w) + ell(v), by exhaustive search over W_I. Throws
/// std::logic_error if no such factorisation exists or it is not unique.
inline AdditiveDecomposition verify_additive_decomposition(const CosetSystem& sys, const Permutation& x) {
  if (sys.n() > kDecompositionLimit) {
    throw CapacityError("additive decomposition search is limited to n <= " + std::to_string(kDecompositionLimit));
  }
  if (x.size() != sys.n()) throw InvalidInput("permutation rank does not match coset system");
  const Permutation w = minimal_coset_representative(x, sys);
  const IndexSet h = stabilizer_generators(w, sys);
  const Permutation w_inv = inverse(w);
  const int lx = length(x);
  const int lw = length(w);
  std::optional<AdditiveDecomposition> found;
  for (const Permutation& u : parabolic_subgroup(sys.left())) {
    if (!(right_descents(u) & h).empty()) continue;
    const Permutation v = w_inv * inverse(u) * x;
    bool v_in_wj = true;
    const BlockComposition jb = sys.right_blocks();
    for (int pos = 1; pos <= v.size() && v_in_wj; ++pos) v_in_wj = jb.block_of(pos) == jb.block_of(v(pos));
    if (!v_in_wj) continue;
    if (length(u) + lw + length(v) != lx) continue;
    if (found) throw std::logic_error("additive decomposition of " + x.to_string() + " is not unique");
    found = AdditiveDecomposition{u, w, v, h};
  }
  if (!found) throw std::logic_error("no additive decomposition found for " + x.to_string());
  return *found;
}

/// (n, theta(I), theta(J)) with theta: s_i -> s_{n-i}.
inline CosetSystem theta_dual(const CosetSystem& sys) {
  auto reflect = [&](const GeneratorSet& g) {
    IndexSet out;
    for (int i : g.indices().to_vector()) out.insert(g.n() - i);
    return GeneratorSet(g.n(), out);
  };
  return CosetSystem(reflect(sys.left()), reflect(sys.right()));
}

}  // namespace orbitposet
