#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "orbitposet/error.hpp"
#include "orbitposet/parabolic.hpp"
#include "orbitposet/permutation.hpp"
#include "orbitposet/poset.hpp"

/*
  Matrix model of diagonal orbits in G/P_I x G/P_J.

  An orbit is a nonnegative integer r x s matrix whose row sums are the
  blocks of P_I and whose column sums are the blocks of P_J. For a minimal
  double coset representative w,

      m_ij = #{ positions k in column block j : w(k) lies in row block i }.

  Orbit closures are ordered by NW partial sums: M <= M2 (the orbit of M lies
  in the closure of the orbit of M2) iff every partial sum
  sum_{k<=i, l<=j} m_kl is at least the corresponding one for M2. Larger sums
  mean a smaller, more closed orbit; the block-diagonal NW-greedy matrix is
  the minimum.
*/

namespace orbitposet {

class OrbitMatrix {
 public:
  OrbitMatrix(BlockComposition row_margins, BlockComposition col_margins, std::vector<std::vector<int>> entries)
      : rows_(std::move(row_margins)), cols_(std::move(col_margins)) {
    const int r = rows_.block_count();
    const int s = cols_.block_count();
    if (static_cast<int>(entries.size()) != r) throw InvalidInput("matrix has the wrong number of rows");
    entries_.reserve(static_cast<std::size_t>(r) * s);
    std::vector<int> col_sum(s, 0);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(entries[i].size()) != s) throw InvalidInput("matrix row has the wrong length");
      int row_sum = 0;
      for (int j = 0; j < s; ++j) {
        const int x = entries[i][j];
        if (x < 0) throw InvalidInput("matrix entries must be nonnegative");
        row_sum += x;
        col_sum[j] += x;
        entries_.push_back(x);
      }
      if (row_sum != rows_[i]) {
        throw InvalidInput("row " + std::to_string(i + 1) + " sums to " + std::to_string(row_sum) +
                           ", expected " + std::to_string(rows_[i]));
      }
    }
    for (int j = 0; j < s; ++j) {
      if (col_sum[j] != cols_[j]) {
        throw InvalidInput("column " + std::to_string(j + 1) + " sums to " + std::to_string(col_sum[j]) +
                           ", expected " + std::to_string(cols_[j]));
      }
    }
  }

  /// Margins are read off the entries.
  static OrbitMatrix from_entries(const std::vector<std::vector<int>>& entries) {
    if (entries.empty() || entries.front().empty()) throw InvalidInput("empty matrix");
    std::vector<int> rows, cols(entries.front().size(), 0);
    for (const auto& row : entries) {
      if (row.size() != cols.size()) throw InvalidInput("ragged matrix");
      int sum = 0;
      for (std::size_t j = 0; j < row.size(); ++j) {
        sum += row[j];
        cols[j] += row[j];
      }
      rows.push_back(sum);
    }
    return OrbitMatrix(BlockComposition(rows), BlockComposition(cols), entries);
  }

  int row_count() const noexcept { return rows_.block_count(); }
  int col_count() const noexcept { return cols_.block_count(); }
  const BlockComposition& row_margins() const noexcept { return rows_; }
  const BlockComposition& col_margins() const noexcept { return cols_; }

  /// 0-based entry access.
  int at(int i, int j) const { return entries_.at(static_cast<std::size_t>(i) * col_count() + j); }

  std::vector<std::vector<int>> grid() const {
    std::vector<std::vector<int>> g(row_count(), std::vector<int>(col_count()));
    for (int i = 0; i < row_count(); ++i)
      for (int j = 0; j < col_count(); ++j) g[i][j] = at(i, j);
    return g;
  }

  /// NW partial sums: out[i][j] = sum of entries in rows <= i, columns <= j.
  std::vector<std::vector<int>> partial_sums() const {
    std::vector<std::vector<int>> ps(row_count(), std::vector<int>(col_count(), 0));
    for (int i = 0; i < row_count(); ++i) {
      int run = 0;
      for (int j = 0; j < col_count(); ++j) {
        run += at(i, j);
        ps[i][j] = run + (i > 0 ? ps[i - 1][j] : 0);
      }
    }
    return ps;
  }

  OrbitMatrix transposed() const {
    std::vector<std::vector<int>> t(col_count(), std::vector<int>(row_count()));
    for (int i = 0; i < row_count(); ++i)
      for (int j = 0; j < col_count(); ++j) t[j][i] = at(i, j);
    return OrbitMatrix(cols_, rows_, std::move(t));
  }

  /// "[[1,1],[1,1]]"
  std::string to_string() const {
    std::string out = "[";
    for (int i = 0; i < row_count(); ++i) {
      out += i > 0 ? ",[" : "[";
      for (int j = 0; j < col_count(); ++j) {
        if (j > 0) out += ',';
        out += std::to_string(at(i, j));
      }
      out += ']';
    }
    return out + "]";
  }

  friend auto operator<=>(const OrbitMatrix&, const OrbitMatrix&) = default;
  friend bool operator==(const OrbitMatrix&, const OrbitMatrix&) = default;

 private:
  BlockComposition rows_;
  BlockComposition cols_;
  std::vector<int> entries_;
};

/// Matrix of the orbit with minimal representative w. Rows follow the blocks
/// of I (value blocks), columns the blocks of J (position blocks).
inline OrbitMatrix coset_to_matrix(const Permutation& w, const CosetSystem& sys) {
  if (w.size() != sys.n()) throw InvalidInput("permutation rank does not match coset system");
  if (!is_minimal_rep(w, sys)) {
    throw InvalidInput(w.to_string() + " is not a minimal double coset representative");
  }
  const BlockComposition rows = sys.left_blocks();
  const BlockComposition cols = sys.right_blocks();
  std::vector<std::vector<int>> m(rows.block_count(), std::vector<int>(cols.block_count(), 0));
  for (int k = 1; k <= w.size(); ++k) ++m[rows.block_of(w(k))][cols.block_of(k)];
  return OrbitMatrix(rows, cols, std::move(m));
}

/// Inverse of coset_to_matrix: the unique minimal representative with matrix M.
inline Permutation matrix_to_min_rep(const OrbitMatrix& m) {
  const int r = m.row_count();
  const int s = m.col_count();
  std::vector<std::vector<int>> assigned(s);
  int value = 1;
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < s; ++j) {
      for (int c = 0; c < m.at(i, j); ++c) assigned[j].push_back(value++);
    }
  }
  std::vector<int> one_line;
  one_line.reserve(value - 1);
  for (auto& col : assigned) {
    std::sort(col.begin(), col.end());
    one_line.insert(one_line.end(), col.begin(), col.end());
  }
  return Permutation(std::move(one_line));
}

/// Closure containment: M <= M2 iff every NW partial sum of M is >= that of M2.
inline bool matrix_leq(const OrbitMatrix& m, const OrbitMatrix& m2) {
  if (m.row_margins() != m2.row_margins() || m.col_margins() != m2.col_margins()) {
    throw InvalidInput("matrix_leq: margins differ");
  }
  const auto a = m.partial_sums();
  const auto b = m2.partial_sums();
  for (int i = 0; i < m.row_count(); ++i)
    for (int j = 0; j < m.col_count(); ++j)
      if (a[i][j] < b[i][j]) return false;
  return true;
}

/// All matrices with the given margins, each once. Rows are filled in turn,
/// each entry from its largest feasible value downwards, so the first matrix
/// is the NW-greedy one.
inline std::vector<OrbitMatrix> enumerate_margin_matrices(const BlockComposition& rows, const BlockComposition& cols) {
  if (rows.n() != cols.n()) {
    throw InvalidInput("margin totals differ: " + std::to_string(rows.n()) + " vs " + std::to_string(cols.n()));
  }
  const int r = rows.block_count();
  const int s = cols.block_count();
  std::vector<OrbitMatrix> out;
  std::vector<std::vector<int>> grid(r, std::vector<int>(s, 0));
  std::vector<int> capacity = cols.blocks();

  auto fill = [&](auto&& self, int i, int j, int left, int capacity_after) -> void {
    // capacity_after: total column capacity in columns j+1.. of this row
    if (i == r - 1) {
      grid[i] = capacity;
      out.emplace_back(rows, cols, grid);
      return;
    }
    if (j == s - 1) {
      if (left > capacity[j]) return;
      grid[i][j] = left;
      capacity[j] -= left;
      int next_capacity = 0;
      for (int c = 1; c < s; ++c) next_capacity += capacity[c];
      self(self, i + 1, 0, rows[i + 1], next_capacity);
      capacity[j] += left;
      return;
    }
    const int hi = std::min(left, capacity[j]);
    const int lo = std::max(0, left - capacity_after);
    for (int x = hi; x >= lo; --x) {
      grid[i][j] = x;
      capacity[j] -= x;
      self(self, i, j + 1, left - x, capacity_after - capacity[j + 1]);
      capacity[j] += x;
    }
  };
  int after = 0;
  for (int c = 1; c < s; ++c) after += capacity[c];
  fill(fill, 0, 0, rows[0], after);
  return out;
}

inline FinitePoset<OrbitMatrix> matrix_poset(const BlockComposition& rows, const BlockComposition& cols) {
  return from_order_relation(enumerate_margin_matrices(rows, cols), matrix_leq);
}

using CosetToMatrix = std::function<OrbitMatrix(const Permutation&, const CosetSystem&)>;

/// Checks that `to_matrix` is an order isomorphism from the Bruhat poset on
/// U(I,J) onto the matrix poset, and returns the index map (Bruhat element
/// i goes to matrix element result[i]). Throws BackendMismatch naming the
/// first offending element or pair.
inline std::vector<int> check_backend_equivalence(const FinitePoset<Permutation>& bruhat,
                                                  const FinitePoset<OrbitMatrix>& matrices,
                                                  const CosetSystem& sys,
                                                  const CosetToMatrix& to_matrix = coset_to_matrix) {
  const int k = bruhat.size();
  if (k != matrices.size()) {
    throw BackendMismatch("backends disagree on the orbit count: " + std::to_string(k) + " cosets vs " +
                          std::to_string(matrices.size()) + " matrices");
  }
  std::vector<int> image(k, -1);
  std::vector<char> hit(k, 0);
  for (int a = 0; a < k; ++a) {
    const OrbitMatrix m = to_matrix(bruhat.label(a), sys);
    const auto idx = matrices.index_of(m);
    if (!idx || hit[*idx]) {
      throw BackendMismatch("coset " + bruhat.label(a).to_string() + " maps to " + m.to_string() +
                            (idx ? ", already taken" : ", which has the wrong margins or is missing"));
    }
    image[a] = *idx;
    hit[*idx] = 1;
  }
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (bruhat.leq(a, b) != matrices.leq(image[a], image[b])) {
        throw BackendMismatch("order disagreement on pair (" + bruhat.label(a).to_string() + ", " +
                              bruhat.label(b).to_string() + "): Bruhat says " +
                              (bruhat.leq(a, b) ? "<=" : "not <=") + ", dominance says " +
                              (matrices.leq(image[a], image[b]) ? "<=" : "not <="));
      }
    }
  }
  return image;
}

}  // namespace orbitposet
