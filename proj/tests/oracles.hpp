#pragma once

// Brute-force reference implementations used only by the tests. None of
// them shares code with the library beyond the Permutation value type.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "orbitposet/orbitposet.hpp"

namespace oracle {

using orbitposet::Permutation;

/// Adjacent swaps performed by bubble sort.
inline int bubble_length(const Permutation& w) {
  std::vector<int> v(w.one_line().begin(), w.one_line().end());
  int swaps = 0;
  for (std::size_t pass = 0; pass < v.size(); ++pass)
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
      if (v[i] > v[i + 1]) {
        std::swap(v[i], v[i + 1]);
        ++swaps;
      }
  return swaps;
}

/// Rank-matrix criterion: u <= v iff #{a <= i : u(a) >= j} <= the same count
/// for v, for all i, j.
inline bool rank_matrix_leq(const Permutation& u, const Permutation& v) {
  const int n = u.size();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int cu = 0, cv = 0;
      for (int a = 1; a <= i; ++a) {
        cu += u(a) >= j;
        cv += v(a) >= j;
      }
      if (cu > cv) return false;
    }
  return true;
}

/// Every element of the parabolic subgroup generated by the simple
/// reflections s_i, i in `gens`, by closure under right multiplication.
inline std::vector<Permutation> generated_subgroup(int n, const std::vector<int>& gens) {
  std::set<Permutation> seen{Permutation::identity(n)};
  std::vector<Permutation> frontier{Permutation::identity(n)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& w : frontier)
      for (int i : gens) {
        Permutation x = w.times_simple(i);
        if (seen.insert(x).second) next.push_back(x);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

/// The double coset W_I x W_J as a set.
inline std::set<Permutation> double_coset(const Permutation& x, const std::vector<int>& gi, const std::vector<int>& gj) {
  const int n = x.size();
  std::set<Permutation> out;
  for (const auto& u : generated_subgroup(n, gi))
    for (const auto& v : generated_subgroup(n, gj)) out.insert(u * x * v);
  return out;
}

inline Permutation shortest_in(const std::set<Permutation>& coset) {
  return *std::min_element(coset.begin(), coset.end(),
                           [](const auto& a, const auto& b) { return bubble_length(a) < bubble_length(b); });
}

inline Permutation longest_in(const std::set<Permutation>& coset) {
  return *std::max_element(coset.begin(), coset.end(),
                           [](const auto& a, const auto& b) { return bubble_length(a) < bubble_length(b); });
}

/// Shortest element of every double coset, found by partitioning S_n.
inline std::set<Permutation> double_coset_minima(int n, const std::vector<int>& gi, const std::vector<int>& gj) {
  std::set<Permutation> done, minima;
  for (const auto& x : orbitposet::enumerate_symmetric_group(n)) {
    if (done.count(x)) continue;
    const auto coset = double_coset(x, gi, gj);
    done.insert(coset.begin(), coset.end());
    minima.insert(shortest_in(coset));
  }
  return minima;
}

/// Distinct block-count matrices over all of S_n.
inline std::set<std::vector<std::vector<int>>> matrices_from_group(const std::vector<int>& rows, const std::vector<int>& cols) {
  const int n = std::accumulate(rows.begin(), rows.end(), 0);
  auto block = [](const std::vector<int>& b, int x) {
    int k = 0;
    while (x > b[k]) x -= b[k++];
    return k;
  };
  std::set<std::vector<std::vector<int>>> out;
  for (const auto& w : orbitposet::enumerate_symmetric_group(n)) {
    std::vector<std::vector<int>> m(rows.size(), std::vector<int>(cols.size(), 0));
    for (int k = 1; k <= n; ++k) ++m[block(rows, w(k))][block(cols, k)];
    out.insert(m);
  }
  return out;
}

/// A poset given by its full order relation.
struct Relation {
  int k = 0;
  std::vector<std::vector<bool>> le;
};

inline Relation relation_of(const orbitposet::HasseDiagram& h) {
  Relation r{h.size(), std::vector<std::vector<bool>>(h.size(), std::vector<bool>(h.size()))};
  for (int a = 0; a < r.k; ++a)
    for (int b = 0; b < r.k; ++b) r.le[a][b] = h.leq(a, b);
  return r;
}

/// Every pair has exactly one least upper and one greatest lower bound.
inline bool brute_is_lattice(const Relation& r) {
  for (int a = 0; a < r.k; ++a)
    for (int b = 0; b < r.k; ++b) {
      int joins = 0, meets = 0;
      for (int c = 0; c < r.k; ++c) {
        if (r.le[a][c] && r.le[b][c]) {
          bool least = true;
          for (int d = 0; d < r.k; ++d)
            if (r.le[a][d] && r.le[b][d] && !r.le[c][d]) least = false;
          joins += least;
        }
        if (r.le[c][a] && r.le[c][b]) {
          bool greatest = true;
          for (int d = 0; d < r.k; ++d)
            if (r.le[d][a] && r.le[d][b] && !r.le[d][c]) greatest = false;
          meets += greatest;
        }
      }
      if (joins != 1 || meets != 1) return false;
    }
  return true;
}

/// Lengths of all maximal chains from the minimal to the maximal elements.
inline std::set<int> maximal_chain_lengths(const orbitposet::HasseDiagram& h) {
  std::set<int> lengths;
  auto walk = [&](auto&& self, int a, int len) -> void {
    if (h.upper_covers(a).empty()) {
      lengths.insert(len);
      return;
    }
    for (int b : h.upper_covers(a)) self(self, b, len + 1);
  };
  for (int a = 0; a < h.size(); ++a)
    if (h.lower_covers(a).empty()) walk(walk, a, 0);
  return lengths;
}

/// Isomorphism by trying every bijection.
inline bool brute_isomorphic(const orbitposet::HasseDiagram& p, const orbitposet::HasseDiagram& q) {
  if (p.size() != q.size() || p.covers().size() != q.covers().size()) return false;
  std::vector<int> f(p.size());
  std::iota(f.begin(), f.end(), 0);
  do {
    bool ok = true;
    for (auto [a, b] : p.covers())
      if (!q.covers(f[a], f[b])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(f.begin(), f.end()));
  return false;
}

/// Random poset on k elements: a random DAG over a random linear order,
/// reduced to covers.
inline orbitposet::HasseDiagram random_poset(std::mt19937& rng, int k, double density) {
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution edge(density);
  std::vector<char> rel(static_cast<std::size_t>(k) * k, 0);
  for (int i = 0; i < k; ++i) rel[static_cast<std::size_t>(order[i]) * k + order[i]] = 1;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (edge(rng)) rel[static_cast<std::size_t>(order[i]) * k + order[j]] = 1;
  for (int m = 0; m < k; ++m)
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        if (rel[static_cast<std::size_t>(a) * k + m] && rel[static_cast<std::size_t>(m) * k + b])
          rel[static_cast<std::size_t>(a) * k + b] = 1;
  std::vector<orbitposet::Cover> covers;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      if (a == b || !rel[static_cast<std::size_t>(a) * k + b]) continue;
      bool direct = true;
      for (int m = 0; m < k && direct; ++m)
        if (m != a && m != b && rel[static_cast<std::size_t>(a) * k + m] && rel[static_cast<std::size_t>(m) * k + b])
          direct = false;
      if (direct) covers.emplace_back(a, b);
    }
  return orbitposet::HasseDiagram(k, covers);
}

}  // namespace oracle
