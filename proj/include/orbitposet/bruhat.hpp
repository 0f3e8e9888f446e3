#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orbitposet/error.hpp"
#include "orbitposet/permutation.hpp"
#include "orbitposet/poset.hpp"

namespace orbitposet {

/// Largest rank accepted by the subword reference path.
inline constexpr int kSubwordOracleLimit = 6;

/// u <= v in Bruhat order, by prefix dominance: for every k, the sorted
/// values of u_1..u_k are entrywise at most those of v_1..v_k. O(n^2).
inline bool bruhat_leq(std::span<const int> u, std::span<const int> v) {
  if (u.size() != v.size()) {
    throw InvalidInput("bruhat_leq: sizes differ (" + std::to_string(u.size()) + " vs " +
                       std::to_string(v.size()) + ")");
  }
  std::vector<int> su, sv;
  su.reserve(u.size());
  sv.reserve(v.size());
  for (std::size_t k = 0; k + 1 < u.size(); ++k) {
    su.insert(std::upper_bound(su.begin(), su.end(), u[k]), u[k]);
    sv.insert(std::upper_bound(sv.begin(), sv.end(), v[k]), v[k]);
    for (std::size_t t = 0; t <= k; ++t)
      if (su[t] > sv[t]) return false;
  }
  return true;
}

inline bool bruhat_leq(const Permutation& u, const Permutation& v) {
  return bruhat_leq(u.one_line(), v.one_line());
}

/// One reduced word for w, as simple-reflection indices with w = s_{a_1} ... s_{a_l}.
inline std::vector<int> reduced_word(const Permutation& w) {
  std::vector<int> word;
  Permutation x = w;
  // Peel right descents: x = (x s_i) s_i with length dropping by one.
  while (true) {
    const IndexSet d = right_descents(x);
    if (d.empty()) break;
    const int i = d.to_vector().front();
    x.swap_positions(i);
    word.push_back(i);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

/// Reference oracle for bruhat_leq straight from the subword definition:
/// true iff some subword of a reduced expression of v is a reduced expression
/// of u. By the subword property one fixed reduced expression of v suffices,
/// so this scans the ell(u)-letter subwords of reduced_word(v). Exponential;
/// used to certify bruhat_leq in tests.
inline bool bruhat_leq_subword_oracle(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw InvalidInput("bruhat_leq_subword_oracle: sizes differ");
  if (u.size() > kSubwordOracleLimit) {
    throw CapacityError("subword oracle is limited to n <= " + std::to_string(kSubwordOracleLimit));
  }
  const int n = u.size();
  const int target = length(u);
  const std::vector<int> word = reduced_word(v);
  const int l = static_cast<int>(word.size());
  if (target > l) return false;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << l); ++mask) {
    if (std::popcount(mask) != target) continue;
    Permutation x = Permutation::identity(n);
    for (int k = 0; k < l; ++k)
      if ((mask >> k) & 1U) x.swap_positions(word[k]);
    if (x == u) return true;  // ell(u) letters multiplying to u: a reduced word of u
  }
  return false;
}

/// Index pairs (a, b) with elements[a] covered by elements[b] in the Bruhat
/// order restricted to `elements` (relative covers, not covers in all of S_n).
inline std::vector<Cover> covering_pairs(std::span<const Permutation> elements) {
  const int k = static_cast<int>(elements.size());
  for (const auto& w : elements) {
    if (w.size() != elements.front().size()) throw InvalidInput("covering_pairs: mixed ranks");
  }
  std::vector<char> rel(static_cast<std::size_t>(k) * k, 0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) rel[static_cast<std::size_t>(a) * k + b] = bruhat_leq(elements[a], elements[b]);
  return transitive_reduction(k, rel);
}

inline FinitePoset<Permutation> bruhat_poset(std::vector<Permutation> elements) {
  return from_order_relation(std::move(elements),
                             [](const Permutation& u, const Permutation& v) { return bruhat_leq(u, v); });
}

}  // namespace orbitposet
