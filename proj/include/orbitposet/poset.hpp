#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "orbitposet/error.hpp"

namespace orbitposet {

/// (a, b) with a covered by b.
using Cover = std::pair<int, int>;

/*
  HasseDiagram is the label-free structure of a finite poset: its element
  count and cover relation. The constructor checks that the covers form an
  acyclic digraph that is its own transitive reduction and caches the
  reflexive-transitive closure, so leq() is a table lookup.

  All structural analysis (height, gradedness, lattice test, isomorphism,
  canonical form) is written against HasseDiagram so that posets labelled by
  permutations and by matrices share it.
*/
class HasseDiagram {
 public:
  HasseDiagram() = default;

  HasseDiagram(int size, std::vector<Cover> covers) : size_(size), covers_(std::move(covers)) {
    if (size_ < 0) throw InvalidInput("poset size must be nonnegative");
    std::sort(covers_.begin(), covers_.end());
    if (std::adjacent_find(covers_.begin(), covers_.end()) != covers_.end()) {
      throw InvalidInput("duplicate cover pair");
    }
    up_.assign(size_, {});
    down_.assign(size_, {});
    for (auto [a, b] : covers_) {
      if (a < 0 || b < 0 || a >= size_ || b >= size_ || a == b) {
        throw InvalidInput("cover (" + std::to_string(a) + "," + std::to_string(b) +
                           ") is out of range or a loop");
      }
      up_[a].push_back(b);
      down_[b].push_back(a);
    }
    topological_sort();
    build_closure();
    for (auto [a, b] : covers_) {
      for (int c : up_[a]) {
        if (c != b && leq(c, b)) {
          throw InvalidInput("cover (" + std::to_string(a) + "," + std::to_string(b) +
                             ") is implied by a longer chain");
        }
      }
    }
  }

  int size() const noexcept { return size_; }
  const std::vector<Cover>& covers() const noexcept { return covers_; }
  const std::vector<int>& upper_covers(int a) const { return up_.at(a); }
  const std::vector<int>& lower_covers(int a) const { return down_.at(a); }

  /// Elements in a linear extension (every cover goes forward).
  const std::vector<int>& linear_extension() const noexcept { return topo_; }

  bool leq(int a, int b) const { return closure_[static_cast<std::size_t>(a) * size_ + b] != 0; }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  bool covers(int a, int b) const {
    return std::binary_search(covers_.begin(), covers_.end(), Cover{a, b});
  }

  std::optional<int> minimum() const {
    for (int x = 0; x < size_; ++x) {
      bool below_all = true;
      for (int y = 0; y < size_ && below_all; ++y) below_all = leq(x, y);
      if (below_all) return x;
    }
    return std::nullopt;
  }

  std::optional<int> maximum() const {
    for (int x = 0; x < size_; ++x) {
      bool above_all = true;
      for (int y = 0; y < size_ && above_all; ++y) above_all = leq(y, x);
      if (above_all) return x;
    }
    return std::nullopt;
  }

  friend bool operator==(const HasseDiagram& a, const HasseDiagram& b) {
    return a.size_ == b.size_ && a.covers_ == b.covers_;
  }

 private:
  void topological_sort() {
    std::vector<int> indeg(size_, 0);
    for (auto [a, b] : covers_) ++indeg[b];
    topo_.clear();
    for (int x = 0; x < size_; ++x)
      if (indeg[x] == 0) topo_.push_back(x);
    for (std::size_t k = 0; k < topo_.size(); ++k) {
      for (int b : up_[topo_[k]])
        if (--indeg[b] == 0) topo_.push_back(b);
    }
    if (static_cast<int>(topo_.size()) != size_) throw InvalidInput("cover relation has a cycle");
  }

  void build_closure() {
    closure_.assign(static_cast<std::size_t>(size_) * size_, 0);
    for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
      const int a = *it;
      char* row = &closure_[static_cast<std::size_t>(a) * size_];
      row[a] = 1;
      for (int b : up_[a]) {
        const char* brow = &closure_[static_cast<std::size_t>(b) * size_];
        for (int c = 0; c < size_; ++c) row[c] |= brow[c];
      }
    }
  }

  int size_ = 0;
  std::vector<Cover> covers_;
  std::vector<std::vector<int>> up_;
  std::vector<std::vector<int>> down_;
  std::vector<int> topo_;
  std::vector<char> closure_;
};

/// A HasseDiagram whose elements carry opaque labels (permutations, matrices).
template <class Label>
class FinitePoset {
 public:
  FinitePoset() = default;

  FinitePoset(std::vector<Label> labels, HasseDiagram hasse)
      : labels_(std::move(labels)), hasse_(std::move(hasse)) {
    if (static_cast<int>(labels_.size()) != hasse_.size()) {
      throw InvalidInput("label count does not match poset size");
    }
  }

  int size() const noexcept { return hasse_.size(); }
  const Label& label(int i) const { return labels_.at(i); }
  const std::vector<Label>& labels() const noexcept { return labels_; }
  const HasseDiagram& hasse() const noexcept { return hasse_; }
  const std::vector<Cover>& covers() const noexcept { return hasse_.covers(); }
  bool leq(int a, int b) const { return hasse_.leq(a, b); }

  std::optional<int> index_of(const Label& x) const {
    auto it = std::find(labels_.begin(), labels_.end(), x);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<int>(it - labels_.begin());
  }

 private:
  std::vector<Label> labels_;
  HasseDiagram hasse_;
};

/// Covers of the order given as a dense relation matrix (row-major,
/// relation[a*k+b] != 0 iff a <= b). The relation must already be a partial
/// order.
inline std::vector<Cover> transitive_reduction(int k, const std::vector<char>& relation) {
  auto rel = [&](int a, int b) { return relation[static_cast<std::size_t>(a) * k + b] != 0; };
  std::vector<Cover> covers;
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (a == b || !rel(a, b)) continue;
      bool direct = true;
      for (int c = 0; c < k && direct; ++c) {
        if (c != a && c != b && rel(a, c) && rel(c, b)) direct = false;
      }
      if (direct) covers.emplace_back(a, b);
    }
  }
  return covers;
}

/// Builds the poset on `elements` ordered by `leq`, checking the partial-order
/// axioms first. Element i of the result is elements[i].
template <class Label, class Leq>
FinitePoset<Label> from_order_relation(std::vector<Label> elements, Leq&& leq) {
  const int k = static_cast<int>(elements.size());
  std::vector<char> rel(static_cast<std::size_t>(k) * k, 0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) rel[static_cast<std::size_t>(a) * k + b] = leq(elements[a], elements[b]) ? 1 : 0;
  auto at = [&](int a, int b) { return rel[static_cast<std::size_t>(a) * k + b] != 0; };

  const auto idx = [](int v) { return static_cast<std::size_t>(v); };
  for (int a = 0; a < k; ++a) {
    if (!at(a, a)) throw OrderViolation("relation is not reflexive", {idx(a), idx(a), idx(a)});
  }
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      if (at(a, b) && at(b, a)) {
        throw OrderViolation("relation is not antisymmetric", {idx(a), idx(b), idx(a)});
      }
    }
  }
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      if (!at(a, b)) continue;
      for (int c = 0; c < k; ++c) {
        if (at(b, c) && !at(a, c)) {
          throw OrderViolation("relation is not transitive", {idx(a), idx(b), idx(c)});
        }
      }
    }
  HasseDiagram hasse(k, transitive_reduction(k, rel));
  return FinitePoset<Label>(std::move(elements), std::move(hasse));
}

/// Longest chain, counted in edges.
inline int height(const HasseDiagram& p) {
  std::vector<int> depth(p.size(), 0);
  int best = 0;
  for (int a : p.linear_extension()) {
    for (int b : p.upper_covers(a)) depth[b] = std::max(depth[b], depth[a] + 1);
    best = std::max(best, depth[a]);
  }
  return best;
}

/// True iff every maximal chain from the minimum to the maximum has the same
/// length. Throws InvalidInput unless the poset is bounded.
inline bool is_graded(const HasseDiagram& p) {
  const auto bottom = p.minimum();
  const auto top = p.maximum();
  if (!bottom || !top) throw InvalidInput("gradedness needs a unique minimum and maximum");
  // Saturated chains from bottom to top are exactly the cover paths, so
  // gradedness is "shortest path == longest path".
  constexpr int kUnset = -1;
  std::vector<int> shortest(p.size(), kUnset), longest(p.size(), kUnset);
  shortest[*bottom] = longest[*bottom] = 0;
  for (int a : p.linear_extension()) {
    if (longest[a] == kUnset) continue;
    for (int b : p.upper_covers(a)) {
      shortest[b] = shortest[b] == kUnset ? shortest[a] + 1 : std::min(shortest[b], shortest[a] + 1);
      longest[b] = std::max(longest[b], longest[a] + 1);
    }
  }
  return shortest[*top] == longest[*top];
}

/// Every pair has a unique least upper bound and greatest lower bound.
inline bool is_lattice(const HasseDiagram& p) {
  const int k = p.size();
  std::vector<int> bounds;
  auto has_extremum = [&](bool least) {
    for (int x : bounds) {
      bool ok = true;
      for (int y : bounds) {
        if (!(least ? p.leq(x, y) : p.leq(y, x))) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
    return false;
  };
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      bounds.clear();
      for (int x = 0; x < k; ++x)
        if (p.leq(a, x) && p.leq(b, x)) bounds.push_back(x);
      if (!has_extremum(true)) return false;
      bounds.clear();
      for (int x = 0; x < k; ++x)
        if (p.leq(x, a) && p.leq(x, b)) bounds.push_back(x);
      if (!has_extremum(false)) return false;
    }
  }
  return true;
}

namespace detail {

/// Per-element invariant: (in-degree, out-degree, depth, co-depth,
/// down-set size, up-set size).
using ElementInvariant = std::array<int, 6>;

inline std::vector<ElementInvariant> element_invariants(const HasseDiagram& p) {
  const int k = p.size();
  std::vector<ElementInvariant> inv(k);
  std::vector<int> depth(k, 0), codepth(k, 0);
  const auto& order = p.linear_extension();
  for (int a : order)
    for (int b : p.upper_covers(a)) depth[b] = std::max(depth[b], depth[a] + 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    for (int b : p.upper_covers(*it)) codepth[*it] = std::max(codepth[*it], codepth[b] + 1);
  for (int a = 0; a < k; ++a) {
    int below = 0, above = 0;
    for (int x = 0; x < k; ++x) {
      below += p.leq(x, a) ? 1 : 0;
      above += p.leq(a, x) ? 1 : 0;
    }
    inv[a] = {static_cast<int>(p.lower_covers(a).size()), static_cast<int>(p.upper_covers(a).size()),
              depth[a], codepth[a], below, above};
  }
  return inv;
}

/// Splits the colour classes of `colour` (dense values 0..c-1) by the
/// colours of upper and lower covers until stable. Existing colour order is
/// kept: an element never moves below one that had a smaller colour.
inline void refine_colours(const HasseDiagram& p, std::vector<int>& colour) {
  const int k = p.size();
  using Key = std::tuple<int, std::vector<int>, std::vector<int>>;
  int classes = k == 0 ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
  while (true) {
    std::vector<Key> key(k);
    for (int a = 0; a < k; ++a) {
      std::vector<int> up, down;
      for (int b : p.upper_covers(a)) up.push_back(colour[b]);
      for (int b : p.lower_covers(a)) down.push_back(colour[b]);
      std::sort(up.begin(), up.end());
      std::sort(down.begin(), down.end());
      key[a] = Key{colour[a], std::move(up), std::move(down)};
    }
    std::vector<Key> uniq(key);
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    if (static_cast<int>(uniq.size()) == classes) return;
    classes = static_cast<int>(uniq.size());
    for (int a = 0; a < k; ++a)
      colour[a] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), key[a]) - uniq.begin());
  }
}

/// Stable colouring seeded with element_invariants. Colour values depend
/// only on the isomorphism type, never on the input numbering.
inline std::vector<int> refined_colours(const HasseDiagram& p) {
  const int k = p.size();
  const auto inv = element_invariants(p);
  std::vector<int> colour(k);
  std::vector<ElementInvariant> keys(inv);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (int a = 0; a < k; ++a)
    colour[a] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), inv[a]) - keys.begin());
  refine_colours(p, colour);
  return colour;
}

}  // namespace detail

/// Searches for a cover-preserving bijection f with f(a) = witness[a].
/// Candidate images are restricted to elements with identical invariant
/// vectors (degrees, depth profile, up/down-set sizes).
inline std::optional<std::vector<int>> find_isomorphism(const HasseDiagram& p, const HasseDiagram& q) {
  const int k = p.size();
  if (k != q.size() || p.covers().size() != q.covers().size() || height(p) != height(q)) return std::nullopt;
  const auto ip = detail::element_invariants(p);
  const auto iq = detail::element_invariants(q);
  {
    auto sp = ip, sq = iq;
    std::sort(sp.begin(), sp.end());
    std::sort(sq.begin(), sq.end());
    if (sp != sq) return std::nullopt;
  }
  std::vector<std::vector<int>> candidates(k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (ip[a] == iq[b]) candidates[a].push_back(b);

  std::vector<int> order(k);
  for (int a = 0; a < k; ++a) order[a] = a;
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return candidates[x].size() < candidates[y].size(); });

  std::vector<int> image(k, -1);
  std::vector<char> used(k, 0);
  auto consistent = [&](int a, int b) {
    for (int a2 = 0; a2 < k; ++a2) {
      const int b2 = image[a2];
      if (b2 < 0) continue;
      if (p.covers(a, a2) != q.covers(b, b2) || p.covers(a2, a) != q.covers(b2, b)) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, int depth) -> bool {
    if (depth == k) return true;
    const int a = order[depth];
    for (int b : candidates[a]) {
      if (used[b] || !consistent(a, b)) continue;
      image[a] = b;
      used[b] = 1;
      if (self(self, depth + 1)) return true;
      image[a] = -1;
      used[b] = 0;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return image;
}

inline bool are_isomorphic(const HasseDiagram& p, const HasseDiagram& q) {
  return find_isomorphism(p, q).has_value();
}

/// Result of canonical_labeling: the certificate and, for each canonical
/// position, the element placed there.
struct CanonicalLabeling {
  std::string certificate;
  std::vector<int> order;
};

/// Deterministic certificate, equal for two posets iff they are isomorphic.
///
/// Individualisation-refinement: starting from the refined colouring, the
/// first non-singleton colour class is split by singling out each of its
/// elements in turn and refining again, until every class is a singleton.
/// Each discrete colouring is a numbering; the certificate is the least
/// cover encoding over all of them. The encoding lists, for each position k,
/// the cover bits between k and every earlier position. The string starts
/// with the zero-padded size, so sorting certificates sorts by size first.
inline CanonicalLabeling canonical_labeling(const HasseDiagram& p) {
  const int k = p.size();
  std::string size_tag = std::to_string(k);
  if (size_tag.size() < 2) size_tag.insert(0, 2 - size_tag.size(), '0');
  if (k == 0) return {size_tag + ":", {}};

  // Twins (same upper and lower covers) are swapped by an automorphism that
  // fixes everything else, so only one of them needs individualising.
  auto twins = [&](int x, int y) {
    return p.upper_covers(x) == p.upper_covers(y) && p.lower_covers(x) == p.lower_covers(y);
  };

  std::string best;
  std::vector<int> best_order;
  auto leaf = [&](const std::vector<int>& colour) {
    std::vector<int> order(k);
    for (int a = 0; a < k; ++a) order[colour[a]] = a;
    std::string code;
    code.reserve(static_cast<std::size_t>(k) * (k - 1));
    for (int pos = 1; pos < k; ++pos)
      for (int i = 0; i < pos; ++i) {
        code += p.covers(order[i], order[pos]) ? '1' : '0';
        code += p.covers(order[pos], order[i]) ? '1' : '0';
      }
    if (best_order.empty() || code < best) {
      best = std::move(code);
      best_order = std::move(order);
    }
  };

  auto search = [&](auto&& self, const std::vector<int>& colour) -> void {
    std::vector<int> cell_size(k, 0);
    for (int c : colour) ++cell_size[c];
    int target = -1;
    for (int c = 0; c < k && target < 0; ++c)
      if (cell_size[c] > 1) target = c;
    if (target < 0) {
      leaf(colour);
      return;
    }
    std::vector<int> tried;
    for (int v = 0; v < k; ++v) {
      if (colour[v] != target) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](int t) { return twins(t, v); })) continue;
      tried.push_back(v);
      std::vector<int> next(colour);
      for (int a = 0; a < k; ++a)
        if (colour[a] > target || (colour[a] == target && a != v)) ++next[a];
      detail::refine_colours(p, next);
      self(self, next);
    }
  };
  search(search, detail::refined_colours(p));
  return {size_tag + ":" + best, best_order};
}

inline std::string canonical_form(const HasseDiagram& p) { return canonical_labeling(p).certificate; }

/// The same poset renumbered so that element order[pos] becomes pos.
inline HasseDiagram relabeled(const HasseDiagram& p, const std::vector<int>& order) {
  std::vector<int> position(p.size());
  for (int pos = 0; pos < p.size(); ++pos) position[order.at(pos)] = pos;
  std::vector<Cover> covers;
  for (auto [a, b] : p.covers()) covers.emplace_back(position[a], position[b]);
  return HasseDiagram(p.size(), std::move(covers));
}

template <class L>
int height(const FinitePoset<L>& p) { return height(p.hasse()); }
template <class L>
bool is_graded(const FinitePoset<L>& p) { return is_graded(p.hasse()); }
template <class L>
bool is_lattice(const FinitePoset<L>& p) { return is_lattice(p.hasse()); }
template <class L, class M>
bool are_isomorphic(const FinitePoset<L>& p, const FinitePoset<M>& q) { return are_isomorphic(p.hasse(), q.hasse()); }
template <class L>
std::string canonical_form(const FinitePoset<L>& p) { return canonical_form(p.hasse()); }

}  // namespace orbitposet
