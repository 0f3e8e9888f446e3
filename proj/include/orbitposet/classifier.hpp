#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "orbitposet/bruhat.hpp"
#include "orbitposet/error.hpp"
#include "orbitposet/orbit_matrix.hpp"
#include "orbitposet/parabolic.hpp"
#include "orbitposet/poset.hpp"

/*
  Classification of complexity-one double flag varieties SL(n)/P_I x SL(n)/P_J.

  The eight families are the rows of the complexity-one table, each a pair of
  block shapes (Bl(P_I), Bl(P_J)) with the printed parameter constraints.
  reduced_case_list() carries the 49 reduced instances together with the
  poset names P.1..P.28 printed against them; classify() buckets any list of
  instances by canonical form and cross-checks those names against the
  computed isomorphism partition.
*/

namespace orbitposet {

inline constexpr int kTableRows = 8;

/// One instance of a table row.
struct CaseSpec {
  int row = 0;
  BlockComposition blocks_i;
  BlockComposition blocks_j;
  std::optional<std::string> label;  ///< printed poset name, reduced instances only
  int item = 0;                      ///< 1-based position in the row's reduced list, 0 otherwise

  int n() const { return blocks_i.n(); }

  std::string to_string() const {
    std::string out = "(" + blocks_i.to_string() + ")/(" + blocks_j.to_string() + ")";
    out += " [row " + std::to_string(row);
    if (item > 0) out += " #" + std::to_string(item);
    if (label) out += " " + *label;
    return out + "]";
  }

  friend bool operator==(const CaseSpec&, const CaseSpec&) = default;
};

/// Whether (p, q) satisfies the printed constraints of table row `row`.
inline bool satisfies_row_constraints(int row, const BlockComposition& p, const BlockComposition& q) {
  if (p.n() != q.n()) return false;
  const auto& a = p.blocks();
  const auto& b = q.blocks();
  auto all_at_least = [](const std::vector<int>& v, int lo) {
    return std::all_of(v.begin(), v.end(), [lo](int x) { return x >= lo; });
  };
  switch (row) {
    case 1:  // (3, p2), p2 >= 3 | (q1, q2, q3), all >= 2
      return a.size() == 2 && a[0] == 3 && a[1] >= 3 && b.size() == 3 && all_at_least(b, 2);
    case 2:  // (p1, p2) >= 3 | (2, 2, q3), q3 >= 2
      return a.size() == 2 && all_at_least(a, 3) && b.size() == 3 && b[0] == 2 && b[1] == 2 && b[2] >= 2;
    case 3:  // (p1, p2) >= 3 | (2, q2, 2), q2 >= 2
      return a.size() == 2 && all_at_least(a, 3) && b.size() == 3 && b[0] == 2 && b[1] >= 2 && b[2] == 2;
    case 4:  // (2, p2), p2 >= 3 | (q1, q2, q3, q4)
      return a.size() == 2 && a[0] == 2 && a[1] >= 3 && b.size() == 4;
    case 5:  // (p1, p2) >= 2 | (1, 1, 1, q4)
      return a.size() == 2 && all_at_least(a, 2) && b.size() == 4 && b[0] == 1 && b[1] == 1 && b[2] == 1;
    case 6:  // (p1, p2) >= 2 | (1, 1, q3, 1), q3 >= 2
      return a.size() == 2 && all_at_least(a, 2) && b.size() == 4 && b[0] == 1 && b[1] == 1 && b[2] >= 2 &&
             b[3] == 1;
    case 7:  // (1, p2, 1), p2 >= 2 | (q1, q2, q3)
      return a.size() == 3 && a[0] == 1 && a[1] >= 2 && a[2] == 1 && b.size() == 3;
    case 8:  // (1, 1, p3), p3 >= 2 | (q1, q2, q3)
      return a.size() == 3 && a[0] == 1 && a[1] == 1 && a[2] >= 2 && b.size() == 3;
    default:
      return false;
  }
}

inline CaseSpec make_case(int row, std::vector<int> p, std::vector<int> q, std::optional<std::string> label = {},
                          int item = 0) {
  CaseSpec spec{row, BlockComposition(std::move(p)), BlockComposition(std::move(q)), std::move(label), item};
  if (!satisfies_row_constraints(row, spec.blocks_i, spec.blocks_j)) {
    throw InvalidInput("instance " + spec.to_string() + " violates the constraints of its row");
  }
  return spec;
}

/// The 49 reduced instances with their printed poset names, row by row.
inline std::vector<CaseSpec> reduced_case_list() {
  struct Entry {
    std::vector<int> p, q;
    int label;
  };
  const std::vector<std::vector<Entry>> rows = {
      // row 1
      {{{3, 3}, {2, 2, 2}, 1},
       {{3, 4}, {2, 2, 3}, 2},
       {{3, 4}, {3, 2, 2}, 3},
       {{3, 4}, {2, 3, 2}, 4},
       {{3, 5}, {2, 3, 3}, 5},
       {{3, 5}, {3, 2, 3}, 6},
       {{3, 5}, {3, 3, 2}, 7},
       {{3, 6}, {3, 3, 3}, 8}},
      // row 2
      {{{3, 3}, {2, 2, 2}, 1}, {{3, 4}, {2, 2, 3}, 2}, {{4, 3}, {2, 2, 3}, 3}, {{4, 4}, {2, 2, 4}, 6}},
      // row 3
      {{{3, 3}, {2, 2, 2}, 1}, {{3, 4}, {2, 3, 2}, 4}, {{4, 4}, {2, 4, 2}, 9}},
      // row 4
      {{{2, 3}, {1, 1, 1, 2}, 10},
       {{2, 3}, {1, 1, 2, 1}, 11},
       {{2, 3}, {1, 2, 1, 1}, 12},
       {{2, 3}, {2, 1, 1, 1}, 13},
       {{2, 4}, {1, 1, 2, 2}, 14},
       {{2, 4}, {1, 2, 1, 2}, 4},
       {{2, 4}, {2, 1, 1, 2}, 15},
       {{2, 4}, {1, 2, 2, 1}, 4},
       {{2, 4}, {2, 1, 2, 1}, 15},
       {{2, 4}, {2, 2, 1, 1}, 14},
       {{2, 5}, {1, 2, 2, 2}, 5},
       {{2, 5}, {2, 1, 2, 2}, 16},
       {{2, 5}, {2, 2, 1, 2}, 17},
       {{2, 5}, {2, 2, 2, 1}, 7},
       {{2, 6}, {2, 2, 2, 2}, 8}},
      // row 5
      {{{2, 2}, {1, 1, 1, 1}, 18}, {{2, 3}, {1, 1, 1, 2}, 10}, {{3, 2}, {1, 1, 1, 2}, 13}, {{3, 3}, {1, 1, 1, 3}, 19}},
      // row 6
      {{{2, 3}, {1, 1, 2, 1}, 11}, {{3, 2}, {1, 1, 2, 1}, 12}, {{3, 3}, {1, 1, 3, 1}, 20}},
      // row 7
      {{{1, 2, 1}, {1, 1, 2}, 21},
       {{1, 2, 1}, {1, 2, 1}, 1},
       {{1, 3, 1}, {1, 2, 2}, 4},
       {{1, 3, 1}, {2, 1, 2}, 22},
       {{1, 4, 1}, {2, 2, 2}, 9}},
      // row 8
      {{{1, 1, 2}, {1, 1, 2}, 23},
       {{1, 1, 2}, {1, 2, 1}, 21},
       {{1, 1, 2}, {2, 1, 1}, 24},
       {{1, 1, 3}, {1, 2, 2}, 25},
       {{1, 1, 3}, {2, 1, 2}, 26},
       {{1, 1, 3}, {2, 2, 1}, 27},
       {{1, 1, 4}, {2, 2, 2}, 28}},
  };
  std::vector<CaseSpec> out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    int item = 0;
    for (const Entry& e : rows[r]) {
      out.push_back(make_case(static_cast<int>(r) + 1, e.p, e.q, "P." + std::to_string(e.label), ++item));
    }
  }
  return out;
}

namespace detail {

/// Compositions of n into exactly k positive parts, lexicographic.
inline std::vector<std::vector<int>> compositions(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k <= 0 || n < k) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int parts) -> void {
    if (parts == 1) {
      cur.push_back(left);
      out.push_back(cur);
      cur.pop_back();
      return;
    }
    for (int x = 1; x <= left - (parts - 1); ++x) {
      cur.push_back(x);
      self(self, left - x, parts - 1);
      cur.pop_back();
    }
  };
  rec(rec, n, k);
  return out;
}

inline std::pair<int, int> row_block_counts(int row) {
  if (row >= 1 && row <= 3) return {2, 3};
  if (row >= 4 && row <= 6) return {2, 4};
  if (row == 7 || row == 8) return {3, 3};
  throw InvalidInput("table row must be in 1..8, got " + std::to_string(row));
}

}  // namespace detail

/// Every instance of `row` with n <= n_max, ordered by n, then blocks.
inline std::vector<CaseSpec> row_instances(int row, int n_max) {
  const auto [kp, kq] = detail::row_block_counts(row);
  std::vector<CaseSpec> out;
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& p : detail::compositions(n, kp)) {
      for (const auto& q : detail::compositions(n, kq)) {
        BlockComposition bp(p), bq(q);
        if (satisfies_row_constraints(row, bp, bq)) out.push_back(CaseSpec{row, bp, bq, std::nullopt, 0});
      }
    }
  }
  return out;
}

/// Smallest n admitting an instance of `row`.
inline int smallest_rank(int row) {
  detail::row_block_counts(row);
  for (int n = 1;; ++n)
    if (!row_instances(row, n).empty()) return n;
}

/// Sweep ceiling: 14 for rows 1-4, 12 for rows 5-8.
inline int default_sweep_limit(int row) {
  detail::row_block_counts(row);
  return row <= 4 ? 14 : 12;
}

enum class Backend { bruhat, matrix, both };

inline std::string to_string(Backend b) {
  switch (b) {
    case Backend::bruhat:
      return "bruhat";
    case Backend::matrix:
      return "matrix";
    case Backend::both:
      return "both";
  }
  return "?";
}

inline Backend parse_backend(std::string_view s) {
  if (s == "bruhat") return Backend::bruhat;
  if (s == "matrix") return Backend::matrix;
  if (s == "both") return Backend::both;
  throw InvalidInput("unknown backend '" + std::string(s) + "' (expected bruhat, matrix or both)");
}

using OrbitLabel = std::variant<Permutation, OrbitMatrix>;

inline std::string to_string(const OrbitLabel& label) {
  return std::visit([](const auto& x) { return x.to_string(); }, label);
}

/// Inclusion poset of diagonal orbit closures for (blocks_i, blocks_j).
/// Bruhat and `both` label elements by minimal representatives, matrix by
/// orbit matrices. `both` computes the two routes and throws BackendMismatch
/// unless they agree under the coset/matrix bijection.
inline FinitePoset<OrbitLabel> compute_poset(const BlockComposition& blocks_i, const BlockComposition& blocks_j,
                                             Backend backend) {
  auto relabel = [](const auto& poset) {
    std::vector<OrbitLabel> labels(poset.labels().begin(), poset.labels().end());
    return FinitePoset<OrbitLabel>(std::move(labels), poset.hasse());
  };
  if (backend == Backend::matrix) return relabel(matrix_poset(blocks_i, blocks_j));
  const CosetSystem sys = CosetSystem::from_blocks(blocks_i, blocks_j);
  auto bruhat = coset_poset(sys);
  if (backend == Backend::both) check_backend_equivalence(bruhat, matrix_poset(blocks_i, blocks_j), sys);
  return relabel(bruhat);
}

inline FinitePoset<OrbitLabel> compute_case(const CaseSpec& spec, Backend backend) {
  return compute_poset(spec.blocks_i, spec.blocks_j, backend);
}

/// Worker count from ORBITPOSET_THREADS, else the hardware concurrency.
inline int thread_count() {
  if (const char* env = std::getenv("ORBITPOSET_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(i) for i in [0, count) on up to `threads` workers. The first
/// exception thrown by any worker is rethrown after all workers join.
template <class Fn>
void parallel_for(std::size_t count, Fn&& fn, int threads = thread_count()) {
  const std::size_t workers = std::min<std::size_t>(std::max(threads, 1), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

struct ClassStats {
  int size = 0;
  int height = 0;
  bool graded = false;
  bool lattice = false;
};

inline ClassStats poset_stats(const HasseDiagram& p) {
  return ClassStats{p.size(), height(p), is_graded(p), is_lattice(p)};
}

/// One isomorphism class of inclusion posets.
struct PosetClass {
  std::string certificate;
  HasseDiagram shape;               ///< covers in canonical numbering
  ClassStats stats;
  std::vector<std::string> labels;  ///< distinct printed names among members, sorted by number
  std::vector<CaseSpec> members;    ///< in input order

  /// "P.4", "P.15/P.19", or "" when no member carries a printed name.
  std::string label() const {
    std::string out;
    for (const auto& l : labels) out += (out.empty() ? "" : "/") + l;
    return out;
  }

  std::set<int> rows() const {
    std::set<int> r;
    for (const auto& m : members) r.insert(m.row);
    return r;
  }
};

/// Two printed names that contradict the computed partition.
struct LabelConflictRecord {
  CaseSpec first;
  CaseSpec second;
  bool same_label = false;  ///< true: same name, non-isomorphic; false: different names, isomorphic

  std::string describe() const {
    return same_label ? first.to_string() + " and " + second.to_string() + " share a name but are not isomorphic"
                      : first.to_string() + " and " + second.to_string() + " have different names but are isomorphic";
  }
};

struct ClassCatalog {
  std::vector<PosetClass> classes;  ///< ordered by certificate
  std::vector<LabelConflictRecord> conflicts;

  std::optional<std::size_t> find(const std::string& certificate) const {
    auto it = std::lower_bound(classes.begin(), classes.end(), certificate,
                               [](const PosetClass& c, const std::string& key) { return c.certificate < key; });
    if (it == classes.end() || it->certificate != certificate) return std::nullopt;
    return static_cast<std::size_t>(it - classes.begin());
  }

  /// Class holding the member equal to `spec`.
  std::optional<std::size_t> class_of(const CaseSpec& spec) const {
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (const auto& m : classes[c].members)
        if (m == spec) return c;
    return std::nullopt;
  }
};

enum class LabelPolicy {
  strict,  ///< throw LabelConflict on the first contradiction
  record,  ///< keep going and list every contradiction in the catalog
};

namespace detail {

inline int label_number(const std::string& label) {
  const auto dot = label.find('.');
  return dot == std::string::npos ? 0 : std::atoi(label.c_str() + dot + 1);
}

}  // namespace detail

struct ClassifiedCase {
  std::string certificate;
  HasseDiagram shape;
};

inline ClassifiedCase classify_one(const CaseSpec& spec, Backend backend) {
  const auto poset = compute_case(spec, backend);
  auto canon = canonical_labeling(poset.hasse());
  return ClassifiedCase{std::move(canon.certificate), relabeled(poset.hasse(), canon.order)};
}

/// Buckets `specs` by canonical form and cross-checks printed names: members
/// sharing a name must share a class, members with different names must not.
inline ClassCatalog classify(const std::vector<CaseSpec>& specs, Backend backend,
                             LabelPolicy policy = LabelPolicy::strict, int threads = thread_count()) {
  std::vector<ClassifiedCase> results(specs.size());
  parallel_for(specs.size(), [&](std::size_t i) { results[i] = classify_one(specs[i], backend); }, threads);

  ClassCatalog catalog;
  std::map<std::string, std::size_t> bucket;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    auto [it, fresh] = bucket.try_emplace(results[i].certificate, catalog.classes.size());
    if (fresh) {
      PosetClass c;
      c.certificate = results[i].certificate;
      c.shape = results[i].shape;
      c.stats = poset_stats(c.shape);
      catalog.classes.push_back(std::move(c));
    }
    PosetClass& c = catalog.classes[it->second];
    c.members.push_back(specs[i]);
    if (specs[i].label && std::find(c.labels.begin(), c.labels.end(), *specs[i].label) == c.labels.end()) {
      c.labels.push_back(*specs[i].label);
    }
  }
  for (auto& c : catalog.classes) {
    std::sort(c.labels.begin(), c.labels.end(), [](const std::string& a, const std::string& b) {
      return std::pair(detail::label_number(a), a) < std::pair(detail::label_number(b), b);
    });
  }
  std::sort(catalog.classes.begin(), catalog.classes.end(),
            [](const PosetClass& a, const PosetClass& b) { return a.certificate < b.certificate; });

  for (std::size_t a = 0; a < specs.size(); ++a) {
    if (!specs[a].label) continue;
    for (std::size_t b = a + 1; b < specs.size(); ++b) {
      if (!specs[b].label) continue;
      const bool same_label = *specs[a].label == *specs[b].label;
      const bool same_class = results[a].certificate == results[b].certificate;
      if (same_label == same_class) continue;
      LabelConflictRecord record{specs[a], specs[b], same_label};
      if (policy == LabelPolicy::strict) throw LabelConflict(record.describe());
      catalog.conflicts.push_back(std::move(record));
    }
  }
  return catalog;
}

struct SweepPoint {
  CaseSpec spec;
  std::size_t class_index = 0;  ///< into the reference catalog
};

struct SweepReport {
  int row = 0;
  int n_max = 0;
  std::vector<SweepPoint> points;

  /// Reference classes reached, ascending.
  std::set<std::size_t> classes_reached() const {
    std::set<std::size_t> out;
    for (const auto& p : points) out.insert(p.class_index);
    return out;
  }
};

/// Classifies every instance of `row` with n <= n_max through the matrix
/// backend and locates each in `reference`. Throws ClassificationFailure for
/// an instance outside every reference class.
inline SweepReport stability_sweep(int row, int n_max, const ClassCatalog& reference, int threads = thread_count()) {
  if (n_max < smallest_rank(row)) {
    throw InvalidInput("row " + std::to_string(row) + " has no instances with n <= " + std::to_string(n_max));
  }
  const auto specs = row_instances(row, n_max);
  std::vector<std::string> certs(specs.size());
  parallel_for(
      specs.size(),
      [&](std::size_t i) { certs[i] = canonical_form(compute_case(specs[i], Backend::matrix).hasse()); }, threads);
  SweepReport report{row, n_max, {}};
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto idx = reference.find(certs[i]);
    if (!idx) {
      throw ClassificationFailure("instance " + specs[i].to_string() + " (n = " + std::to_string(specs[i].n()) +
                                  ") is not isomorphic to any reference class");
    }
    report.points.push_back(SweepPoint{specs[i], *idx});
  }
  return report;
}

/// Reference catalog of the reduced instances (matrix backend, recorded
/// label conflicts).
inline ClassCatalog reduced_catalog(int threads = thread_count()) {
  return classify(reduced_case_list(), Backend::matrix, LabelPolicy::record, threads);
}

inline SweepReport stability_sweep(int row, int n_max) { return stability_sweep(row, n_max, reduced_catalog()); }

/// Reduced cases of `rows` followed by their sweep instances up to n_max
/// (the per-row default when unset). Rows whose smallest rank exceeds
/// n_max contribute only their reduced cases.
inline std::vector<CaseSpec> catalog_specs(const std::set<int>& rows, std::optional<int> n_max = {}) {
  for (int row : rows) {
    if (row < 1 || row > kTableRows) throw InvalidInput("row must be in 1..8, got " + std::to_string(row));
  }
  std::vector<CaseSpec> specs;
  for (const auto& s : reduced_case_list()) {
    if (rows.count(s.row)) specs.push_back(s);
  }
  for (int row : rows) {
    const int limit = n_max.value_or(default_sweep_limit(row));
    if (limit < smallest_rank(row)) continue;
    for (auto& s : row_instances(row, limit)) specs.push_back(std::move(s));
  }
  return specs;
}

struct CatalogSummary {
  int class_count = 0;
  int max_size = 0;
  int max_height = 0;
  int lattice_count = 0;
  int non_lattice_count = 0;
  int graded_count = 0;
  int non_graded_count = 0;
  std::vector<std::pair<std::string, ClassStats>> rows;  ///< (label, stats) per class
};

inline CatalogSummary statistics(const ClassCatalog& cat) {
  CatalogSummary s;
  s.class_count = static_cast<int>(cat.classes.size());
  for (const auto& c : cat.classes) {
    s.max_size = std::max(s.max_size, c.stats.size);
    s.max_height = std::max(s.max_height, c.stats.height);
    (c.stats.lattice ? s.lattice_count : s.non_lattice_count)++;
    (c.stats.graded ? s.graded_count : s.non_graded_count)++;
    s.rows.emplace_back(c.label(), c.stats);
  }
  return s;
}

}  // namespace orbitposet
