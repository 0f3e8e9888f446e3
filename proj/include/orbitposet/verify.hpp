#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "orbitposet/bruhat.hpp"
#include "orbitposet/classifier.hpp"
#include "orbitposet/orbit_matrix.hpp"
#include "orbitposet/parabolic.hpp"
#include "orbitposet/poset.hpp"
#include "orbitposet/serialize.hpp"

/*
  The acceptance checks, one CheckResult per criterion. Shared by the
  `verify` subcommand and the acceptance test binary so both report the
  same thing. Thresholds and tolerances are fixed here.
*/

namespace orbitposet {

struct CheckResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  bool quick = false;  ///< shrink sweeps and samples to finish in a few seconds
  int threads = thread_count();
  std::uint32_t seed = 20240917;
};

/// Expected values.
struct Expected {
  static constexpr int kClassCount = 28;
  static constexpr int kMaxSize = 10;
  static constexpr int kMaxHeight = 6;
  static constexpr int kLatticeCount = 20;
  static constexpr int kNonLatticeCount = 8;
  static constexpr int kNonGradedCount = 5;
  static constexpr double kClassifySeconds = 5.0;
  static constexpr double kEquivalenceSeconds = 30.0;
  static constexpr double kSweepSeconds = 60.0;
  static inline const std::set<std::string> kNonGradedLabels = {"P.21", "P.22", "P.25", "P.27", "P.28"};
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep = ", ") {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

inline std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << " s";
  return os.str();
}

struct SubCheck {
  bool ok = true;
  std::vector<std::string> notes;
  void require(bool cond, const std::string& note) {
    ok = ok && cond;
    notes.push_back((cond ? "" : "FAIL: ") + note);
  }
};

inline IndexSet random_subset(std::mt19937& rng, int n) {
  std::uint64_t mask = n > 1 ? std::uniform_int_distribution<std::uint64_t>(0, (std::uint64_t{1} << (n - 1)) - 1)(rng) : 0;
  return IndexSet::from_mask(mask << 1);
}

inline Permutation random_permutation(std::mt19937& rng, int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(std::move(v));
}

inline BlockComposition random_composition(std::mt19937& rng, int n) {
  std::vector<int> blocks{1};
  std::bernoulli_distribution cut(0.5);
  for (int i = 1; i < n; ++i) {
    if (cut(rng)) {
      blocks.push_back(1);
    } else {
      ++blocks.back();
    }
  }
  return BlockComposition(std::move(blocks));
}

inline long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detail

/// Bruhat prefix dominance against the subword oracle: exhaustive n <= 4,
/// sampled n = 5, 6.
inline std::string check_bruhat_vs_subword(std::mt19937& rng, bool quick) {
  long long pairs = 0;
  for (int n = 1; n <= 4; ++n) {
    const auto group = enumerate_symmetric_group(n);
    for (const auto& u : group)
      for (const auto& v : group) {
        if (bruhat_leq(u, v) != bruhat_leq_subword_oracle(u, v)) {
          throw std::logic_error("bruhat_leq disagrees with the subword oracle on (" + u.to_string() + ", " +
                                 v.to_string() + ")");
        }
        ++pairs;
      }
  }
  for (int n : {5, 6}) {
    const int samples = quick ? 200 : (n == 5 ? 3000 : 1500);
    for (int s = 0; s < samples; ++s) {
      Permutation u = detail::random_permutation(rng, n);
      Permutation v = detail::random_permutation(rng, n);
      // Orient comparable pairs upwards half the time.
      if (s % 2 == 0 && !bruhat_leq(u, v) && bruhat_leq(v, u)) std::swap(u, v);
      if (bruhat_leq(u, v) != bruhat_leq_subword_oracle(u, v)) {
        throw std::logic_error("bruhat_leq disagrees with the subword oracle on (" + u.to_string() + ", " +
                               v.to_string() + ")");
      }
      ++pairs;
    }
  }
  return std::to_string(pairs) + " pairs agree";
}

/// Unique additive factorisation x = u w v for every coset system and
/// element at n <= 5, sampled at n = 6, 7.
inline std::string check_additive_decomposition(std::mt19937& rng, bool quick) {
  long long checked = 0;
  const int exhaustive_max = quick ? 4 : 5;
  for (int n = 1; n <= exhaustive_max; ++n) {
    const auto group = enumerate_symmetric_group(n);
    const std::uint64_t subsets = std::uint64_t{1} << (n - 1);
    for (std::uint64_t im = 0; im < subsets; ++im)
      for (std::uint64_t jm = 0; jm < subsets; ++jm) {
        const CosetSystem sys(GeneratorSet(n, IndexSet::from_mask(im << 1)), GeneratorSet(n, IndexSet::from_mask(jm << 1)));
        for (const auto& x : group) {
          const auto d = verify_additive_decomposition(sys, x);
          if (d.u * d.w * d.v != x) throw std::logic_error("decomposition does not multiply back to " + x.to_string());
          ++checked;
        }
      }
  }
  for (int n : {6, 7}) {
    const int samples = quick ? 20 : 300;
    for (int s = 0; s < samples; ++s) {
      const CosetSystem sys(GeneratorSet(n, detail::random_subset(rng, n)), GeneratorSet(n, detail::random_subset(rng, n)));
      const Permutation x = detail::random_permutation(rng, n);
      const auto d = verify_additive_decomposition(sys, x);
      if (d.u * d.w * d.v != x) throw std::logic_error("decomposition does not multiply back to " + x.to_string());
      ++checked;
    }
  }
  return std::to_string(checked) + " factorisations unique and additive";
}

/// theta-dual instances (both compositions reversed) land in the same class.
inline std::string check_theta_duality(const std::vector<CaseSpec>& swept, int threads) {
  std::vector<char> ok(swept.size(), 0);
  parallel_for(
      swept.size(),
      [&](std::size_t i) {
        const auto& s = swept[i];
        const auto direct = matrix_poset(s.blocks_i, s.blocks_j);
        const auto dual = matrix_poset(s.blocks_i.reversed(), s.blocks_j.reversed());
        ok[i] = canonical_form(direct.hasse()) == canonical_form(dual.hasse());
      },
      threads);
  for (std::size_t i = 0; i < swept.size(); ++i) {
    if (!ok[i]) throw std::logic_error("theta-dual of " + swept[i].to_string() + " is not isomorphic");
  }
  // The permutation-level involution on a few Bruhat instances as well.
  for (const auto& s : reduced_case_list()) {
    if (s.n() > 7) continue;
    const CosetSystem sys = CosetSystem::from_blocks(s.blocks_i, s.blocks_j);
    const CosetSystem dual = theta_dual(sys);
    if (dual.left_blocks() != s.blocks_i.reversed() || dual.right_blocks() != s.blocks_j.reversed()) {
      throw std::logic_error("theta_dual does not reverse the blocks of " + s.to_string());
    }
    if (!are_isomorphic(coset_poset(sys), coset_poset(dual))) {
      throw std::logic_error("Bruhat theta-dual of " + s.to_string() + " is not isomorphic");
    }
  }
  return std::to_string(swept.size()) + " swept instances theta-invariant";
}

/// |U(I,J)| = C(n,k) for J empty and I^c = {k}, n <= 8.
inline std::string check_grassmannian_counts() {
  int checked = 0;
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k < n; ++k) {
      const CosetSystem sys(GeneratorSet(n, IndexSet{k}.complement_in(n)), GeneratorSet(n, IndexSet{}));
      const auto reps = enumerate_minimal_reps(sys);
      if (static_cast<long long>(reps.size()) != detail::binomial(n, k)) {
        throw std::logic_error("Grassmannian count mismatch at n=" + std::to_string(n) + ", k=" + std::to_string(k));
      }
      ++checked;
    }
  }
  return std::to_string(checked) + " (n,k) pairs";
}

/// Margin-matrix count equals |U(I,J)| for random block pairs, n <= 7.
inline std::string check_contingency_counts(std::mt19937& rng, bool quick) {
  const int samples = quick ? 60 : 400;
  std::uniform_int_distribution<int> rank(1, 7);
  for (int s = 0; s < samples; ++s) {
    const int n = rank(rng);
    const BlockComposition rows = detail::random_composition(rng, n);
    const BlockComposition cols = detail::random_composition(rng, n);
    const auto reps = enumerate_minimal_reps(CosetSystem::from_blocks(rows, cols));
    const auto mats = enumerate_margin_matrices(rows, cols);
    if (reps.size() != mats.size()) {
      throw std::logic_error("count mismatch for (" + rows.to_string() + ")/(" + cols.to_string() + ")");
    }
  }
  return std::to_string(samples) + " random block pairs";
}

/// Runs every acceptance criterion and returns one result per criterion.
inline std::vector<CheckResult> run_acceptance(const VerifyOptions& opt = {}) {
  using detail::Clock;
  std::vector<CheckResult> results;
  std::mt19937 rng(opt.seed);

  const auto t_classify = Clock::now();
  const ClassCatalog catalog = classify(reduced_case_list(), Backend::matrix, LabelPolicy::record, opt.threads);
  const double classify_seconds = detail::seconds_since(t_classify);
  const CatalogSummary summary = statistics(catalog);

  {
    CheckResult r{"C1", "classification count", false, "", classify_seconds};
    r.passed = summary.class_count == Expected::kClassCount && classify_seconds < Expected::kClassifySeconds;
    r.detail = std::to_string(summary.class_count) + " classes from 49 reduced instances (expected " +
               std::to_string(Expected::kClassCount) + ") in " + detail::fmt_seconds(classify_seconds);
    results.push_back(r);
  }
  {
    CheckResult r{"C2", "orbit bound", summary.max_size == Expected::kMaxSize, "", 0};
    r.detail = "max class size " + std::to_string(summary.max_size) + " (expected " +
               std::to_string(Expected::kMaxSize) + ")";
    results.push_back(r);
  }
  {
    CheckResult r{"C3", "height", summary.max_height == Expected::kMaxHeight, "", 0};
    r.detail = "max height " + std::to_string(summary.max_height) + " (expected " +
               std::to_string(Expected::kMaxHeight) + ")";
    results.push_back(r);
  }
  {
    detail::SubCheck sub;
    sub.require(summary.lattice_count == Expected::kLatticeCount,
                std::to_string(summary.lattice_count) + " lattices (expected " +
                    std::to_string(Expected::kLatticeCount) + ")");
    sub.require(summary.non_lattice_count == Expected::kNonLatticeCount,
                std::to_string(summary.non_lattice_count) + " non-lattices (expected " +
                    std::to_string(Expected::kNonLatticeCount) + ")");
    bool from_rows_7_8 = true, row8_non_lattice = true;
    for (const auto& c : catalog.classes) {
      const auto rows = c.rows();
      if (!c.stats.lattice && (rows.empty() || *rows.begin() < 7)) from_rows_7_8 = false;
      if (rows.count(8) && c.stats.lattice) row8_non_lattice = false;
    }
    sub.require(from_rows_7_8, "every non-lattice class comes only from rows 7-8");
    sub.require(row8_non_lattice, "every row-8 class is a non-lattice");
    results.push_back({"C4", "lattice census", sub.ok, detail::join(sub.notes, "; "), 0});
  }
  {
    std::set<std::string> non_graded_labels;
    bool unlabeled_non_graded = false;
    for (const auto& c : catalog.classes) {
      if (c.stats.graded) continue;
      if (c.labels.empty()) unlabeled_non_graded = true;
      non_graded_labels.insert(c.labels.begin(), c.labels.end());
    }
    detail::SubCheck sub;
    sub.require(summary.non_graded_count == Expected::kNonGradedCount,
                std::to_string(summary.non_graded_count) + " non-graded classes (expected " +
                    std::to_string(Expected::kNonGradedCount) + ")");
    sub.require(!unlabeled_non_graded && non_graded_labels == Expected::kNonGradedLabels,
                "non-graded labels {" +
                    detail::join(std::vector<std::string>(non_graded_labels.begin(), non_graded_labels.end())) + "}");
    results.push_back({"C5", "gradedness census", sub.ok, detail::join(sub.notes, "; "), 0});
  }
  {
    std::set<std::string> names;
    for (const auto& s : reduced_case_list()) names.insert(*s.label);
    CheckResult r{"C6", "label partition", catalog.conflicts.empty(), "", 0};
    r.detail = std::to_string(names.size()) + " printed names vs " + std::to_string(catalog.classes.size()) +
               " computed classes, " + std::to_string(catalog.conflicts.size()) + " contradicting pairs";
    std::vector<std::string> first;
    for (std::size_t i = 0; i < catalog.conflicts.size() && i < 4; ++i) first.push_back(catalog.conflicts[i].describe());
    if (!first.empty()) r.detail += ": " + detail::join(first, "; ") + (catalog.conflicts.size() > 4 ? "; ..." : "");
    results.push_back(r);
  }
  {
    const auto t0 = Clock::now();
    CheckResult r{"C7", "backend equivalence", true, "", 0};
    int max_n = 0;
    try {
      const auto specs = reduced_case_list();
      parallel_for(specs.size(), [&](std::size_t i) { compute_case(specs[i], Backend::both); }, opt.threads);
      for (const auto& s : specs) max_n = std::max(max_n, s.n());
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = e.what();
    }
    r.seconds = detail::seconds_since(t0);
    if (r.passed) {
      r.passed = r.seconds < Expected::kEquivalenceSeconds;
      r.detail = "49 reduced instances (n <= " + std::to_string(max_n) + ") agree in " + detail::fmt_seconds(r.seconds);
    }
    results.push_back(r);
  }
  std::vector<CaseSpec> swept;
  {
    const auto t0 = Clock::now();
    CheckResult r{"C8", "stability sweeps", true, "", 0};
    std::vector<std::string> per_row;
    try {
      for (int row = 1; row <= kTableRows; ++row) {
        const int limit = opt.quick ? std::min(default_sweep_limit(row), smallest_rank(row) + 3) : default_sweep_limit(row);
        const SweepReport rep = stability_sweep(row, limit, catalog, opt.threads);
        for (const auto& p : rep.points) swept.push_back(p.spec);
        per_row.push_back("row " + std::to_string(row) + ": " + std::to_string(rep.points.size()) + " instances (n <= " +
                          std::to_string(limit) + ") -> " + std::to_string(rep.classes_reached().size()) + " classes");
      }
    } catch (const std::exception& e) {
      r.passed = false;
      per_row.push_back(e.what());
    }
    r.seconds = detail::seconds_since(t0);
    r.passed = r.passed && r.seconds < Expected::kSweepSeconds;
    r.detail = detail::join(per_row, "; ") + " in " + detail::fmt_seconds(r.seconds);
    if (opt.quick) r.detail = "[quick] " + r.detail;
    results.push_back(r);
  }
  {
    const auto t0 = Clock::now();
    CheckResult r{"C9", "property suites", true, "", 0};
    std::vector<std::string> notes;
    const std::vector<std::pair<std::string, std::function<std::string()>>> suites = {
        {"subword oracle", [&] { return check_bruhat_vs_subword(rng, opt.quick); }},
        {"additive length", [&] { return check_additive_decomposition(rng, opt.quick); }},
        {"theta duality", [&] { return check_theta_duality(swept, opt.threads); }},
        {"Grassmannian counts", [&] { return check_grassmannian_counts(); }},
        {"contingency counts", [&] { return check_contingency_counts(rng, opt.quick); }},
    };
    for (const auto& [name, run] : suites) {
      try {
        notes.push_back(name + ": " + run());
      } catch (const std::exception& e) {
        r.passed = false;
        notes.push_back(name + ": FAIL: " + e.what());
      }
    }
    r.seconds = detail::seconds_since(t0);
    r.detail = detail::join(notes, "; ");
    results.push_back(r);
  }
  {
    const auto t0 = Clock::now();
    std::vector<CaseSpec> specs = reduced_case_list();
    for (int row = 1; row <= kTableRows; ++row) {
      const int limit = opt.quick ? smallest_rank(row) + 2 : default_sweep_limit(row);
      for (auto& s : row_instances(row, limit)) specs.push_back(std::move(s));
    }
    const std::string first = catalog_to_string(classify(specs, Backend::matrix, LabelPolicy::record, opt.threads));
    const std::string second = catalog_to_string(classify(specs, Backend::matrix, LabelPolicy::record, 1));
    CheckResult r{"C10", "determinism", first == second, "", detail::seconds_since(t0)};
    r.detail = std::string(first == second ? "identical" : "different") + " catalogs (" +
               std::to_string(first.size()) + " bytes) from a threaded and a serial run";
    results.push_back(r);
  }
  return results;
}

/// "[PASS] C1 classification count: ..." per result.
inline std::string format_results(const std::vector<CheckResult>& results) {
  std::string out;
  std::vector<std::string> failed;
  for (const auto& r : results) {
    out += std::string(r.passed ? "[PASS] " : "[FAIL] ") + r.id + " " + r.title + ": " + r.detail + "\n";
    if (!r.passed) failed.push_back(r.id);
  }
  out += "failed: [" + detail::join(failed, ",") + "]\n";
  return out;
}

}  // namespace orbitposet
