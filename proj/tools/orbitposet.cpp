// orbitposet: compute orbit posets, classify the reduced cases, verify.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orbitposet/orbitposet.hpp"

namespace {

using namespace orbitposet;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

int fail_usage(const std::string& message) {
  std::cerr << "orbitposet: " << message << "\n";
  return kExitUsage;
}

int cmd_poset(const std::string& blocks_i, const std::string& blocks_j, const std::string& backend_name,
              const std::string& format) {
  const BlockComposition rows = BlockComposition::parse(blocks_i);
  const BlockComposition cols = BlockComposition::parse(blocks_j);
  const Backend backend = parse_backend(backend_name);
  const FinitePoset<OrbitLabel> poset = compute_poset(rows, cols, backend);
  if (format == "json") {
    std::cout << poset_to_json(poset).dump(2) << "\n";
  } else if (format == "dot") {
    std::cout << poset_to_dot(poset);
  } else {
    std::cout << poset_to_text(poset);
  }
  return kExitOk;
}

int cmd_classify(const std::vector<int>& row_list, std::optional<int> n_max, const std::string& output,
                 const std::string& backend_name) {
  const std::set<int> rows = row_list.empty() ? std::set<int>{1, 2, 3, 4, 5, 6, 7, 8}
                                              : std::set<int>(row_list.begin(), row_list.end());
  const auto specs = catalog_specs(rows, n_max);
  const ClassCatalog catalog = classify(specs, parse_backend(backend_name), LabelPolicy::record);
  if (!output.empty()) {
    std::ofstream out(output, std::ios::binary);
    out << catalog_to_string(catalog);
    out.close();
    if (!out) {
      std::cerr << "orbitposet: cannot write " << output << "\n";
      return kExitFailure;
    }
  }
  const CatalogSummary summary = statistics(catalog);
  std::cout << summary_line(summary) << "\n";
  std::cout << specs.size() << " instances classified\n";
  for (const auto& c : catalog.classes) {
    std::cout << "  " << (c.labels.empty() ? "-" : c.label()) << ": " << c.stats.size << " elements, height "
              << c.stats.height << ", " << (c.stats.graded ? "graded" : "not graded") << ", "
              << (c.stats.lattice ? "lattice" : "not a lattice") << ", " << c.members.size()
              << (c.members.size() == 1 ? " instance" : " instances") << "\n";
  }
  for (const auto& conflict : catalog.conflicts) std::cout << "conflict: " << conflict.describe() << "\n";
  return kExitOk;
}

int cmd_verify(bool quick) {
  VerifyOptions options;
  options.quick = quick;
  const auto results = run_acceptance(options);
  std::cout << format_results(results);
  for (const auto& r : results) {
    if (!r.passed) return kExitFailure;
  }
  return kExitOk;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

int cmd_matrix_order(const std::string& path_a, const std::string& path_b) {
  const OrbitMatrix a = matrix_from_json(read_json_file(path_a));
  const OrbitMatrix b = matrix_from_json(read_json_file(path_b));
  const bool ab = matrix_leq(a, b);
  const bool ba = matrix_leq(b, a);
  if (ab && ba) {
    std::cout << "A = B\n";
  } else if (ab) {
    std::cout << "A < B\n";
  } else if (ba) {
    std::cout << "A > B\n";
  } else {
    std::cout << "A and B are incomparable\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diagonal orbit closure posets of flag variety pairs"};
  app.require_subcommand(1);

  std::string blocks_i, blocks_j, backend = "matrix", format = "text";
  auto* poset = app.add_subcommand("poset", "Compute the orbit poset of one pair of block compositions");
  poset->add_option("--blocks-i", blocks_i, "Block sizes of P_I, e.g. 3,3")->required();
  poset->add_option("--blocks-j", blocks_j, "Block sizes of P_J, e.g. 2,2,2")->required();
  poset->add_option("--backend", backend, "bruhat, matrix or both")
      ->check(CLI::IsMember({"bruhat", "matrix", "both"}))
      ->capture_default_str();
  poset->add_option("--format", format, "dot, json or text")
      ->check(CLI::IsMember({"dot", "json", "text"}))
      ->capture_default_str();

  std::vector<int> rows;
  std::optional<int> n_max;
  std::string output, classify_backend = "matrix";
  auto* classify_cmd = app.add_subcommand("classify", "Classify the reduced cases and sweep instances");
  classify_cmd->add_option("--rows", rows, "Table rows to include (default: all)")
      ->delimiter(',')
      ->check(CLI::Range(1, kTableRows));
  classify_cmd->add_option("--n-max", n_max, "Largest rank swept (default: 14 for rows 1-4, 12 for rows 5-8)")
      ->check(CLI::Range(1, 30));
  classify_cmd->add_option("--output,-o", output, "Write the catalog JSON here");
  classify_cmd->add_option("--backend", classify_backend, "bruhat, matrix or both")
      ->check(CLI::IsMember({"bruhat", "matrix", "both"}))
      ->capture_default_str();

  bool quick = false;
  auto* verify = app.add_subcommand("verify", "Run the acceptance checks");
  verify->add_flag("--quick", quick, "Smaller sweeps and samples");

  std::string path_a, path_b;
  auto* order = app.add_subcommand("matrix-order", "Compare two orbit matrices given as JSON files");
  order->add_option("A", path_a, "First matrix")->required();
  order->add_option("B", path_b, "Second matrix")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*poset) return cmd_poset(blocks_i, blocks_j, backend, format);
    if (*classify_cmd) return cmd_classify(rows, n_max, output, classify_backend);
    if (*verify) return cmd_verify(quick);
    if (*order) return cmd_matrix_order(path_a, path_b);
  } catch (const CapacityError& e) {
    return fail_usage(e.what());
  } catch (const InvalidInput& e) {
    return fail_usage(e.what());
  } catch (const std::exception& e) {
    std::cerr << "orbitposet: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
