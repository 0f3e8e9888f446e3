#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "orbitposet/classifier.hpp"
#include "orbitposet/orbit_matrix.hpp"
#include "orbitposet/permutation.hpp"
#include "orbitposet/poset.hpp"

// JSON, DOT and plain-text renderings. Every writer is deterministic: output
// depends only on the value, never on scheduling or addresses.

namespace orbitposet {

using Json = nlohmann::ordered_json;

/// [3,4,1,2]
inline Json permutation_to_json(const Permutation& w) {
  return Json(std::vector<int>(w.one_line().begin(), w.one_line().end()));
}

inline Permutation permutation_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("permutation JSON must be an array of integers");
  std::vector<int> v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InvalidInput("permutation JSON must be an array of integers");
    v.push_back(x.get<int>());
  }
  return Permutation(std::move(v));
}

/// {"rows": [...], "cols": [...], "entries": [[...], ...]}
inline Json matrix_to_json(const OrbitMatrix& m) {
  Json j;
  j["rows"] = m.row_margins().blocks();
  j["cols"] = m.col_margins().blocks();
  j["entries"] = m.grid();
  return j;
}

inline OrbitMatrix matrix_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("entries")) throw InvalidInput("matrix JSON needs an \"entries\" field");
    auto entries = j.at("entries").get<std::vector<std::vector<int>>>();
    if (!j.contains("rows") || !j.contains("cols")) return OrbitMatrix::from_entries(entries);
    return OrbitMatrix(BlockComposition(j.at("rows").get<std::vector<int>>()),
                       BlockComposition(j.at("cols").get<std::vector<int>>()), std::move(entries));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed matrix JSON: ") + e.what());
  }
}

inline Json label_to_json(const OrbitLabel& label) {
  if (const auto* w = std::get_if<Permutation>(&label)) return permutation_to_json(*w);
  return matrix_to_json(std::get<OrbitMatrix>(label));
}

inline Json covers_to_json(const HasseDiagram& p) {
  Json covers = Json::array();
  for (auto [a, b] : p.covers()) covers.push_back({a, b});
  return covers;
}

/// {"labels": [...], "covers": [[a,b], ...]}
template <class Label, class LabelWriter>
Json poset_to_json(const FinitePoset<Label>& p, LabelWriter&& write_label) {
  Json j;
  j["labels"] = Json::array();
  for (const auto& l : p.labels()) j["labels"].push_back(write_label(l));
  j["covers"] = covers_to_json(p.hasse());
  return j;
}

inline Json poset_to_json(const FinitePoset<OrbitLabel>& p) { return poset_to_json(p, label_to_json); }

/// Directed graph with one node per element and an edge a -> b for every
/// cover a < b; rankdir=BT puts the minimum at the bottom.
template <class Label, class LabelText>
std::string poset_to_dot(const FinitePoset<Label>& p, LabelText&& text) {
  std::string out = "digraph poset {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int i = 0; i < p.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" + text(p.label(i)) + "\"];\n";
  }
  for (auto [a, b] : p.covers()) out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  return out + "}\n";
}

inline std::string poset_to_dot(const FinitePoset<OrbitLabel>& p) {
  return poset_to_dot(p, [](const OrbitLabel& l) { return to_string(l); });
}

inline std::string poset_to_text(const FinitePoset<OrbitLabel>& p) {
  const HasseDiagram& h = p.hasse();
  std::string out = std::to_string(p.size()) + (p.size() == 1 ? " element" : " elements");
  out += ", " + std::to_string(h.covers().size()) + (h.covers().size() == 1 ? " cover" : " covers");
  out += ", height " + std::to_string(height(h));
  if (h.minimum() && h.maximum()) out += is_graded(h) ? ", graded" : ", not graded";
  out += is_lattice(h) ? ", lattice" : ", not a lattice";
  out += "\n";
  for (int i = 0; i < p.size(); ++i) out += "  " + std::to_string(i) + ": " + to_string(p.label(i)) + "\n";
  for (auto [a, b] : h.covers()) out += "  " + std::to_string(a) + " < " + std::to_string(b) + "\n";
  return out;
}

inline Json case_to_json(const CaseSpec& spec) {
  Json j;
  j["row"] = spec.row;
  j["blocks_i"] = spec.blocks_i.blocks();
  j["blocks_j"] = spec.blocks_j.blocks();
  j["n"] = spec.n();
  if (spec.item > 0) j["item"] = spec.item;
  j["label"] = spec.label ? Json(*spec.label) : Json(nullptr);
  return j;
}

/// Array of {certificate, label, size, height, graded, lattice, covers,
/// members}, in catalog (certificate) order. Covers use canonical numbering.
inline Json catalog_to_json(const ClassCatalog& cat) {
  Json out = Json::array();
  for (const auto& c : cat.classes) {
    Json j;
    j["certificate"] = c.certificate;
    j["label"] = c.labels.empty() ? Json(nullptr) : Json(c.label());
    j["size"] = c.stats.size;
    j["height"] = c.stats.height;
    j["graded"] = c.stats.graded;
    j["lattice"] = c.stats.lattice;
    j["covers"] = covers_to_json(c.shape);
    j["members"] = Json::array();
    for (const auto& m : c.members) j["members"].push_back(case_to_json(m));
    out.push_back(std::move(j));
  }
  return out;
}

inline std::string catalog_to_string(const ClassCatalog& cat) { return catalog_to_json(cat).dump(2) + "\n"; }

/// "28 classes, max size 10, max height 6, 20 lattices, 5 non-graded"
inline std::string summary_line(const CatalogSummary& s) {
  return std::to_string(s.class_count) + (s.class_count == 1 ? " class" : " classes") + ", max size " +
         std::to_string(s.max_size) + ", max height " + std::to_string(s.max_height) + ", " +
         std::to_string(s.lattice_count) + (s.lattice_count == 1 ? " lattice" : " lattices") + ", " +
         std::to_string(s.non_graded_count) + " non-graded";
}

}  // namespace orbitposet
