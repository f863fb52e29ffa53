#include "hopfhg/json_io.hpp"

#include <algorithm>

#include "hopfhg/errors.hpp"

namespace hopfhg {

namespace {

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

Label label_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_unsigned()) return std::to_string(j.get<unsigned long long>());
  if (j.is_number_integer() && j.get<long long>() >= 0) return std::to_string(j.get<long long>());
  throw InvalidInput(path + ": a vertex label must be a string or a nonnegative integer");
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) throw InvalidInput("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InvalidInput(std::string("missing \"") + key + "\"");
  return *it;
}

std::vector<Label> labels_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) throw InvalidInput(path + ": expected an array");
  std::vector<Label> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(label_from_json(j[i], at(path, i)));
  return out;
}

std::vector<std::vector<Label>> label_lists(const Json& j, const std::string& path) {
  if (!j.is_array()) throw InvalidInput(path + ": expected an array");
  std::vector<std::vector<Label>> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(labels_from_json(j[i], at(path, i)));
  return out;
}

VertexSet vertices_from_json(const Json& j) {
  auto labels = labels_from_json(member(j, "vertices"), "vertices");
  std::vector<Label> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) throw InvalidInput("vertices: duplicate vertex '" + *dup + "'");
  return VertexSet(std::move(labels));
}

// Label lists to masks, checking membership and repeats.
std::vector<VertexMask> masks_from_json(const VertexSet& vs, const Json& j, const std::string& path) {
  std::vector<VertexMask> out;
  const auto lists = label_lists(j, path);
  for (std::size_t i = 0; i < lists.size(); ++i) {
    VertexMask m = 0;
    for (std::size_t k = 0; k < lists[i].size(); ++k) {
      const Label& l = lists[i][k];
      if (!vs.contains(l)) throw InvalidInput(at(at(path, i), k) + ": unknown vertex '" + l + "'");
      const VertexMask bit = VertexMask{1} << vs.index_of(l);
      if (m & bit) throw InvalidInput(at(at(path, i), k) + ": vertex '" + l + "' repeated");
      m |= bit;
    }
    out.push_back(m);
  }
  return out;
}

Json labels_json(const VertexSet& vs, VertexMask m) { return Json(vs.labels_of(m)); }

Json mask_list_json(const VertexSet& vs, std::vector<VertexMask> masks) {
  std::stable_sort(masks.begin(), masks.end(), edge_less);
  Json out = Json::array();
  for (VertexMask m : masks) out.push_back(labels_json(vs, m));
  return out;
}

Json vertices_json(const VertexSet& vs) { return Json(std::vector<Label>(vs.begin(), vs.end())); }

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

Hypergraph hypergraph_from_json(const Json& j) {
  VertexSet vs = vertices_from_json(j);
  auto edges = masks_from_json(vs, member(j, "edges"), "edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i] == 0) throw InvalidInput(at("edges", i) + ": empty edge");
  }
  return Hypergraph(std::move(vs), std::move(edges));
}

Json to_json(const Hypergraph& h) {
  return Json{{"vertices", vertices_json(h.vertices())}, {"edges", mask_list_json(h.vertices(), h.edges())}};
}

SimpleGraph graph_from_json(const Json& j) {
  VertexSet vs = vertices_from_json(j);
  const Json& edges = member(j, "edges");
  auto masks = masks_from_json(vs, edges, "edges");
  for (std::size_t i = 0; i < masks.size(); ++i) {
    if (edges[i].size() != 2) throw InvalidInput(at("edges", i) + ": a graph edge has exactly two vertices");
  }
  return SimpleGraph(std::move(vs), std::move(masks));
}

Json to_json(const SimpleGraph& g) {
  return Json{{"vertices", vertices_json(g.vertices())}, {"edges", mask_list_json(g.vertices(), g.edges())}};
}

SimplicialComplex complex_from_json(const Json& j) {
  VertexSet vs = vertices_from_json(j);
  auto faces = masks_from_json(vs, member(j, "faces"), "faces");
  return SimplicialComplex(std::move(vs), std::move(faces));
}

Json to_json(const SimplicialComplex& c) {
  return Json{{"vertices", vertices_json(c.vertices())}, {"faces", mask_list_json(c.vertices(), c.faces())}};
}

BuildingSet building_set_from_json(const Json& j) {
  VertexSet vs = vertices_from_json(j);
  auto sets = masks_from_json(vs, member(j, "sets"), "sets");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i] == 0) throw InvalidInput(at("sets", i) + ": empty set");
  }
  return validate_building_set(std::move(vs), std::move(sets));
}

Json to_json(const BuildingSet& b) {
  return Json{{"vertices", vertices_json(b.vertices())}, {"sets", mask_list_json(b.vertices(), b.sets())}};
}

SetPartition partition_from_json(const Json& j) {
  VertexSet vs = vertices_from_json(j);
  auto parts = masks_from_json(vs, member(j, "parts"), "parts");
  return SetPartition(std::move(vs), std::move(parts));
}

Json to_json(const SetPartition& pi) {
  return Json{{"vertices", vertices_json(pi.vertices())}, {"parts", mask_list_json(pi.vertices(), pi.parts())}};
}

PathFamily path_family_from_json(const Json& j) {
  auto paths = label_lists(member(j, "paths"), "paths");
  if (j.contains("vertices")) return PathFamily(vertices_from_json(j), std::move(paths));
  std::vector<Label> all;
  for (const auto& p : paths) all.insert(all.end(), p.begin(), p.end());
  std::sort(all.begin(), all.end());
  auto dup = std::adjacent_find(all.begin(), all.end());
  if (dup != all.end()) throw InvalidInput("paths: vertex '" + *dup + "' used twice");
  return PathFamily(VertexSet(std::move(all)), std::move(paths));
}

Json to_json(const PathFamily& alpha) {
  auto paths = alpha.paths();
  std::sort(paths.begin(), paths.end());
  return Json{{"vertices", vertices_json(alpha.vertices())}, {"paths", paths}};
}

Json to_json(const Polynomial& p) { return Json(p.coefficient_strings()); }

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("polynomial: expected an array of coefficients");
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i].is_string()) coeffs.push_back(parse_rational(j[i].get<std::string>()));
    else if (j[i].is_number_integer()) coeffs.push_back(Rational(j[i].get<long>()));
    else throw InvalidInput(at("polynomial", i) + ": expected a fraction string");
  }
  return Polynomial(std::move(coeffs));
}

Json to_json(const RootedForest& f) {
  Json parent = Json::object();
  for (std::size_t v = 0; v < f.parents().size(); ++v) {
    const int p = f.parents()[v];
    parent[f.vertices()[v]] = p < 0 ? Json(nullptr) : Json(f.vertices()[p]);
  }
  return Json{{"text", f.to_string()}, {"parent", parent}};
}

Json orientation_to_json(const Hypergraph& h, const Orientation& f) { return Json(f.head_labels(h)); }

Json to_json(const FormalSum& f) {
  Json out = Json::array();
  for (const auto& [h, c] : f.terms()) out.push_back(Json{{"coefficient", to_string(c)}, {"hypergraph", to_json(h)}});
  return out;
}

std::string object_kind(const Json& j) {
  if (!j.is_object()) throw InvalidInput("expected a JSON object");
  std::string kind;
  for (const char* key : {"edges", "faces", "sets", "parts", "paths"}) {
    if (!j.contains(key)) continue;
    if (!kind.empty()) throw InvalidInput("object has both \"" + kind + "\" and \"" + key + "\"");
    kind = key;
  }
  if (kind.empty()) throw InvalidInput("object has none of \"edges\", \"faces\", \"sets\", \"parts\", \"paths\"");
  return kind;
}

}  // namespace hopfhg
