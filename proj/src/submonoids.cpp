#include "hopfhg/submonoids.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "hopfhg/errors.hpp"
#include "hopfhg/invariant.hpp"

namespace hopfhg {

namespace {

std::vector<VertexMask> sorted_unique(std::vector<VertexMask> masks) {
  std::sort(masks.begin(), masks.end(), edge_less);
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  return masks;
}

std::string set_text(const VertexSet& vs, VertexMask m) { return format_labels(vs.labels_of(m)); }

VertexMask partition_masks(const VertexSet& vertices, const VertexSet& s, const VertexSet& t) {
  for (const auto* part : {&s, &t}) {
    for (const auto& l : *part) {
      if (!vertices.contains(l)) throw InvalidInput("'" + l + "' is not a vertex");
    }
  }
  const VertexMask sm = vertices.mask_of(s);
  const VertexMask tm = vertices.mask_of(t);
  if (sm & tm) throw InvalidInput("S and T overlap");
  if ((sm | tm) != vertices.full_mask()) throw InvalidInput("S and T do not cover the vertex set");
  return sm;
}

// Parent arrays (-2 = outside the tree) for all trees on one piece.
using Trees = std::vector<std::vector<int>>;

// Every way of hanging one tree per piece under `root`.
Trees graft(std::size_t n, int root, const std::vector<Trees>& per_piece) {
  Trees out;
  std::vector<int> parent(n, -2);
  parent[root] = -1;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == per_piece.size()) {
      out.push_back(parent);
      return;
    }
    for (const auto& tree : per_piece[i]) {
      std::vector<int> saved = parent;
      for (std::size_t v = 0; v < n; ++v) {
        if (tree[v] == -1) parent[v] = root;
        else if (tree[v] >= 0) parent[v] = tree[v];
      }
      rec(i + 1);
      parent = std::move(saved);
    }
  };
  rec(0);
  return out;
}

// Disjoint union of one tree per component, over all choices.
std::vector<RootedForest> forests_from(const VertexSet& vertices, const std::vector<Trees>& per_component) {
  const std::size_t n = vertices.size();
  std::set<RootedForest> out;
  std::vector<int> parent(n, -1);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == per_component.size()) {
      out.emplace(vertices, parent);
      return;
    }
    for (const auto& tree : per_component[i]) {
      for (std::size_t v = 0; v < n; ++v) {
        if (tree[v] != -2) parent[v] = tree[v];
      }
      rec(i + 1);
    }
  };
  rec(0);
  return {out.begin(), out.end()};
}

std::vector<VertexMask> maximal_among(const std::vector<VertexMask>& candidates) {
  std::vector<VertexMask> out;
  for (VertexMask c : candidates) {
    const bool covered = std::any_of(candidates.begin(), candidates.end(),
                                     [c](VertexMask d) { return d != c && (c & ~d) == 0; });
    if (!covered) out.push_back(c);
  }
  return out;
}

// Maximal connected sets inside `within` that avoid vertex r.
std::vector<VertexMask> maximal_avoiding(const std::vector<VertexMask>& sets, VertexMask within, unsigned r) {
  std::vector<VertexMask> candidates;
  for (VertexMask j : sets) {
    if ((j & ~within) == 0 && !(j >> r & 1U)) candidates.push_back(j);
  }
  return maximal_among(candidates);
}

Trees building_set_trees(const std::vector<VertexMask>& sets, VertexMask component, std::size_t n) {
  Trees out;
  for (VertexMask m = component; m; m &= m - 1) {
    const unsigned r = lowest_index(m);
    std::vector<Trees> per_piece;
    for (VertexMask piece : maximal_avoiding(sets, component, r)) {
      per_piece.push_back(building_set_trees(sets, piece, n));
    }
    auto grown = graft(n, static_cast<int>(r), per_piece);
    out.insert(out.end(), grown.begin(), grown.end());
  }
  return out;
}

Trees partitioning_trees(const SimpleGraph& w, VertexMask component) {
  const std::size_t n = w.vertices().size();
  Trees out;
  for (VertexMask m = component; m; m &= m - 1) {
    const unsigned v = lowest_index(m);
    std::vector<Trees> per_piece;
    for (VertexMask piece : w.components(component & ~(VertexMask{1} << v))) {
      per_piece.push_back(partitioning_trees(w, piece));
    }
    auto grown = graft(n, static_cast<int>(v), per_piece);
    out.insert(out.end(), grown.begin(), grown.end());
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

Hypergraph simplify(const Hypergraph& h) {
  std::vector<VertexMask> kept;
  for (VertexMask e : h.edges()) {
    if (std::find(kept.begin(), kept.end(), e) == kept.end()) kept.push_back(e);
  }
  return Hypergraph(h.vertices(), std::move(kept));
}

Hypergraph simple_contraction(const Hypergraph& h, VertexMask s) {
  const VertexMask t = h.vertices().full_mask() & ~s;
  std::vector<VertexMask> kept;
  for (VertexMask e : h.edges()) {
    if (!(e & t)) continue;
    const VertexMask trace = compress_mask(e & t, t);
    if (std::find(kept.begin(), kept.end(), trace) == kept.end()) kept.push_back(trace);
  }
  return Hypergraph(h.vertices().subset(t), std::move(kept));
}

// ---------------------------------------------------------------------------

SimpleGraph::SimpleGraph(VertexSet vertices, std::vector<VertexMask> edges) : vertices_(std::move(vertices)) {
  const VertexMask full = vertices_.full_mask();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (popcount(edges[i]) != 2 || (edges[i] & ~full)) {
      throw InvalidInput("edges[" + std::to_string(i) + "]: a graph edge must join two distinct vertices");
    }
  }
  edges_ = sorted_unique(edges);
  if (edges_.size() != edges.size()) throw InvalidInput("repeated edge in a simple graph");
}

SimpleGraph SimpleGraph::from_labels(std::vector<Label> vertices, const std::vector<std::pair<Label, Label>>& edges) {
  VertexSet vs(std::move(vertices));
  std::vector<VertexMask> masks;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& [a, b] = edges[i];
    for (const auto& l : {a, b}) {
      if (!vs.contains(l)) throw InvalidInput("edges[" + std::to_string(i) + "]: unknown vertex '" + l + "'");
    }
    masks.push_back((VertexMask{1} << vs.index_of(a)) | (VertexMask{1} << vs.index_of(b)));
  }
  return SimpleGraph(std::move(vs), std::move(masks));
}

VertexMask SimpleGraph::neighbors(unsigned v) const {
  const VertexMask bit = VertexMask{1} << v;
  VertexMask out = 0;
  for (VertexMask e : edges_) {
    if (e & bit) out |= e;
  }
  return out & ~bit;
}

std::vector<VertexMask> SimpleGraph::components(VertexMask within) const {
  std::vector<VertexMask> out;
  VertexMask left = within;
  while (left) {
    VertexMask comp = left & -left;
    VertexMask frontier = comp;
    while (frontier) {
      VertexMask next = 0;
      for (VertexMask m = frontier; m; m &= m - 1) next |= neighbors(lowest_index(m));
      frontier = next & within & ~comp;
      comp |= frontier;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

bool SimpleGraph::is_connected(VertexMask within) const { return within && components(within).size() == 1; }

SimpleGraph SimpleGraph::induced(VertexMask s) const {
  std::vector<VertexMask> kept;
  for (VertexMask e : edges_) {
    if ((e & ~s) == 0) kept.push_back(compress_mask(e, s));
  }
  return SimpleGraph(vertices_.subset(s), std::move(kept));
}

Hypergraph SimpleGraph::as_hypergraph() const { return Hypergraph(vertices_, edges_); }

SimpleGraph complete_graph(unsigned m) {
  std::vector<Label> vs;
  for (unsigned i = 1; i <= m; ++i) vs.push_back(std::to_string(i));
  std::vector<VertexMask> edges;
  VertexSet set(vs);
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned j = i + 1; j < m; ++j) edges.push_back((VertexMask{1} << i) | (VertexMask{1} << j));
  }
  return SimpleGraph(std::move(set), std::move(edges));
}

SimpleGraph path_graph(unsigned m) {
  std::vector<Label> vs;
  std::vector<std::pair<Label, Label>> edges;
  for (unsigned i = 1; i <= m; ++i) {
    vs.push_back(std::to_string(i));
    if (i > 1) edges.emplace_back(std::to_string(i - 1), std::to_string(i));
  }
  return SimpleGraph::from_labels(std::move(vs), edges);
}

Polynomial chromatic_polynomial(const SimpleGraph& g) { return chi_polynomial(g.as_hypergraph()); }

// ---------------------------------------------------------------------------

SimplicialComplex::SimplicialComplex(VertexSet vertices, std::vector<VertexMask> faces)
    : vertices_(std::move(vertices)) {
  const VertexMask full = vertices_.full_mask();
  std::erase(faces, VertexMask{0});
  for (VertexMask f : faces) {
    if (f & ~full) throw InvalidInput("face leaves the vertex set");
  }
  faces_ = sorted_unique(std::move(faces));
  for (VertexMask f : faces_) {
    if (popcount(f) < 2) continue;
    for (VertexMask m = f; m; m &= m - 1) {
      const VertexMask sub = f & ~(m & -m);
      if (!std::binary_search(faces_.begin(), faces_.end(), sub, edge_less)) {
        throw InvalidInput("faces are not downward closed: " + set_text(vertices_, f) + " is a face but " +
                           set_text(vertices_, sub) + " is not");
      }
    }
  }
}

SimplicialComplex SimplicialComplex::from_labels(std::vector<Label> vertices,
                                                 const std::vector<std::vector<Label>>& faces) {
  VertexSet vs(std::move(vertices));
  std::vector<VertexMask> masks;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    for (const auto& l : faces[i]) {
      if (!vs.contains(l)) throw InvalidInput("faces[" + std::to_string(i) + "]: unknown vertex '" + l + "'");
    }
    masks.push_back(vs.mask_of(faces[i]));
  }
  return SimplicialComplex(std::move(vs), std::move(masks));
}

SimplicialComplex SimplicialComplex::closure(VertexSet vertices, const std::vector<VertexMask>& facets) {
  std::vector<VertexMask> faces;
  for (VertexMask f : facets) {
    for (VertexMask sub = f; sub; sub = (sub - 1) & f) faces.push_back(sub);
  }
  return SimplicialComplex(std::move(vertices), std::move(faces));
}

Hypergraph SimplicialComplex::as_hypergraph() const { return Hypergraph(vertices_, faces_); }

SimpleGraph skeleton_1(const SimplicialComplex& c) {
  std::vector<VertexMask> edges;
  for (VertexMask f : c.faces()) {
    if (popcount(f) == 2) edges.push_back(f);
  }
  return SimpleGraph(c.vertices(), std::move(edges));
}

// ---------------------------------------------------------------------------

BuildingSet validate_building_set(VertexSet vertices, std::vector<VertexMask> sets) {
  const VertexMask full = vertices.full_mask();
  for (VertexMask s : sets) {
    if (s == 0) throw InvalidInput("connected sets must be nonempty");
    if (s & ~full) throw InvalidInput("connected set leaves the vertex set");
  }
  sets = sorted_unique(std::move(sets));
  auto present = [&](VertexMask m) { return std::binary_search(sets.begin(), sets.end(), m, edge_less); };
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (!present(VertexMask{1} << v)) throw InvalidInput("singleton axiom: {" + vertices[v] + "} is missing");
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if ((sets[i] & sets[j]) && !present(sets[i] | sets[j])) {
        throw InvalidInput("union axiom: " + set_text(vertices, sets[i]) + " and " + set_text(vertices, sets[j]) +
                           " intersect but " + set_text(vertices, sets[i] | sets[j]) + " is absent");
      }
    }
  }
  BuildingSet out;
  out.vertices_ = std::move(vertices);
  out.sets_ = std::move(sets);
  return out;
}

BuildingSet validate_building_set(std::vector<Label> vertices, const std::vector<std::vector<Label>>& sets) {
  VertexSet vs(std::move(vertices));
  std::vector<VertexMask> masks;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (const auto& l : sets[i]) {
      if (!vs.contains(l)) throw InvalidInput("sets[" + std::to_string(i) + "]: unknown vertex '" + l + "'");
    }
    masks.push_back(vs.mask_of(sets[i]));
  }
  return validate_building_set(std::move(vs), std::move(masks));
}

std::vector<VertexMask> BuildingSet::components() const { return maximal_among(sets_); }

Hypergraph BuildingSet::as_hypergraph() const { return Hypergraph(vertices_, sets_); }

RootedForest::RootedForest(VertexSet vertices, std::vector<int> parent)
    : vertices_(std::move(vertices)), parent_(std::move(parent)) {
  const int n = static_cast<int>(vertices_.size());
  if (parent_.size() != vertices_.size()) throw InvalidInput("forest parent map does not cover the vertices");
  for (int v = 0; v < n; ++v) {
    int cur = v;
    for (int steps = 0; cur != -1; ++steps) {
      if (cur < -1 || cur >= n || steps > n) throw InvalidInput("forest parent map is not a forest");
      cur = parent_[cur];
    }
  }
}

std::string RootedForest::to_string() const {
  std::function<std::string(int)> render = [&](int v) {
    std::string out = vertices_[v];
    std::string kids;
    for (int c = 0; c < static_cast<int>(parent_.size()); ++c) {
      if (parent_[c] != v) continue;
      kids += kids.empty() ? "" : ",";
      kids += render(c);
    }
    return kids.empty() ? out : out + "(" + kids + ")";
  };
  std::string out;
  for (int v = 0; v < static_cast<int>(parent_.size()); ++v) {
    if (parent_[v] != -1) continue;
    if (!out.empty()) out += " ";
    out += render(v);
  }
  return out;
}

std::pair<Hypergraph, Orientation> RootedForest::as_oriented_hypergraph() const {
  std::vector<VertexMask> edges;
  std::vector<unsigned> heads;
  for (std::size_t v = 0; v < parent_.size(); ++v) {
    if (parent_[v] < 0) continue;
    edges.push_back((VertexMask{1} << v) | (VertexMask{1} << parent_[v]));
    heads.push_back(static_cast<unsigned>(parent_[v]));
  }
  return {Hypergraph(vertices_, std::move(edges)), Orientation(std::move(heads))};
}

bool is_compatible(const RootedForest& forest, const Coloring& s, bool strict) {
  for (std::size_t v = 0; v < forest.parents().size(); ++v) {
    const int p = forest.parent(static_cast<unsigned>(v));
    if (p < 0) continue;
    const unsigned up = s.color(static_cast<unsigned>(p));
    const unsigned down = s.color(v);
    if (strict ? up <= down : up < down) return false;
  }
  return true;
}

std::vector<RootedForest> skeletons(const BuildingSet& b) {
  std::vector<Trees> per_component;
  for (VertexMask k : b.components()) per_component.push_back(building_set_trees(b.sets(), k, b.vertices().size()));
  return forests_from(b.vertices(), per_component);
}

Orientation skeleton_orientation(const BuildingSet& b, const RootedForest& skeleton) {
  if (skeleton.vertices() != b.vertices()) throw InvalidInput("skeleton is not over the building set's vertices");
  const auto& sets = b.sets();
  std::vector<unsigned> heads(sets.size(), 0);
  std::function<void(VertexMask)> orient = [&](VertexMask k) {
    // The root of the subtree spanning k has its parent outside k.
    int root = -1;
    for (VertexMask m = k; m; m &= m - 1) {
      const int v = static_cast<int>(lowest_index(m));
      const int p = skeleton.parent(static_cast<unsigned>(v));
      if (p < 0 || !(k >> p & 1U)) {
        if (root >= 0) throw InvalidInput("forest is not a skeleton of the building set");
        root = v;
      }
    }
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if ((sets[i] & ~k) == 0 && (sets[i] >> root & 1U)) heads[i] = static_cast<unsigned>(root);
    }
    for (VertexMask piece : maximal_avoiding(sets, k, static_cast<unsigned>(root))) orient(piece);
  };
  for (VertexMask k : b.components()) orient(k);
  return Orientation(std::move(heads));
}

std::map<RootedForest, Orientation> skeleton_orientation_bijection(const BuildingSet& b) {
  std::map<RootedForest, Orientation> out;
  for (const auto& s : skeletons(b)) out.emplace(s, skeleton_orientation(b, s));
  return out;
}

// ---------------------------------------------------------------------------

BuildingSet tubes(const SimpleGraph& w) {
  std::vector<VertexMask> sets;
  const VertexMask full = w.vertices().full_mask();
  for (VertexMask sub = full; sub; sub = (sub - 1) & full) {
    if (w.is_connected(sub)) sets.push_back(sub);
  }
  return validate_building_set(w.vertices(), std::move(sets));
}

std::pair<SimpleGraph, SimpleGraph> rip_sew_coproduct(const SimpleGraph& w, const VertexSet& s, const VertexSet& t) {
  const VertexMask sm = partition_masks(w.vertices(), s, t);
  const VertexMask tm = w.vertices().full_mask() & ~sm;
  std::vector<VertexMask> sewn;
  for (VertexMask m = tm; m; m &= m - 1) {
    const unsigned u = lowest_index(m);
    // Breadth-first through S only; every T vertex touched is joined to u.
    VertexMask inside = 0;
    VertexMask frontier = w.neighbors(u) & sm;
    VertexMask touched = w.neighbors(u) & tm;
    while (frontier) {
      inside |= frontier;
      VertexMask next = 0;
      for (VertexMask f = frontier; f; f &= f - 1) next |= w.neighbors(lowest_index(f));
      touched |= next & tm;
      frontier = next & sm & ~inside;
    }
    touched &= ~(VertexMask{1} << u);
    for (VertexMask v = touched; v; v &= v - 1) {
      if (lowest_index(v) > u) sewn.push_back(compress_mask((VertexMask{1} << u) | (v & -v), tm));
    }
  }
  return {w.induced(sm), SimpleGraph(w.vertices().subset(tm), std::move(sewn))};
}

std::vector<RootedForest> partitioning_forests(const SimpleGraph& w) {
  std::vector<Trees> per_component;
  for (VertexMask c : w.components(w.vertices().full_mask())) per_component.push_back(partitioning_trees(w, c));
  return forests_from(w.vertices(), per_component);
}

Integer count_path_condition_colorings(const SimpleGraph& w, unsigned n) {
  const std::size_t m = w.vertices().size();
  if (m == 0) return 1;
  if (n == 0) return 0;
  std::vector<unsigned> color(m, 0);
  Integer total = 0;
  while (true) {
    bool ok = true;
    for (unsigned c = 0; ok && c < n; ++c) {
      VertexMask low = 0;
      VertexMask same = 0;
      for (std::size_t v = 0; v < m; ++v) {
        if (color[v] <= c) low |= VertexMask{1} << v;
        if (color[v] == c) same |= VertexMask{1} << v;
      }
      // Two ends of color c joined through colors <= c violate the condition.
      for (VertexMask comp : w.components(low)) {
        if (popcount(comp & same) >= 2) {
          ok = false;
          break;
        }
      }
    }
    if (ok) ++total;
    std::size_t i = 0;
    while (i < m && ++color[i] == n) color[i++] = 0;
    if (i == m) break;
  }
  return total;
}

Polynomial w_invariant(const SimpleGraph& w) { return chi_polynomial(tubes(w).as_hypergraph()); }

// ---------------------------------------------------------------------------

SetPartition::SetPartition(VertexSet vertices, std::vector<VertexMask> parts) : vertices_(std::move(vertices)) {
  VertexMask seen = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == 0) throw InvalidInput("parts[" + std::to_string(i) + "]: empty part");
    if (parts[i] & seen) throw InvalidInput("parts[" + std::to_string(i) + "]: parts overlap");
    seen |= parts[i];
  }
  if (seen != vertices_.full_mask()) {
    throw InvalidInput("parts do not cover " + set_text(vertices_, vertices_.full_mask() & ~seen));
  }
  parts_ = sorted_unique(std::move(parts));
}

SetPartition SetPartition::from_labels(std::vector<Label> vertices, const std::vector<std::vector<Label>>& parts) {
  VertexSet vs(std::move(vertices));
  std::vector<VertexMask> masks;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const auto& l : parts[i]) {
      if (!vs.contains(l)) throw InvalidInput("parts[" + std::to_string(i) + "]: unknown vertex '" + l + "'");
    }
    const VertexMask m = vs.mask_of(parts[i]);
    if (popcount(m) != parts[i].size()) throw InvalidInput("parts[" + std::to_string(i) + "]: repeated vertex");
    masks.push_back(m);
  }
  return SetPartition(std::move(vs), std::move(masks));
}

SetPartition SetPartition::restricted(VertexMask s) const {
  std::vector<VertexMask> out;
  for (VertexMask p : parts_) {
    if (p & s) out.push_back(compress_mask(p & s, s));
  }
  return SetPartition(vertices_.subset(s), std::move(out));
}

Polynomial partition_invariant(const SetPartition& pi) {
  Polynomial out = Polynomial::constant(1);
  for (VertexMask p : pi.parts()) out *= Polynomial::falling_factorial(popcount(p));
  return out;
}

SimpleGraph cliquey_graph(const SetPartition& pi) {
  std::vector<VertexMask> edges;
  for (VertexMask p : pi.parts()) {
    for (VertexMask a = p; a; a &= a - 1) {
      for (VertexMask b = a & (a - 1); b; b &= b - 1) edges.push_back((a & -a) | (b & -b));
    }
  }
  return SimpleGraph(pi.vertices(), std::move(edges));
}

// ---------------------------------------------------------------------------

PathFamily::PathFamily(VertexSet vertices, std::vector<std::vector<Label>> paths) : vertices_(std::move(vertices)) {
  VertexMask seen = 0;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    auto& p = paths[i];
    if (p.empty()) throw InvalidInput("paths[" + std::to_string(i) + "]: empty path");
    for (const auto& l : p) {
      if (!vertices_.contains(l)) throw InvalidInput("paths[" + std::to_string(i) + "]: unknown vertex '" + l + "'");
      const VertexMask bit = VertexMask{1} << vertices_.index_of(l);
      if (seen & bit) throw InvalidInput("paths[" + std::to_string(i) + "]: vertex '" + l + "' used twice");
      seen |= bit;
    }
    if (p.back() < p.front()) std::reverse(p.begin(), p.end());
  }
  if (seen != vertices_.full_mask()) {
    throw InvalidInput("paths do not cover " + set_text(vertices_, vertices_.full_mask() & ~seen));
  }
  paths_ = std::move(paths);
}

PathFamily PathFamily::parse(const std::string& text) {
  if (text.empty() || text == "∅") return PathFamily(VertexSet{}, {});
  std::vector<std::vector<Label>> paths;
  std::vector<Label> all;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t bar = std::min(text.find('|', start), text.size());
    const std::string chunk = text.substr(start, bar - start);
    std::vector<Label> path;
    if (chunk.find('-') != std::string::npos) {
      std::size_t s = 0;
      while (s <= chunk.size()) {
        const std::size_t dash = std::min(chunk.find('-', s), chunk.size());
        path.push_back(chunk.substr(s, dash - s));
        s = dash + 1;
      }
    } else {
      for (char c : chunk) path.emplace_back(1, c);
    }
    for (const auto& l : path) {
      if (l.empty()) throw InvalidInput("empty label in path text '" + text + "'");
    }
    all.insert(all.end(), path.begin(), path.end());
    paths.push_back(std::move(path));
    start = bar + 1;
  }
  return PathFamily(VertexSet(std::move(all)), std::move(paths));
}

std::string PathFamily::to_text() const {
  if (paths_.empty()) return "∅";
  const bool short_labels = std::all_of(vertices_.begin(), vertices_.end(), [](const Label& l) { return l.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < paths_.size(); ++i) {
    if (i) out += "|";
    for (std::size_t j = 0; j < paths_[i].size(); ++j) {
      if (j && !short_labels) out += "-";
      out += paths_[i][j];
    }
  }
  return out;
}

bool operator==(const PathFamily& a, const PathFamily& b) {
  if (a.vertices_ != b.vertices_) return false;
  auto pa = a.paths_;
  auto pb = b.paths_;
  std::sort(pa.begin(), pa.end());
  std::sort(pb.begin(), pb.end());
  return pa == pb;
}

std::pair<PathFamily, PathFamily> path_coproduct(const PathFamily& alpha, const VertexSet& s, const VertexSet& t) {
  partition_masks(alpha.vertices(), s, t);
  std::vector<std::vector<Label>> kept;
  std::vector<std::vector<Label>> runs;
  for (const auto& path : alpha.paths()) {
    std::vector<Label> inside;
    std::vector<Label> run;
    for (const auto& l : path) {
      if (s.contains(l)) {
        inside.push_back(l);
        if (!run.empty()) runs.push_back(std::exchange(run, {}));
      } else {
        run.push_back(l);
      }
    }
    if (!run.empty()) runs.push_back(std::move(run));
    if (!inside.empty()) kept.push_back(std::move(inside));
  }
  return {PathFamily(s, std::move(kept)), PathFamily(t, std::move(runs))};
}

std::string format_coproduct(const std::pair<PathFamily, PathFamily>& parts) {
  return parts.first.to_text() + " ⊗ " + parts.second.to_text();
}

SimpleGraph path_to_graph(const PathFamily& alpha) {
  std::vector<VertexMask> edges;
  const auto& vs = alpha.vertices();
  for (const auto& path : alpha.paths()) {
    for (std::size_t i = 1; i < path.size(); ++i) {
      edges.push_back((VertexMask{1} << vs.index_of(path[i - 1])) | (VertexMask{1} << vs.index_of(path[i])));
    }
  }
  return SimpleGraph(vs, std::move(edges));
}

Polynomial path_invariant(const PathFamily& alpha) { return w_invariant(path_to_graph(alpha)); }

Integer catalan(unsigned k) { return binomial(2 * k, k) / (k + 1); }

}  // namespace hopfhg
