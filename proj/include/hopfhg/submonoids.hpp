#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hopfhg/hypergraph.hpp"
#include "hopfhg/orientation.hpp"
#include "hopfhg/polynomial.hpp"

namespace hopfhg {

// ---------------------------------------------------------------------------
// Simple hypergraphs

/// Drops repeated edges, keeping the first copy of each.
Hypergraph simplify(const Hypergraph& h);

/// Contraction in the simple-hypergraph monoid: traces of the edges not
/// inside S, without repetition. The empty trace is not kept.
Hypergraph simple_contraction(const Hypergraph& h, VertexMask s);

// ---------------------------------------------------------------------------
// Simple graphs

class SimpleGraph {
 public:
  SimpleGraph() = default;
  /// Throws InvalidInput unless every edge is a 2-subset of vertices and no
  /// edge repeats.
  SimpleGraph(VertexSet vertices, std::vector<VertexMask> edges);
  static SimpleGraph from_labels(std::vector<Label> vertices, const std::vector<std::pair<Label, Label>>& edges);

  const VertexSet& vertices() const { return vertices_; }
  const std::vector<VertexMask>& edges() const { return edges_; }
  VertexMask neighbors(unsigned v) const;
  /// Vertex sets of the connected components of the subgraph induced on `within`.
  std::vector<VertexMask> components(VertexMask within) const;
  bool is_connected(VertexMask within) const;
  SimpleGraph induced(VertexMask s) const;
  Hypergraph as_hypergraph() const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  VertexSet vertices_;
  std::vector<VertexMask> edges_;  // sorted
};

SimpleGraph complete_graph(unsigned m);
SimpleGraph path_graph(unsigned m);

/// Chromatic polynomial, as the invariant of the graph viewed as a hypergraph.
Polynomial chromatic_polynomial(const SimpleGraph& g);

// ---------------------------------------------------------------------------
// Simplicial complexes

class SimplicialComplex {
 public:
  /// Throws InvalidInput naming a missing subface when `faces` is not
  /// downward closed. The empty face is accepted and ignored.
  SimplicialComplex(VertexSet vertices, std::vector<VertexMask> faces);
  static SimplicialComplex from_labels(std::vector<Label> vertices, const std::vector<std::vector<Label>>& faces);
  /// Downward closure of the given facets.
  static SimplicialComplex closure(VertexSet vertices, const std::vector<VertexMask>& facets);

  const VertexSet& vertices() const { return vertices_; }
  /// Nonempty faces, sorted.
  const std::vector<VertexMask>& faces() const { return faces_; }
  /// The simple hypergraph of nonempty faces.
  Hypergraph as_hypergraph() const;

 private:
  VertexSet vertices_;
  std::vector<VertexMask> faces_;
};

/// Graph of the 2-element faces.
SimpleGraph skeleton_1(const SimplicialComplex& c);

// ---------------------------------------------------------------------------
// Building sets and rooted forests

class BuildingSet {
 public:
  const VertexSet& vertices() const { return vertices_; }
  /// Connected sets, sorted by edge_less; this is also the edge order of
  /// as_hypergraph().
  const std::vector<VertexMask>& sets() const { return sets_; }
  /// Maximal connected sets.
  std::vector<VertexMask> components() const;
  Hypergraph as_hypergraph() const;

  friend BuildingSet validate_building_set(VertexSet vertices, std::vector<VertexMask> sets);

 private:
  VertexSet vertices_;
  std::vector<VertexMask> sets_;
};

/// Checks the singleton and intersecting-union axioms; throws InvalidInput
/// naming the first violated axiom and its witnesses. Duplicates are merged.
BuildingSet validate_building_set(VertexSet vertices, std::vector<VertexMask> sets);
BuildingSet validate_building_set(std::vector<Label> vertices, const std::vector<std::vector<Label>>& sets);

/// Forest on a vertex set given by parent positions (-1 marks a root).
class RootedForest {
 public:
  RootedForest(VertexSet vertices, std::vector<int> parent);

  const VertexSet& vertices() const { return vertices_; }
  const std::vector<int>& parents() const { return parent_; }
  int parent(unsigned v) const { return parent_[v]; }
  /// Canonical text: trees as root(child,child) with children and trees in
  /// label order, trees joined by " ".
  std::string to_string() const;
  /// The forest as a hypergraph of {child, parent} edges with its
  /// parent-pointing orientation; edges listed by child position.
  std::pair<Hypergraph, Orientation> as_oriented_hypergraph() const;

  friend auto operator<=>(const RootedForest&, const RootedForest&) = default;
  friend bool operator==(const RootedForest&, const RootedForest&) = default;

 private:
  VertexSet vertices_;
  std::vector<int> parent_;
};

/// Compatibility of a coloring with the forest oriented towards the parents:
/// each parent's color is >= (strict: >) each child's color.
bool is_compatible(const RootedForest& forest, const Coloring& s, bool strict);

/// All skeletons of B, sorted and deduplicated.
std::vector<RootedForest> skeletons(const BuildingSet& b);

/// The orientation of B (as a hypergraph) attached to a skeleton: each
/// component's connected sets containing the root point at the root, and the
/// rest recurse into the maximal connected sets avoiding the root.
Orientation skeleton_orientation(const BuildingSet& b, const RootedForest& skeleton);
std::map<RootedForest, Orientation> skeleton_orientation_bijection(const BuildingSet& b);

// ---------------------------------------------------------------------------
// Simple graphs with ripping and sewing

/// Connected induced subsets; a building set.
BuildingSet tubes(const SimpleGraph& w);

/// (w|_S, w/_S): the induced graph on S, and the graph on T = V \ S joining
/// u and v when some u-v path has all its interior vertices in S. Throws
/// InvalidInput unless S and T partition the vertices.
std::pair<SimpleGraph, SimpleGraph> rip_sew_coproduct(const SimpleGraph& w, const VertexSet& s, const VertexSet& t);

/// Partitioning forests, sorted and deduplicated.
std::vector<RootedForest> partitioning_forests(const SimpleGraph& w);

/// Colorings with [n] in which every path whose two ends share a color has a
/// vertex of strictly larger color.
Integer count_path_condition_colorings(const SimpleGraph& w, unsigned n);

/// Basic invariant of w in the rip/sew monoid, through tubes(w).
Polynomial w_invariant(const SimpleGraph& w);

// ---------------------------------------------------------------------------
// Set partitions

class SetPartition {
 public:
  /// Throws InvalidInput on empty, overlapping, or non-covering parts.
  SetPartition(VertexSet vertices, std::vector<VertexMask> parts);
  static SetPartition from_labels(std::vector<Label> vertices, const std::vector<std::vector<Label>>& parts);

  const VertexSet& vertices() const { return vertices_; }
  const std::vector<VertexMask>& parts() const { return parts_; }
  /// Intersect every part with S and forget the empty ones.
  SetPartition restricted(VertexMask s) const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;

 private:
  VertexSet vertices_;
  std::vector<VertexMask> parts_;  // sorted
};

/// prod_i p_i! C(n, p_i) with p_i the part sizes.
Polynomial partition_invariant(const SetPartition& pi);
/// Disjoint union of cliques, one per part.
SimpleGraph cliquey_graph(const SetPartition& pi);

// ---------------------------------------------------------------------------
// Sets of paths

class PathFamily {
 public:
  PathFamily() = default;
  /// Paths in the given order; each is stored with its lexicographically
  /// smaller endpoint first. Throws InvalidInput unless the paths partition
  /// `vertices`.
  PathFamily(VertexSet vertices, std::vector<std::vector<Label>> paths);
  /// Parses "bfcg|aed" (one-character labels) or "x1-x2|y1" (labels joined
  /// by '-'); the vertex set is everything mentioned.
  static PathFamily parse(const std::string& text);

  const VertexSet& vertices() const { return vertices_; }
  const std::vector<std::vector<Label>>& paths() const { return paths_; }
  /// "bc|e"; "∅" for the empty family.
  std::string to_text() const;

  /// Equality up to the order of the paths.
  friend bool operator==(const PathFamily& a, const PathFamily& b);

 private:
  VertexSet vertices_;
  std::vector<std::vector<Label>> paths_;
};

/// (alpha|_S, alpha/_S): induced orders on S, and the T-runs left when every
/// S element becomes a separator. Throws InvalidInput unless S, T partition.
std::pair<PathFamily, PathFamily> path_coproduct(const PathFamily& alpha, const VertexSet& s, const VertexSet& t);
std::string format_coproduct(const std::pair<PathFamily, PathFamily>& parts);

/// Graph whose components are the paths.
SimpleGraph path_to_graph(const PathFamily& alpha);
/// Basic invariant of a set of paths, through its graph in the rip/sew monoid.
Polynomial path_invariant(const PathFamily& alpha);

/// C(2k, k) / (k + 1).
Integer catalan(unsigned k);

}  // namespace hopfhg
