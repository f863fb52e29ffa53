#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hopfhg/rational.hpp"
#include "hopfhg/set_composition.hpp"
#include "hopfhg/vertex_set.hpp"

namespace hopfhg {

/// Hypergraph over a labeled vertex set: an indexed multiset of nonempty
/// edges. Edge identity is positional, so repeated edges stay distinct
/// (orientations may point two copies differently). Equality ignores edge
/// order and compares the vertex sets and the edge multisets.
class Hypergraph {
 public:
  /// The empty hypergraph on the empty set (unit of the product).
  Hypergraph() = default;
  /// Throws InvalidInput on an empty edge or an edge leaving `vertices`.
  Hypergraph(VertexSet vertices, std::vector<VertexMask> edges);
  /// Throws InvalidInput on unknown labels, repeated labels inside an edge,
  /// empty edges, or duplicate vertices.
  static Hypergraph from_labels(std::vector<Label> vertices, const std::vector<std::vector<Label>>& edges);

  const VertexSet& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<VertexMask>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  VertexMask edge(std::size_t i) const { return edges_[i]; }
  std::vector<Label> edge_labels(std::size_t i) const { return vertices_.labels_of(edges_[i]); }
  /// Vertices lying in no edge (J_H).
  VertexMask isolated_mask() const;

  /// Same hypergraph with edges sorted by (size, sorted labels).
  Hypergraph canonical() const;
  std::string to_string() const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b);
  /// Strict weak order on canonical forms; usable as a map key.
  friend bool operator<(const Hypergraph& a, const Hypergraph& b);

 private:
  VertexSet vertices_;
  std::vector<VertexMask> edges_;
};

/// Orders edges of one vertex set by (size, lexicographic label sequence).
bool edge_less(VertexMask a, VertexMask b);

/// H|_S: vertex set S, edges of H contained in S. Throws InvalidInput if S is
/// not a subset of vertices(H).
Hypergraph restriction(const Hypergraph& h, const VertexSet& s);
Hypergraph restriction(const Hypergraph& h, VertexMask s);
/// H/_S: vertex set T = V \ S, edges {e ∩ T : e not contained in S}.
Hypergraph contraction(const Hypergraph& h, const VertexSet& s);
Hypergraph contraction(const Hypergraph& h, VertexMask s);
/// Disjoint union. Throws InvalidInput when the vertex sets overlap.
Hypergraph product(const Hypergraph& a, const Hypergraph& b);
Hypergraph product(std::span<const Hypergraph> factors);

/// Delta_{S_1,...,S_k}(H), folded left to right with restriction/contraction.
/// Throws InvalidInput unless d decomposes vertices(H).
std::vector<Hypergraph> iterated_coproduct(const Hypergraph& h, const SetDecomposition& d);

/// The basic character: every edge has at most one vertex.
bool is_discrete(const Hypergraph& h);

/// Relabels through `sigma`, which must be defined on every vertex and
/// injective there (InvalidInput otherwise).
Hypergraph relabel(const Hypergraph& h, const std::map<Label, Label>& sigma);

/// Integer combination of hypergraphs on one vertex set. Terms are stored in
/// canonical form and zero coefficients are dropped.
class FormalSum {
 public:
  FormalSum() = default;
  explicit FormalSum(VertexSet vertices) : vertices_(std::move(vertices)) {}

  const VertexSet& vertices() const { return vertices_; }
  const std::map<Hypergraph, Integer>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const Hypergraph& h) const;

  /// Throws InvalidInput when h lives on a different vertex set.
  void add(const Hypergraph& h, const Integer& coefficient);
  FormalSum& operator+=(const FormalSum& rhs);

  friend bool operator==(const FormalSum&, const FormalSum&) = default;

 private:
  VertexSet vertices_;
  std::map<Hypergraph, Integer> terms_;
};

/// Takeuchi's formula: sum over set compositions (S_1..S_k) of vertices(H)
/// of (-1)^k mu(Delta_{S_1..S_k}(H)). The empty vertex set maps to H.
/// Work grows with the ordered Bell number of |vertices(H)|.
FormalSum antipode_takeuchi(const Hypergraph& h);

}  // namespace hopfhg
