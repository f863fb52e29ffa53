#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hopfhg/hypergraph.hpp"
#include "hopfhg/kernels/coloring_kernels.hpp"
#include "hopfhg/rational.hpp"
#include "hopfhg/set_composition.hpp"

namespace hopfhg {

/// Choice of a head vertex in every edge, indexed like the hypergraph's
/// edges. Heads are vertex positions in the hypergraph's sorted vertex set.
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(std::vector<unsigned> heads) : heads_(std::move(heads)) {}
  /// Builds from head labels; throws InvalidInput unless valid for h.
  static Orientation from_labels(const Hypergraph& h, const std::vector<Label>& heads);

  const std::vector<unsigned>& heads() const { return heads_; }
  unsigned head(std::size_t edge) const { return heads_[edge]; }
  std::size_t size() const { return heads_.size(); }
  /// f(H), the set of heads.
  VertexMask head_mask() const;
  std::vector<Label> head_labels(const Hypergraph& h) const;

  friend auto operator<=>(const Orientation&, const Orientation&) = default;
  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  std::vector<unsigned> heads_;
};

/// Throws InvalidInput unless f has one head per edge and each head lies in
/// its edge.
void validate_orientation(const Hypergraph& h, const Orientation& f);

/// No directed cycle in the edge digraph e -> e' iff f(e) ∈ e' \ {f(e')}.
/// Throws InvalidInput on invalid orientations.
bool is_acyclic(const Hypergraph& h, const Orientation& f);

/// All acyclic orientations, sorted lexicographically by head vector.
std::vector<Orientation> acyclic_orientations(const Hypergraph& h);

/// Product of the edge sizes.
Integer orientation_count(const Hypergraph& h);

/// Map vertices -> {0, ..., n-1}, indexed by vertex position; color c stands
/// for c+1 in [n]. Only the order of colors matters.
class Coloring {
 public:
  Coloring(std::vector<unsigned> colors, unsigned n);
  static Coloring from_decomposition(const SetDecomposition& d);

  const std::vector<unsigned>& colors() const { return colors_; }
  unsigned color(std::size_t vertex) const { return colors_[vertex]; }
  unsigned palette() const { return n_; }
  SetDecomposition to_decomposition(const VertexSet& ground) const;

 private:
  std::vector<unsigned> colors_;
  unsigned n_;
};

/// Every head has the maximal color of its edge.
bool is_compatible(const Hypergraph& h, const Orientation& f, const Coloring& s);
/// Every head is the unique vertex of maximal color in its edge.
bool is_strictly_compatible(const Hypergraph& h, const Orientation& f, const Coloring& s);

/// Number of (f, S) with f acyclic, S a coloring with [n], and the pair
/// (strictly) compatible. Counting runs on the batch coloring kernels.
Integer count_compatible_pairs(const Hypergraph& h, unsigned n, bool strict,
                               kernels::Backend backend = kernels::best_backend());

/// Kernel edge table for h; heads filled from f when given.
kernels::EdgeTable make_edge_table(const Hypergraph& h, const Orientation* f = nullptr);

}  // namespace hopfhg
