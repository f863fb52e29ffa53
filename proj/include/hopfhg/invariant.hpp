#pragma once

#include <vector>

#include "hopfhg/hypergraph.hpp"
#include "hopfhg/kernels/coloring_kernels.hpp"
#include "hopfhg/orientation.hpp"
#include "hopfhg/polynomial.hpp"
#include "hopfhg/set_composition.hpp"

namespace hopfhg {

/// Order constraints an acyclic orientation puts on its heads: u must get a
/// smaller (or, weakly, no larger) color than v whenever u is a non-head
/// vertex of an edge headed by v and u is itself a head.
struct OrientationConstraintSystem {
  VertexSet heads;
  /// preds[i]: heads (as positions in `heads`) constrained below heads[i].
  std::vector<VertexMask> preds;

  static OrientationConstraintSystem from_orientation(const Hypergraph& h, const Orientation& f);
  /// Throws InvalidInput on labels outside `heads`.
  static OrientationConstraintSystem from_arcs(VertexSet heads, std::span<const Arc> arcs);
  std::vector<Arc> arcs() const;
};

/// Compositions P of the heads with P(u) < P(v) (strict) or P(u) <= P(v)
/// (weak) for every constraint (u, v). Throws InvalidInput on cyclic systems.
std::vector<SetComposition> constrained_compositions(const OrientationConstraintSystem& c, bool strict);

/// Sum over all length-n decompositions D of vertices(H) of the product of
/// is_discrete over Delta_D(H). Straight from the definition.
Integer chi_eval_definition(const Hypergraph& h, unsigned n);

/// Colorings with [n] in which every edge has a unique maximal vertex.
Integer chi_eval_colorings(const Hypergraph& h, unsigned n,
                           kernels::Backend backend = kernels::best_backend());

/// The basic invariant as an exact polynomial, via the closed formula over
/// acyclic orientations, constrained compositions of their heads, and
/// F-polynomials (times n^{#isolated vertices}).
Polynomial chi_polynomial(const Hypergraph& h);

/// (-1)^{|I|} chi(H)(-n) as a polynomial in n.
Polynomial chi_negative_polynomial(const Hypergraph& h);
/// (-1)^{|I|} chi(H)(-n); counts compatible (orientation, coloring) pairs.
Integer chi_eval_negative(const Hypergraph& h, unsigned n);

/// chi extended linearly over a formal sum.
Polynomial chi_on_formal_sum(const FormalSum& f);
Rational chi_on_formal_sum(const FormalSum& f, long n);

}  // namespace hopfhg
