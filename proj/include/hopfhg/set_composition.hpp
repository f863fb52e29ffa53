#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hopfhg/rational.hpp"
#include "hopfhg/vertex_set.hpp"

namespace hopfhg {

/// Ordered sequence of pairwise-disjoint blocks covering a ground set.
/// Empty blocks are allowed; block indices are 0-based in the API.
class SetDecomposition {
 public:
  SetDecomposition() = default;
  /// Throws InvalidInput if blocks overlap, leave the ground, or miss a vertex.
  SetDecomposition(VertexSet ground, std::vector<VertexMask> blocks);
  static SetDecomposition from_labels(VertexSet ground, const std::vector<std::vector<Label>>& blocks);
  /// The decomposition (f^{-1}(0), ..., f^{-1}(n-1)) of a coloring f.
  static SetDecomposition from_coloring(VertexSet ground, std::span<const unsigned> colors, unsigned n);

  const VertexSet& ground() const { return ground_; }
  const std::vector<VertexMask>& blocks() const { return blocks_; }
  std::size_t length() const { return blocks_.size(); }
  std::vector<Label> block_labels(std::size_t i) const { return ground_.labels_of(blocks_[i]); }
  /// Index of the block holding `label`.
  std::size_t block_of(const Label& label) const;
  bool has_empty_block() const;
  /// Drops the empty blocks (cano).
  SetDecomposition canonical() const;
  /// (S_1 ∩ J, ..., S_l ∩ J) as a decomposition of J.
  SetDecomposition restricted(VertexMask subset) const;

  std::string to_string() const;

  friend bool operator==(const SetDecomposition&, const SetDecomposition&) = default;
  friend auto operator<=>(const SetDecomposition&, const SetDecomposition&) = default;

 private:
  VertexSet ground_;
  std::vector<VertexMask> blocks_;
};

/// SetDecomposition without empty blocks.
class SetComposition : public SetDecomposition {
 public:
  SetComposition() = default;
  SetComposition(VertexSet ground, std::vector<VertexMask> blocks);
  static SetComposition from_labels(VertexSet ground, const std::vector<std::vector<Label>>& blocks);
};

using MaskSpan = std::span<const VertexMask>;
using BlockVisitor = std::function<void(MaskSpan)>;

/// Calls `visit` once per ordered set partition of `ground` (no empty blocks).
/// The empty ground yields the single empty composition.
void for_each_set_composition(VertexMask ground, const BlockVisitor& visit);

/// Calls `visit` once per sequence of n pairwise-disjoint (possibly empty)
/// blocks covering `ground`, i.e. once per map ground -> [n].
void for_each_decomposition(VertexMask ground, unsigned n, const BlockVisitor& visit);

/// Calls `visit` for every ordered set partition P of `ground` satisfying,
/// for every vertex v in ground and every u in preds[v] ∩ ground,
/// P(u) < P(v) (strict) or P(u) <= P(v) (weak). Blocks are generated
/// directly from the available minimal elements, so no candidate is discarded
/// in strict mode. `preds` is indexed by vertex bit position.
/// Throws InvalidInput if the predecessor relation has a cycle inside ground.
void for_each_constrained_composition(VertexMask ground, std::span<const VertexMask> preds, bool strict,
                                      const BlockVisitor& visit);

std::vector<SetComposition> enumerate_set_compositions(const VertexSet& ground);
std::vector<SetDecomposition> enumerate_decompositions(const VertexSet& ground, unsigned n);

using Arc = std::pair<Label, Label>;

/// True iff the arcs (given by vertex bit positions) form no directed cycle.
bool is_acyclic_relation(std::span<const VertexMask> preds);

/// sum over refinements Q of P with Q(v) < Q(v') for every arc (v, v') of
/// (-1)^{l(Q)}. Throws InvalidInput on cyclic arcs, on arcs leaving the
/// ground, or when P is not a composition of ground.
Integer signed_constrained_sum(const VertexSet& ground, std::span<const Arc> arcs, const SetComposition& p);

}  // namespace hopfhg
