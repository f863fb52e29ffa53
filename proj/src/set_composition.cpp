#include "hopfhg/set_composition.hpp"

#include <algorithm>

#include "hopfhg/errors.hpp"

namespace hopfhg {

namespace {

// Nonzero submasks of `m` in increasing order.
inline VertexMask next_submask(VertexMask sub, VertexMask m) { return (sub - m) & m; }

void compositions_rec(VertexMask remaining, std::vector<VertexMask>& blocks, const BlockVisitor& visit) {
  if (remaining == 0) {
    visit(blocks);
    return;
  }
  for (VertexMask sub = next_submask(0, remaining); sub; sub = next_submask(sub, remaining)) {
    blocks.push_back(sub);
    compositions_rec(remaining & ~sub, blocks, visit);
    blocks.pop_back();
  }
}

struct ConstrainedWalk {
  std::span<const VertexMask> preds;
  bool strict;
  const BlockVisitor& visit;
  std::vector<VertexMask> blocks;

  void run(VertexMask remaining) {
    if (remaining == 0) {
      visit(blocks);
      return;
    }
    VertexMask available = 0;
    for (VertexMask m = remaining; m; m &= m - 1) {
      const unsigned v = lowest_index(m);
      if ((preds[v] & remaining) == 0) available |= VertexMask{1} << v;
    }
    const VertexMask pool = strict ? available : remaining;
    for (VertexMask sub = next_submask(0, pool); sub; sub = next_submask(sub, pool)) {
      if (!strict && !closed_block(sub, remaining)) continue;
      blocks.push_back(sub);
      run(remaining & ~sub);
      blocks.pop_back();
    }
  }

  // Every member's pending predecessors sit in the same block.
  bool closed_block(VertexMask block, VertexMask remaining) const {
    for (VertexMask m = block; m; m &= m - 1) {
      if ((preds[lowest_index(m)] & remaining & ~block) != 0) return false;
    }
    return true;
  }
};

}  // namespace

SetDecomposition::SetDecomposition(VertexSet ground, std::vector<VertexMask> blocks)
    : ground_(std::move(ground)), blocks_(std::move(blocks)) {
  VertexMask seen = 0;
  const VertexMask full = ground_.full_mask();
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i] & ~full) throw InvalidInput("decomposition block " + std::to_string(i) + " leaves the ground set");
    if (blocks_[i] & seen) throw InvalidInput("decomposition blocks are not pairwise disjoint (block " + std::to_string(i) + ")");
    seen |= blocks_[i];
  }
  if (seen != full) {
    throw InvalidInput("decomposition does not cover the ground set; missing " +
                       format_labels(ground_.labels_of(full & ~seen)));
  }
}

SetDecomposition SetDecomposition::from_labels(VertexSet ground, const std::vector<std::vector<Label>>& blocks) {
  std::vector<VertexMask> masks;
  masks.reserve(blocks.size());
  for (const auto& b : blocks) {
    const VertexMask m = ground.mask_of(b);
    if (popcount(m) != b.size()) throw InvalidInput("decomposition block repeats a vertex");
    masks.push_back(m);
  }
  return SetDecomposition(std::move(ground), std::move(masks));
}

SetDecomposition SetDecomposition::from_coloring(VertexSet ground, std::span<const unsigned> colors, unsigned n) {
  if (colors.size() != ground.size()) throw InvalidInput("coloring length does not match the ground set");
  std::vector<VertexMask> blocks(n, 0);
  for (std::size_t v = 0; v < colors.size(); ++v) {
    if (colors[v] >= n) throw InvalidInput("color out of range");
    blocks[colors[v]] |= VertexMask{1} << v;
  }
  return SetDecomposition(std::move(ground), std::move(blocks));
}

std::size_t SetDecomposition::block_of(const Label& label) const {
  const VertexMask bit = VertexMask{1} << ground_.index_of(label);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i] & bit) return i;
  }
  throw InvalidInput("vertex '" + label + "' is in no block");  // unreachable for valid objects
}

bool SetDecomposition::has_empty_block() const {
  return std::any_of(blocks_.begin(), blocks_.end(), [](VertexMask b) { return b == 0; });
}

SetDecomposition SetDecomposition::canonical() const {
  std::vector<VertexMask> kept;
  for (VertexMask b : blocks_) {
    if (b) kept.push_back(b);
  }
  return SetDecomposition(ground_, std::move(kept));
}

SetDecomposition SetDecomposition::restricted(VertexMask subset) const {
  std::vector<VertexMask> out;
  out.reserve(blocks_.size());
  for (VertexMask b : blocks_) out.push_back(compress_mask(b & subset, subset));
  return SetDecomposition(ground_.subset(subset), std::move(out));
}

std::string SetDecomposition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += ",";
    out += format_labels(ground_.labels_of(blocks_[i]));
  }
  return out + ")";
}

SetComposition::SetComposition(VertexSet ground, std::vector<VertexMask> blocks)
    : SetDecomposition(std::move(ground), std::move(blocks)) {
  if (has_empty_block()) throw InvalidInput("set composition has an empty block");
}

SetComposition SetComposition::from_labels(VertexSet ground, const std::vector<std::vector<Label>>& blocks) {
  SetDecomposition d = SetDecomposition::from_labels(std::move(ground), blocks);
  return SetComposition(d.ground(), d.blocks());
}

void for_each_set_composition(VertexMask ground, const BlockVisitor& visit) {
  std::vector<VertexMask> blocks;
  compositions_rec(ground, blocks, visit);
}

void for_each_decomposition(VertexMask ground, unsigned n, const BlockVisitor& visit) {
  std::vector<VertexMask> bits;
  for (VertexMask m = ground; m; m &= m - 1) bits.push_back(m & -m);
  if (n == 0) {
    if (bits.empty()) visit({});
    return;
  }
  std::vector<unsigned> color(bits.size(), 0);
  std::vector<VertexMask> blocks(n);
  while (true) {
    std::fill(blocks.begin(), blocks.end(), 0);
    for (std::size_t i = 0; i < bits.size(); ++i) blocks[color[i]] |= bits[i];
    visit(blocks);
    std::size_t i = 0;
    while (i < color.size() && ++color[i] == n) color[i++] = 0;
    if (i == color.size()) return;
  }
}

void for_each_constrained_composition(VertexMask ground, std::span<const VertexMask> preds, bool strict,
                                      const BlockVisitor& visit) {
  std::vector<VertexMask> local(kMaxVertices, 0);
  for (VertexMask m = ground; m; m &= m - 1) {
    const unsigned v = lowest_index(m);
    if (v < preds.size()) local[v] = preds[v] & ground;
  }
  if (!is_acyclic_relation(local)) throw InvalidInput("constraint relation has a directed cycle");
  ConstrainedWalk walk{local, strict, visit, {}};
  walk.run(ground);
}

std::vector<SetComposition> enumerate_set_compositions(const VertexSet& ground) {
  std::vector<SetComposition> out;
  for_each_set_composition(ground.full_mask(), [&](MaskSpan blocks) {
    out.emplace_back(ground, std::vector<VertexMask>(blocks.begin(), blocks.end()));
  });
  return out;
}

std::vector<SetDecomposition> enumerate_decompositions(const VertexSet& ground, unsigned n) {
  std::vector<SetDecomposition> out;
  for_each_decomposition(ground.full_mask(), n, [&](MaskSpan blocks) {
    out.emplace_back(ground, std::vector<VertexMask>(blocks.begin(), blocks.end()));
  });
  return out;
}

bool is_acyclic_relation(std::span<const VertexMask> preds) {
  VertexMask remaining = 0;
  for (std::size_t v = 0; v < preds.size(); ++v) {
    if (preds[v]) remaining |= VertexMask{1} << v;
    remaining |= preds[v];
  }
  // Peel off vertices whose predecessors are all gone.
  while (remaining) {
    VertexMask ready = 0;
    for (VertexMask m = remaining; m; m &= m - 1) {
      const unsigned v = lowest_index(m);
      const VertexMask p = v < preds.size() ? preds[v] : 0;
      if ((p & remaining) == 0) ready |= VertexMask{1} << v;
    }
    if (!ready) return false;
    remaining &= ~ready;
  }
  return true;
}

Integer signed_constrained_sum(const VertexSet& ground, std::span<const Arc> arcs, const SetComposition& p) {
  if (p.ground() != ground) throw InvalidInput("composition is not over the given ground set");
  std::vector<VertexMask> preds(ground.size(), 0);
  for (const auto& [from, to] : arcs) {
    const auto u = ground.index_of(from);
    const auto v = ground.index_of(to);
    if (u == v) throw InvalidInput("arc (" + from + "," + to + ") is a loop");
    preds[v] |= VertexMask{1} << u;
  }
  if (!is_acyclic_relation(preds)) throw InvalidInput("arc set has a directed cycle");

  // Refinements of P are concatenations of a composition of each block.
  const auto& outer = p.blocks();
  Integer total = 0;
  std::vector<VertexMask> refined;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == outer.size()) {
      std::vector<std::size_t> position(ground.size());
      for (std::size_t b = 0; b < refined.size(); ++b) {
        for (VertexMask m = refined[b]; m; m &= m - 1) position[lowest_index(m)] = b;
      }
      for (std::size_t v = 0; v < preds.size(); ++v) {
        for (VertexMask m = preds[v]; m; m &= m - 1) {
          if (position[lowest_index(m)] >= position[v]) return;
        }
      }
      total += sign_power(static_cast<std::int64_t>(refined.size()));
      return;
    }
    for_each_set_composition(outer[i], [&](MaskSpan inner) {
      const std::size_t mark = refined.size();
      refined.insert(refined.end(), inner.begin(), inner.end());
      rec(i + 1);
      refined.resize(mark);
    });
  };
  rec(0);
  return total;
}

}  // namespace hopfhg
