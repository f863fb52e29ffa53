#include "hopfhg/invariant.hpp"

#include <map>

#include "hopfhg/combinatorics.hpp"
#include "hopfhg/errors.hpp"

namespace hopfhg {

OrientationConstraintSystem OrientationConstraintSystem::from_orientation(const Hypergraph& h,
                                                                          const Orientation& f) {
  validate_orientation(h, f);
  const VertexMask head_set = f.head_mask();
  OrientationConstraintSystem out{h.vertices().subset(head_set), {}};
  out.preds.assign(out.heads.size(), 0);
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const VertexMask below = h.edge(i) & head_set & ~(VertexMask{1} << f.head(i));
    const VertexMask head_local = compress_mask(VertexMask{1} << f.head(i), head_set);
    out.preds[lowest_index(head_local)] |= compress_mask(below, head_set);
  }
  return out;
}

OrientationConstraintSystem OrientationConstraintSystem::from_arcs(VertexSet heads, std::span<const Arc> arcs) {
  OrientationConstraintSystem out{std::move(heads), {}};
  out.preds.assign(out.heads.size(), 0);
  for (const auto& [from, to] : arcs) {
    out.preds[out.heads.index_of(to)] |= VertexMask{1} << out.heads.index_of(from);
  }
  return out;
}

std::vector<Arc> OrientationConstraintSystem::arcs() const {
  std::vector<Arc> out;
  for (std::size_t v = 0; v < preds.size(); ++v) {
    for (VertexMask m = preds[v]; m; m &= m - 1) out.emplace_back(heads[lowest_index(m)], heads[v]);
  }
  return out;
}

std::vector<SetComposition> constrained_compositions(const OrientationConstraintSystem& c, bool strict) {
  std::vector<SetComposition> out;
  for_each_constrained_composition(c.heads.full_mask(), c.preds, strict, [&](MaskSpan blocks) {
    out.emplace_back(c.heads, std::vector<VertexMask>(blocks.begin(), blocks.end()));
  });
  return out;
}

Integer chi_eval_definition(const Hypergraph& h, unsigned n) {
  Integer total = 0;
  for_each_decomposition(h.vertices().full_mask(), n, [&](MaskSpan blocks) {
    const SetDecomposition d(h.vertices(), std::vector<VertexMask>(blocks.begin(), blocks.end()));
    const auto pieces = iterated_coproduct(h, d);
    if (std::all_of(pieces.begin(), pieces.end(), [](const Hypergraph& p) { return is_discrete(p); })) ++total;
  });
  return total;
}

Integer chi_eval_colorings(const Hypergraph& h, unsigned n, kernels::Backend backend) {
  const auto count =
      kernels::count_colorings(make_edge_table(h), h.vertex_count(), n, kernels::ColoringRule::UniqueMax, backend);
  return Integer(static_cast<unsigned long>(count));
}

Polynomial chi_polynomial(const Hypergraph& h) {
  // Tally the exponent sequences first; each distinct F_p is built once.
  std::map<std::vector<long>, Integer> tally;
  std::vector<VertexMask> preds(h.vertex_count());
  for (const auto& f : acyclic_orientations(h)) {
    const VertexMask heads = f.head_mask();
    std::fill(preds.begin(), preds.end(), 0);
    std::vector<VertexMask> headed_by(h.vertex_count(), 0);  // union of edges with that head
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
      const unsigned top = f.head(i);
      preds[top] |= h.edge(i) & heads & ~(VertexMask{1} << top);
      headed_by[top] |= h.edge(i);
    }
    for_each_constrained_composition(heads, preds, true, [&](MaskSpan blocks) {
      std::vector<long> parts;
      parts.reserve(blocks.size());
      VertexMask covered = heads;
      for (VertexMask block : blocks) {
        VertexMask reach = 0;
        for (VertexMask m = block; m; m &= m - 1) reach |= headed_by[lowest_index(m)];
        const VertexMask fresh = reach & ~covered;
        covered |= fresh;
        parts.push_back(popcount(fresh));
      }
      ++tally[parts];
    });
  }
  Polynomial sum;
  for (const auto& [parts, count] : tally) sum += f_polynomial(IntComposition(parts)) * Rational(count);
  return sum * Polynomial::monomial(1, popcount(h.isolated_mask()));
}

Polynomial chi_negative_polynomial(const Hypergraph& h) {
  Polynomial out = chi_polynomial(h).reflected();
  return out * Rational(sign_power(static_cast<std::int64_t>(h.vertex_count())));
}

Integer chi_eval_negative(const Hypergraph& h, unsigned n) {
  const Rational v = chi_negative_polynomial(h)(static_cast<long>(n));
  if (v.get_den() != 1) throw std::logic_error("invariant evaluated to a non-integer");
  return v.get_num();
}

Polynomial chi_on_formal_sum(const FormalSum& f) {
  Polynomial out;
  for (const auto& [h, c] : f.terms()) out += chi_polynomial(h) * Rational(c);
  return out;
}

Rational chi_on_formal_sum(const FormalSum& f, long n) { return chi_on_formal_sum(f)(n); }

}  // namespace hopfhg
