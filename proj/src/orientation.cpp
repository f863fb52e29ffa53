#include "hopfhg/orientation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "hopfhg/errors.hpp"

namespace hopfhg {

namespace {

// e -> e' iff head(e) lies in e' and is not head(e').
bool points_to(VertexMask head_a, VertexMask edge_b, VertexMask head_b) {
  return (head_a & edge_b) && head_a != head_b;
}

}  // namespace

Orientation Orientation::from_labels(const Hypergraph& h, const std::vector<Label>& heads) {
  std::vector<unsigned> idx;
  idx.reserve(heads.size());
  for (const auto& l : heads) idx.push_back(static_cast<unsigned>(h.vertices().index_of(l)));
  Orientation f(std::move(idx));
  validate_orientation(h, f);
  return f;
}

VertexMask Orientation::head_mask() const {
  VertexMask m = 0;
  for (unsigned v : heads_) m |= VertexMask{1} << v;
  return m;
}

std::vector<Label> Orientation::head_labels(const Hypergraph& h) const {
  std::vector<Label> out;
  out.reserve(heads_.size());
  for (unsigned v : heads_) out.push_back(h.vertices()[v]);
  return out;
}

void validate_orientation(const Hypergraph& h, const Orientation& f) {
  if (f.size() != h.edge_count()) {
    throw InvalidInput("orientation has " + std::to_string(f.size()) + " heads for " +
                       std::to_string(h.edge_count()) + " edges");
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.head(i) >= h.vertex_count() || !(h.edge(i) >> f.head(i) & 1U)) {
      throw InvalidInput("orientation head of edge " + std::to_string(i) + " is not in the edge");
    }
  }
}

bool is_acyclic(const Hypergraph& h, const Orientation& f) {
  validate_orientation(h, f);
  const std::size_t m = h.edge_count();
  std::vector<VertexMask> head_bits(m);
  for (std::size_t i = 0; i < m; ++i) head_bits[i] = VertexMask{1} << f.head(i);
  // Iterative three-color DFS on the edge digraph.
  enum : std::uint8_t { kWhite, kGray, kBlack };
  std::vector<std::uint8_t> state(m, kWhite);
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t root = 0; root < m; ++root) {
    if (state[root] != kWhite) continue;
    stack.emplace_back(root, 0);
    state[root] = kGray;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next == m) {
        state[node] = kBlack;
        stack.pop_back();
        continue;
      }
      const std::size_t to = next++;
      if (!points_to(head_bits[node], h.edge(to), head_bits[to])) continue;
      if (state[to] == kGray) return false;
      if (state[to] == kWhite) {
        state[to] = kGray;
        stack.emplace_back(to, 0);
      }
    }
  }
  return true;
}

std::vector<Orientation> acyclic_orientations(const Hypergraph& h) {
  const std::size_t m = h.edge_count();
  // Large edges first: a head chosen for a big edge forces the heads of the
  // smaller edges through it, so cycles surface early.
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return popcount(h.edge(a)) > popcount(h.edge(b)); });

  std::vector<VertexMask> head_bits(m, 0);
  std::vector<std::size_t> assigned;
  std::vector<Orientation> out;
  std::vector<char> seen(m, 0);

  // Marks every assigned edge reachable from `from`.
  std::function<void(std::size_t)> mark = [&](std::size_t from) {
    seen[from] = 1;
    for (std::size_t to : assigned) {
      if (!seen[to] && points_to(head_bits[from], h.edge(to), head_bits[to])) mark(to);
    }
  };

  std::function<void(std::size_t)> place = [&](std::size_t depth) {
    if (depth == m) {
      std::vector<unsigned> heads(m);
      for (std::size_t i = 0; i < m; ++i) heads[i] = lowest_index(head_bits[i]);
      out.emplace_back(std::move(heads));
      return;
    }
    const std::size_t e = order[depth];
    for (VertexMask cand = h.edge(e); cand; cand &= cand - 1) {
      head_bits[e] = cand & -cand;
      // A new cycle must pass through e: e -> x ->* y -> e.
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t x : assigned) {
        if (!seen[x] && points_to(head_bits[e], h.edge(x), head_bits[x])) mark(x);
      }
      bool cyclic = false;
      for (std::size_t y : assigned) {
        if (seen[y] && points_to(head_bits[y], h.edge(e), head_bits[e])) {
          cyclic = true;
          break;
        }
      }
      if (cyclic) continue;
      assigned.push_back(e);
      place(depth + 1);
      assigned.pop_back();
    }
    head_bits[e] = 0;
  };
  place(0);
  std::sort(out.begin(), out.end());
  return out;
}

Integer orientation_count(const Hypergraph& h) {
  Integer total = 1;
  for (VertexMask e : h.edges()) total *= popcount(e);
  return total;
}

Coloring::Coloring(std::vector<unsigned> colors, unsigned n) : colors_(std::move(colors)), n_(n) {
  for (unsigned c : colors_) {
    if (c >= n_) throw InvalidInput("color " + std::to_string(c + 1) + " outside [" + std::to_string(n_) + "]");
  }
}

Coloring Coloring::from_decomposition(const SetDecomposition& d) {
  std::vector<unsigned> colors(d.ground().size(), 0);
  for (std::size_t b = 0; b < d.length(); ++b) {
    for (VertexMask m = d.blocks()[b]; m; m &= m - 1) colors[lowest_index(m)] = static_cast<unsigned>(b);
  }
  return Coloring(std::move(colors), static_cast<unsigned>(d.length()));
}

SetDecomposition Coloring::to_decomposition(const VertexSet& ground) const {
  return SetDecomposition::from_coloring(ground, colors_, n_);
}

namespace {

// Maximal color of edge e and the number of vertices attaining it.
std::pair<unsigned, unsigned> edge_max(VertexMask e, const Coloring& s) {
  unsigned top = 0;
  unsigned ties = 0;
  for (VertexMask m = e; m; m &= m - 1) {
    const unsigned c = s.color(lowest_index(m));
    if (ties == 0 || c > top) {
      top = c;
      ties = 1;
    } else if (c == top) {
      ++ties;
    }
  }
  return {top, ties};
}

void check_coloring(const Hypergraph& h, const Coloring& s) {
  if (s.colors().size() != h.vertex_count()) throw InvalidInput("coloring is not total on the vertex set");
}

}  // namespace

bool is_compatible(const Hypergraph& h, const Orientation& f, const Coloring& s) {
  validate_orientation(h, f);
  check_coloring(h, s);
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    if (s.color(f.head(i)) != edge_max(h.edge(i), s).first) return false;
  }
  return true;
}

bool is_strictly_compatible(const Hypergraph& h, const Orientation& f, const Coloring& s) {
  validate_orientation(h, f);
  check_coloring(h, s);
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const auto [top, ties] = edge_max(h.edge(i), s);
    if (ties != 1 || s.color(f.head(i)) != top) return false;
  }
  return true;
}

kernels::EdgeTable make_edge_table(const Hypergraph& h, const Orientation* f) {
  kernels::EdgeTable table;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    std::vector<std::uint8_t> vs;
    for (VertexMask m = h.edge(i); m; m &= m - 1) vs.push_back(static_cast<std::uint8_t>(lowest_index(m)));
    table.add_edge(vs, f ? static_cast<std::uint8_t>(f->head(i)) : vs.front());
  }
  return table;
}

Integer count_compatible_pairs(const Hypergraph& h, unsigned n, bool strict, kernels::Backend backend) {
  const auto rule = strict ? kernels::ColoringRule::HeadIsUniqueMax : kernels::ColoringRule::HeadIsMax;
  Integer total = 0;
  for (const auto& f : acyclic_orientations(h)) {
    const auto count = kernels::count_colorings(make_edge_table(h, &f), h.vertex_count(), n, rule, backend);
    total += Integer(static_cast<unsigned long>(count));
  }
  return total;
}

}  // namespace hopfhg
