#include "hopfhg/hypergraph.hpp"

#include <algorithm>

#include "hopfhg/errors.hpp"

namespace hopfhg {

namespace {

std::vector<VertexMask> sorted_edges(std::vector<VertexMask> edges) {
  std::sort(edges.begin(), edges.end(), edge_less);
  return edges;
}

VertexMask subset_mask(const Hypergraph& h, const VertexSet& s) {
  for (const auto& l : s) {
    if (!h.vertices().contains(l)) throw InvalidInput("subset contains '" + l + "', which is not a vertex");
  }
  return h.vertices().mask_of(s);
}

void check_subset(const Hypergraph& h, VertexMask s) {
  if (s & ~h.vertices().full_mask()) throw InvalidInput("subset is not contained in the vertex set");
}

}  // namespace

bool edge_less(VertexMask a, VertexMask b) {
  const unsigned pa = popcount(a);
  const unsigned pb = popcount(b);
  if (pa != pb) return pa < pb;
  // Same size: compare ascending index sequences lexicographically.
  while (a && b) {
    const unsigned ia = lowest_index(a);
    const unsigned ib = lowest_index(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

Hypergraph::Hypergraph(VertexSet vertices, std::vector<VertexMask> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  const VertexMask full = vertices_.full_mask();
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i] == 0) throw InvalidInput("edges[" + std::to_string(i) + "]: empty edge");
    if (edges_[i] & ~full) throw InvalidInput("edges[" + std::to_string(i) + "]: edge leaves the vertex set");
  }
}

Hypergraph Hypergraph::from_labels(std::vector<Label> vertices, const std::vector<std::vector<Label>>& edges) {
  VertexSet vs(std::move(vertices));
  std::vector<VertexMask> masks;
  masks.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (edges[i].empty()) throw InvalidInput(where + ": empty edge");
    VertexMask m = 0;
    for (std::size_t j = 0; j < edges[i].size(); ++j) {
      const auto& l = edges[i][j];
      if (!vs.contains(l)) throw InvalidInput(where + "[" + std::to_string(j) + "]: unknown vertex '" + l + "'");
      const VertexMask bit = VertexMask{1} << vs.index_of(l);
      if (m & bit) throw InvalidInput(where + "[" + std::to_string(j) + "]: vertex '" + l + "' repeated in edge");
      m |= bit;
    }
    masks.push_back(m);
  }
  return Hypergraph(std::move(vs), std::move(masks));
}

VertexMask Hypergraph::isolated_mask() const {
  VertexMask covered = 0;
  for (VertexMask e : edges_) covered |= e;
  return vertices_.full_mask() & ~covered;
}

Hypergraph Hypergraph::canonical() const {
  Hypergraph out = *this;
  std::sort(out.edges_.begin(), out.edges_.end(), edge_less);
  return out;
}

std::string Hypergraph::to_string() const {
  const Hypergraph c = canonical();
  std::string out = "{";
  for (std::size_t i = 0; i < c.edges_.size(); ++i) {
    if (i) out += ",";
    out += format_labels(c.edge_labels(i));
  }
  return out + "} on " + hopfhg::to_string(vertices_);
}

bool operator==(const Hypergraph& a, const Hypergraph& b) {
  return a.vertices_ == b.vertices_ && a.edges_.size() == b.edges_.size() &&
         sorted_edges(a.edges_) == sorted_edges(b.edges_);
}

bool operator<(const Hypergraph& a, const Hypergraph& b) {
  if (a.vertices_ != b.vertices_) return a.vertices_ < b.vertices_;
  const auto ea = sorted_edges(a.edges_);
  const auto eb = sorted_edges(b.edges_);
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end(), edge_less);
}

Hypergraph restriction(const Hypergraph& h, const VertexSet& s) { return restriction(h, subset_mask(h, s)); }

Hypergraph restriction(const Hypergraph& h, VertexMask s) {
  check_subset(h, s);
  std::vector<VertexMask> kept;
  for (VertexMask e : h.edges()) {
    if ((e & ~s) == 0) kept.push_back(compress_mask(e, s));
  }
  return Hypergraph(h.vertices().subset(s), std::move(kept));
}

Hypergraph contraction(const Hypergraph& h, const VertexSet& s) { return contraction(h, subset_mask(h, s)); }

Hypergraph contraction(const Hypergraph& h, VertexMask s) {
  check_subset(h, s);
  const VertexMask t = h.vertices().full_mask() & ~s;
  std::vector<VertexMask> kept;
  for (VertexMask e : h.edges()) {
    if (e & t) kept.push_back(compress_mask(e & t, t));
  }
  return Hypergraph(h.vertices().subset(t), std::move(kept));
}

Hypergraph product(const Hypergraph& a, const Hypergraph& b) {
  std::vector<Label> all = a.vertices().labels();
  for (const auto& l : b.vertices()) {
    if (a.vertices().contains(l)) throw InvalidInput("product of hypergraphs sharing vertex '" + l + "'");
    all.push_back(l);
  }
  VertexSet merged(std::move(all));
  const VertexMask sel_a = merged.mask_of(a.vertices());
  const VertexMask sel_b = merged.mask_of(b.vertices());
  std::vector<VertexMask> edges;
  edges.reserve(a.edge_count() + b.edge_count());
  for (VertexMask e : a.edges()) edges.push_back(expand_mask(e, sel_a));
  for (VertexMask e : b.edges()) edges.push_back(expand_mask(e, sel_b));
  return Hypergraph(std::move(merged), std::move(edges));
}

Hypergraph product(std::span<const Hypergraph> factors) {
  Hypergraph acc;
  for (const auto& f : factors) acc = product(acc, f);
  return acc;
}

std::vector<Hypergraph> iterated_coproduct(const Hypergraph& h, const SetDecomposition& d) {
  if (d.ground() != h.vertices()) throw InvalidInput("decomposition is not over the hypergraph's vertex set");
  std::vector<Hypergraph> out;
  out.reserve(d.length());
  Hypergraph rest = h;
  VertexMask remaining = h.vertices().full_mask();
  for (std::size_t i = 0; i < d.length(); ++i) {
    // Block i in the coordinates of the current remainder.
    const VertexMask local = compress_mask(d.blocks()[i], remaining);
    out.push_back(restriction(rest, local));
    if (i + 1 < d.length()) {
      rest = contraction(rest, local);
      remaining &= ~d.blocks()[i];
    }
  }
  return out;
}

bool is_discrete(const Hypergraph& h) {
  return std::all_of(h.edges().begin(), h.edges().end(), [](VertexMask e) { return popcount(e) <= 1; });
}

Hypergraph relabel(const Hypergraph& h, const std::map<Label, Label>& sigma) {
  std::vector<Label> image;
  image.reserve(h.vertex_count());
  for (const auto& l : h.vertices()) {
    auto it = sigma.find(l);
    if (it == sigma.end()) throw InvalidInput("relabeling is not defined on vertex '" + l + "'");
    image.push_back(it->second);
  }
  VertexSet target;
  try {
    target = VertexSet(image);
  } catch (const InvalidInput&) {
    throw InvalidInput("relabeling is not injective on the vertex set");
  }
  // Position of each old vertex in the new sorted order.
  std::vector<unsigned> moved(h.vertex_count());
  for (std::size_t i = 0; i < image.size(); ++i) moved[i] = static_cast<unsigned>(target.index_of(image[i]));
  std::vector<VertexMask> edges;
  edges.reserve(h.edge_count());
  for (VertexMask e : h.edges()) {
    VertexMask out = 0;
    for (VertexMask m = e; m; m &= m - 1) out |= VertexMask{1} << moved[lowest_index(m)];
    edges.push_back(out);
  }
  return Hypergraph(std::move(target), std::move(edges));
}

Integer FormalSum::coefficient(const Hypergraph& h) const {
  auto it = terms_.find(h);
  return it == terms_.end() ? Integer(0) : it->second;
}

void FormalSum::add(const Hypergraph& h, const Integer& coefficient) {
  if (h.vertices() != vertices_) throw InvalidInput("formal sum term on a different vertex set");
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(h.canonical(), coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

FormalSum& FormalSum::operator+=(const FormalSum& rhs) {
  for (const auto& [h, c] : rhs.terms_) add(h, c);
  return *this;
}

FormalSum antipode_takeuchi(const Hypergraph& h) {
  FormalSum out(h.vertices());
  if (h.vertex_count() == 0) {
    out.add(h, 1);
    return out;
  }
  for_each_set_composition(h.vertices().full_mask(), [&](MaskSpan blocks) {
    const SetDecomposition d(h.vertices(), std::vector<VertexMask>(blocks.begin(), blocks.end()));
    const auto pieces = iterated_coproduct(h, d);
    out.add(product(pieces), sign_power(static_cast<std::int64_t>(blocks.size())));
  });
  return out;
}

}  // namespace hopfhg
