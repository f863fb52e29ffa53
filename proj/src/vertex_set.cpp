#include "hopfhg/vertex_set.hpp"

#include <algorithm>

#include "hopfhg/errors.hpp"

namespace hopfhg {

VertexMask compress_mask(VertexMask value, VertexMask selector) {
  VertexMask out = 0;
  unsigned pos = 0;
  for (VertexMask s = selector; s; s &= s - 1, ++pos) {
    if (value & (s & -s)) out |= VertexMask{1} << pos;
  }
  return out;
}

VertexMask expand_mask(VertexMask value, VertexMask selector) {
  VertexMask out = 0;
  unsigned pos = 0;
  for (VertexMask s = selector; s; s &= s - 1, ++pos) {
    if (value >> pos & 1U) out |= s & -s;
  }
  return out;
}

VertexSet::VertexSet(std::vector<Label> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  if (auto dup = std::adjacent_find(labels_.begin(), labels_.end()); dup != labels_.end()) {
    throw InvalidInput("duplicate vertex label '" + *dup + "'");
  }
  if (labels_.size() > kMaxVertices) {
    throw InvalidInput("too many vertices: " + std::to_string(labels_.size()) + " > " +
                       std::to_string(kMaxVertices));
  }
}

bool VertexSet::contains(const Label& label) const {
  return std::binary_search(labels_.begin(), labels_.end(), label);
}

std::size_t VertexSet::index_of(const Label& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) throw InvalidInput("unknown vertex '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

VertexMask VertexSet::full_mask() const {
  return labels_.size() == 64 ? ~VertexMask{0} : (VertexMask{1} << labels_.size()) - 1;
}

VertexMask VertexSet::mask_of(std::span<const Label> labels) const {
  VertexMask m = 0;
  for (const auto& l : labels) m |= VertexMask{1} << index_of(l);
  return m;
}

std::vector<Label> VertexSet::labels_of(VertexMask mask) const {
  std::vector<Label> out;
  out.reserve(popcount(mask));
  for (VertexMask m = mask; m; m &= m - 1) out.push_back(labels_[lowest_index(m)]);
  return out;
}

VertexSet VertexSet::subset(VertexMask mask) const {
  VertexSet out;
  out.labels_ = labels_of(mask);
  return out;
}

std::string format_labels(std::span<const Label> labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += labels[i];
  }
  return out + "}";
}

std::string to_string(const VertexSet& vs) { return format_labels(vs.labels()); }

}  // namespace hopfhg
