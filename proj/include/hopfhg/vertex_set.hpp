#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hopfhg {

using Label = std::string;
/// Subset of a VertexSet; bit i stands for the i-th label in sorted order.
using VertexMask = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 64;

inline unsigned popcount(VertexMask m) { return static_cast<unsigned>(std::popcount(m)); }
inline unsigned lowest_index(VertexMask m) { return static_cast<unsigned>(std::countr_zero(m)); }

/// Gathers the bits of `value` that lie in `selector` into the low bits,
/// preserving order (a software pext).
VertexMask compress_mask(VertexMask value, VertexMask selector);
/// Inverse of compress_mask: scatters the low bits of `value` onto `selector`.
VertexMask expand_mask(VertexMask value, VertexMask selector);

/// Finite set of vertex labels, kept sorted lexicographically. At most
/// kMaxVertices labels.
class VertexSet {
 public:
  VertexSet() = default;
  /// Throws InvalidInput on duplicate labels or more than kMaxVertices labels.
  explicit VertexSet(std::vector<Label> labels);
  VertexSet(std::initializer_list<Label> labels) : VertexSet(std::vector<Label>(labels)) {}

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::vector<Label>& labels() const { return labels_; }
  const Label& operator[](std::size_t i) const { return labels_[i]; }
  auto begin() const { return labels_.begin(); }
  auto end() const { return labels_.end(); }

  bool contains(const Label& label) const;
  /// Throws InvalidInput naming the label when absent.
  std::size_t index_of(const Label& label) const;
  VertexMask full_mask() const;
  VertexMask mask_of(std::span<const Label> labels) const;
  VertexMask mask_of(const VertexSet& subset) const { return mask_of(subset.labels()); }
  std::vector<Label> labels_of(VertexMask mask) const;
  VertexSet subset(VertexMask mask) const;

  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Label> labels_;
};

/// "{a,b,c}".
std::string to_string(const VertexSet& vs);
std::string format_labels(std::span<const Label> labels);

}  // namespace hopfhg
