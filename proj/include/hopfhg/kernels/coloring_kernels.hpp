#pragma once

// Batch kernels behind the brute-force coloring counts. A batch holds
// kBatchLanes colorings in structure-of-arrays layout:
// colors[v * kBatchLanes + lane] is the color of vertex v in that lane.
// Every backend must return exactly the scalar reference's lane mask.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace hopfhg::kernels {

inline constexpr std::size_t kBatchLanes = 32;
inline constexpr unsigned kMaxColors = 255;

enum class Backend { Scalar, Avx2, Neon };

enum class ColoringRule : std::uint8_t {
  /// Each edge has exactly one vertex of maximal color.
  UniqueMax,
  /// Each edge's head carries the edge's maximal color (compatible pair).
  HeadIsMax,
  /// Each edge's head is its unique maximal vertex (strictly compatible pair).
  HeadIsUniqueMax,
};

/// Edges as flattened vertex-index lists; heads are used only by the head rules.
struct EdgeTable {
  std::vector<std::uint8_t> members;
  std::vector<std::uint32_t> offsets{0};
  std::vector<std::uint8_t> heads;

  std::size_t edge_count() const { return offsets.size() - 1; }
  void add_edge(const std::vector<std::uint8_t>& vertices, std::uint8_t head = 0);
};

/// Bit `lane` of the result is set iff lane < lanes and that coloring passes.
std::uint32_t check_batch_scalar(const EdgeTable& table, ColoringRule rule, const std::uint8_t* colors,
                                 unsigned lanes);
#if defined(HOPFHG_HAVE_AVX2_KERNEL)
std::uint32_t check_batch_avx2(const EdgeTable& table, ColoringRule rule, const std::uint8_t* colors,
                               unsigned lanes);
#endif
#if defined(HOPFHG_HAVE_NEON_KERNEL)
std::uint32_t check_batch_neon(const EdgeTable& table, ColoringRule rule, const std::uint8_t* colors,
                               unsigned lanes);
#endif

/// Compiled in and supported by the running CPU.
bool backend_available(Backend backend);
/// Fastest available backend; HOPFHG_KERNEL=scalar|avx2|neon overrides it
/// when the named backend is available.
Backend best_backend();
std::string_view backend_name(Backend backend);

/// Number of maps [vertex_count] -> [n] passing `rule`. Throws
/// std::overflow_error when n^vertex_count does not fit in 64 bits and
/// std::invalid_argument when n exceeds kMaxColors.
std::uint64_t count_colorings(const EdgeTable& table, std::size_t vertex_count, unsigned n, ColoringRule rule,
                              Backend backend);

}  // namespace hopfhg::kernels
