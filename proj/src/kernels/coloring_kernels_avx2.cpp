#include <immintrin.h>

#include "hopfhg/kernels/coloring_kernels.hpp"

namespace hopfhg::kernels {

static_assert(kBatchLanes == 32, "one __m256i of uint8 per vertex");

std::uint32_t check_batch_avx2(const EdgeTable& table, ColoringRule rule, const std::uint8_t* colors,
                               unsigned lanes) {
  const bool need_unique = rule != ColoringRule::HeadIsMax;
  const bool need_head = rule != ColoringRule::UniqueMax;
  const __m256i one = _mm256_set1_epi8(1);
  __m256i ok = _mm256_set1_epi8(-1);
  auto row = [colors](std::uint8_t v) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(colors + v * kBatchLanes));
  };
  for (std::size_t e = 0; e < table.edge_count(); ++e) {
    const std::uint32_t begin = table.offsets[e];
    const std::uint32_t end = table.offsets[e + 1];
    __m256i top = row(table.members[begin]);
    for (std::uint32_t j = begin + 1; j < end; ++j) top = _mm256_max_epu8(top, row(table.members[j]));
    if (need_unique) {
      // cmpeq yields -1 per tie, so subtracting counts ties.
      __m256i ties = _mm256_setzero_si256();
      for (std::uint32_t j = begin; j < end; ++j) {
        ties = _mm256_sub_epi8(ties, _mm256_cmpeq_epi8(row(table.members[j]), top));
      }
      ok = _mm256_and_si256(ok, _mm256_cmpeq_epi8(ties, one));
    }
    if (need_head) ok = _mm256_and_si256(ok, _mm256_cmpeq_epi8(row(table.heads[e]), top));
  }
  const auto mask = static_cast<std::uint32_t>(_mm256_movemask_epi8(ok));
  return lanes >= 32 ? mask : mask & ((std::uint32_t{1} << lanes) - 1);
}

}  // namespace hopfhg::kernels
