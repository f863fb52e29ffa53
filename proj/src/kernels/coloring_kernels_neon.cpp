#include <arm_neon.h>

#include "hopfhg/kernels/coloring_kernels.hpp"

namespace hopfhg::kernels {

namespace {

// 16-bit lane mask from a vector of 0x00 / 0xFF bytes.
std::uint32_t movemask_u8(uint8x16_t v) {
  static const std::uint8_t kBits[16] = {1, 2, 4, 8, 16, 32, 64, 128, 1, 2, 4, 8, 16, 32, 64, 128};
  const uint8x16_t picked = vandq_u8(v, vld1q_u8(kBits));
  const std::uint32_t lo = vaddv_u8(vget_low_u8(picked));
  const std::uint32_t hi = vaddv_u8(vget_high_u8(picked));
  return lo | (hi << 8);
}

std::uint32_t check_half(const EdgeTable& table, ColoringRule rule, const std::uint8_t* colors) {
  const bool need_unique = rule != ColoringRule::HeadIsMax;
  const bool need_head = rule != ColoringRule::UniqueMax;
  const uint8x16_t one = vdupq_n_u8(1);
  uint8x16_t ok = vdupq_n_u8(0xFF);
  auto row = [colors](std::uint8_t v) { return vld1q_u8(colors + v * kBatchLanes); };
  for (std::size_t e = 0; e < table.edge_count(); ++e) {
    const std::uint32_t begin = table.offsets[e];
    const std::uint32_t end = table.offsets[e + 1];
    uint8x16_t top = row(table.members[begin]);
    for (std::uint32_t j = begin + 1; j < end; ++j) top = vmaxq_u8(top, row(table.members[j]));
    if (need_unique) {
      uint8x16_t ties = vdupq_n_u8(0);
      for (std::uint32_t j = begin; j < end; ++j) ties = vsubq_u8(ties, vceqq_u8(row(table.members[j]), top));
      ok = vandq_u8(ok, vceqq_u8(ties, one));
    }
    if (need_head) ok = vandq_u8(ok, vceqq_u8(row(table.heads[e]), top));
  }
  return movemask_u8(ok);
}

}  // namespace

std::uint32_t check_batch_neon(const EdgeTable& table, ColoringRule rule, const std::uint8_t* colors,
                               unsigned lanes) {
  const std::uint32_t mask = check_half(table, rule, colors) | (check_half(table, rule, colors + 16) << 16);
  return lanes >= 32 ? mask : mask & ((std::uint32_t{1} << lanes) - 1);
}

}  // namespace hopfhg::kernels
