#include "hopfhg/kernels/coloring_kernels.hpp"

namespace hopfhg::kernels {

std::uint32_t check_batch_scalar(const EdgeTable& table, ColoringRule rule, const std::uint8_t* colors,
                                 unsigned lanes) {
  const bool need_unique = rule != ColoringRule::HeadIsMax;
  const bool need_head = rule != ColoringRule::UniqueMax;
  std::uint32_t passed = 0;
  for (unsigned lane = 0; lane < lanes; ++lane) {
    bool ok = true;
    for (std::size_t e = 0; ok && e < table.edge_count(); ++e) {
      std::uint8_t top = 0;
      unsigned ties = 0;
      for (std::uint32_t j = table.offsets[e]; j < table.offsets[e + 1]; ++j) {
        const std::uint8_t c = colors[table.members[j] * kBatchLanes + lane];
        if (c > top || ties == 0) {
          top = c;
          ties = 1;
        } else if (c == top) {
          ++ties;
        }
      }
      if (need_unique && ties != 1) ok = false;
      if (need_head && colors[table.heads[e] * kBatchLanes + lane] != top) ok = false;
    }
    if (ok) passed |= std::uint32_t{1} << lane;
  }
  return passed;
}

}  // namespace hopfhg::kernels
