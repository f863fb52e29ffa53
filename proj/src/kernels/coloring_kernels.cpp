#include "hopfhg/kernels/coloring_kernels.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

namespace hopfhg::kernels {

namespace {

using BatchFn = std::uint32_t (*)(const EdgeTable&, ColoringRule, const std::uint8_t*, unsigned);

BatchFn batch_function(Backend backend) {
  switch (backend) {
#if defined(HOPFHG_HAVE_AVX2_KERNEL)
    case Backend::Avx2:
      return check_batch_avx2;
#endif
#if defined(HOPFHG_HAVE_NEON_KERNEL)
    case Backend::Neon:
      return check_batch_neon;
#endif
    default:
      return check_batch_scalar;
  }
}

}  // namespace

void EdgeTable::add_edge(const std::vector<std::uint8_t>& vertices, std::uint8_t head) {
  members.insert(members.end(), vertices.begin(), vertices.end());
  offsets.push_back(static_cast<std::uint32_t>(members.size()));
  heads.push_back(head);
}

bool backend_available(Backend backend) {
  switch (backend) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
#if defined(HOPFHG_HAVE_AVX2_KERNEL)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Backend::Neon:
#if defined(HOPFHG_HAVE_NEON_KERNEL)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Backend best_backend() {
  if (const char* forced = std::getenv("HOPFHG_KERNEL")) {
    const std::string name(forced);
    for (Backend b : {Backend::Scalar, Backend::Avx2, Backend::Neon}) {
      if (name == backend_name(b) && backend_available(b)) return b;
    }
  }
  if (backend_available(Backend::Avx2)) return Backend::Avx2;
  if (backend_available(Backend::Neon)) return Backend::Neon;
  return Backend::Scalar;
}

std::string_view backend_name(Backend backend) {
  switch (backend) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
    case Backend::Neon:
      return "neon";
  }
  return "unknown";
}

std::uint64_t count_colorings(const EdgeTable& table, std::size_t vertex_count, unsigned n, ColoringRule rule,
                              Backend backend) {
  if (n > kMaxColors) throw std::invalid_argument("at most " + std::to_string(kMaxColors) + " colors");
  if (!backend_available(backend)) backend = Backend::Scalar;

  // Only vertices met by some edge are enumerated; the rest contribute n each.
  std::vector<int> compact(vertex_count, -1);
  std::size_t active = 0;
  for (std::uint8_t v : table.members) {
    if (compact[v] < 0) compact[v] = static_cast<int>(active++);
  }
  EdgeTable local;
  for (std::size_t e = 0; e < table.edge_count(); ++e) {
    std::vector<std::uint8_t> vs;
    for (std::uint32_t j = table.offsets[e]; j < table.offsets[e + 1]; ++j) {
      vs.push_back(static_cast<std::uint8_t>(compact[table.members[j]]));
    }
    const std::uint8_t head = rule == ColoringRule::UniqueMax ? 0 : static_cast<std::uint8_t>(compact[table.heads[e]]);
    local.add_edge(vs, head);
  }

  auto checked_pow = [](std::uint64_t base, std::size_t exp) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) {
      if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) {
        throw std::overflow_error("coloring count exceeds 64 bits");
      }
      out *= base;
    }
    return out;
  };
  const std::uint64_t free_factor = checked_pow(n, vertex_count - active);
  const std::uint64_t total = checked_pow(n, active);
  if (total == 0 || free_factor == 0) return 0;

  const BatchFn check = batch_function(backend);
  std::vector<std::uint8_t> digits(active, 0);
  std::vector<std::uint8_t> colors(std::max<std::size_t>(active, 1) * kBatchLanes, 0);
  std::uint64_t passed = 0;
  for (std::uint64_t done = 0; done < total;) {
    const auto lanes = static_cast<unsigned>(std::min<std::uint64_t>(kBatchLanes, total - done));
    for (unsigned lane = 0; lane < lanes; ++lane) {
      for (std::size_t v = 0; v < active; ++v) colors[v * kBatchLanes + lane] = digits[v];
      for (std::size_t v = 0; v < active && ++digits[v] == n; ++v) digits[v] = 0;
    }
    passed += static_cast<std::uint64_t>(std::popcount(check(local, rule, colors.data(), lanes)));
    done += lanes;
  }
  if (passed > std::numeric_limits<std::uint64_t>::max() / free_factor) {
    throw std::overflow_error("coloring count exceeds 64 bits");
  }
  return passed * free_factor;
}

}  // namespace hopfhg::kernels
