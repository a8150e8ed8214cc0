#pragma once

#include <cstdint>
#include <random>

namespace multlab::detail {

/// Generator for task `index` of a run seeded with `seed`. Streams depend only
/// on (seed, index), so results do not depend on task execution order.
inline std::mt19937_64 task_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace multlab::detail
