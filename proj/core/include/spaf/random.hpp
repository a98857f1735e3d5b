#pragma once

#include <cstdint>
#include <random>

namespace spaf {

/// Uniform integer in [0, bound). std::uniform_int_distribution is
/// implementation-defined, so generated graphs would differ between standard
/// libraries; this rejection sampler does not.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

}  // namespace spaf
