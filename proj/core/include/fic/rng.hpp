#pragma once

#include <cstdint>
#include <random>

namespace fic {

// Deterministic draws from raw mt19937_64 output with rejection-bounded
// reduction; std::uniform_int_distribution is implementation-defined and
// would break cross-platform reproducibility of seeds.
struct SeededRng {
  std::mt19937_64 eng;

  explicit SeededRng(uint64_t seed) : eng(seed) {}

  uint64_t below(uint64_t n) {
    if (n == 0) return 0;
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t r = eng();
    while (r >= limit) r = eng();
    return r % n;
  }

  long long int_in(long long lo, long long hi) {
    return lo + static_cast<long long>(
                    below(static_cast<uint64_t>(hi - lo) + 1));
  }
};

}  // namespace fic
