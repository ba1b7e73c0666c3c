#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

namespace assr {

/// Seeded 64-bit Mersenne Twister (std::mt19937_64, whose output sequence is
/// fixed by the C++ standard). Integer draws use rejection sampling on the raw
/// 64-bit output instead of std::uniform_int_distribution, whose algorithm is
/// implementation-defined, so streams are reproducible on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below(0)");
    constexpr auto max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - (max % n);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    if (hi < lo) throw std::invalid_argument("Rng::uniform with empty range");
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  /// Uniform k-subset of {1..n} in increasing order (selection sampling).
  std::vector<std::size_t> subset(std::size_t k, std::size_t n) {
    if (k > n) throw std::invalid_argument("Rng::subset with k > n");
    std::vector<std::size_t> out;
    out.reserve(k);
    std::size_t needed = k;
    for (std::size_t i = 1; i <= n && needed > 0; ++i) {
      if (below(n - i + 1) < needed) {
        out.push_back(i);
        --needed;
      }
    }
    return out;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace assr
