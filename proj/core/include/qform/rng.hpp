#pragma once

#include <cstdint>

namespace qform {

/// Names one reproducible stream. Distinct streamIndex values give
/// statistically independent streams from the same seed, so parallel workers
/// can own disjoint index ranges and the merged output never depends on the
/// worker count.
struct SeedSpec {
    std::uint64_t seed = 0;
    std::uint64_t streamIndex = 0;
};

/// Counter-based generator in the splitmix64 family: the stream is
/// out_i = mix(base + i * gamma) with base derived from (seed, streamIndex).
/// Pure function of (SeedSpec, draw index); no hidden global state.
class CounterRng {
  public:
    explicit CounterRng(SeedSpec spec);

    std::uint64_t next_u64();
    /// Uniform on (0,1), strictly inside the interval (53-bit mantissa).
    double next_uniform();
    /// Standard normal via the inverse CDF; consumes exactly one u64, so the
    /// consumption pattern is fixed across platforms.
    double next_normal();
    /// Rademacher +-1; consumes one u64.
    double next_sign();

  private:
    std::uint64_t state_;
};

}  // namespace qform
