#include "qform/rng.hpp"

#include "qform/special.hpp"

namespace qform {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

std::uint64_t derive_base(SeedSpec spec) {
    // Two mixing rounds keep nearby (seed, streamIndex) pairs far apart.
    const std::uint64_t a = mix64(spec.seed + kGamma);
    const std::uint64_t b = mix64(spec.streamIndex + 0xD1B54A32D192ED03ULL);
    return mix64(a ^ (b + kGamma));
}

}  // namespace

CounterRng::CounterRng(SeedSpec spec) : state_(derive_base(spec)) {}

std::uint64_t CounterRng::next_u64() {
    state_ += kGamma;
    return mix64(state_);
}

double CounterRng::next_uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double CounterRng::next_normal() { return inverse_normal_cdf(next_uniform()); }

double CounterRng::next_sign() { return (next_u64() >> 63) ? 1.0 : -1.0; }

}  // namespace qform
