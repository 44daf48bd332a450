#pragma once

#include <cstdint>
#include <random>

#include "symreg/bigint.hpp"

namespace symreg {

// All randomness flows through mt19937_64 plus the helpers below. The
// standard <random> distributions are implementation-defined, so using
// them would break the fixed-seed reproducibility contract; the helpers
// consume engine output in a fully specified way instead.
using Rng = std::mt19937_64;

// SplitMix64 step, used to derive independent child seeds (worker
// streams, per-problem generators) from one master seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0,
                                 std::uint64_t c = 0) {
    std::uint64_t s = base;
    splitmix64(s);
    s ^= a;
    splitmix64(s);
    s ^= b;
    splitmix64(s);
    s ^= c;
    return splitmix64(s);
}

// Unbiased uniform draw from [0, n) by rejection on the top of the range.
inline std::uint64_t uniform_u64(Rng& rng, std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    for (;;) {
        std::uint64_t x = rng();
        if (x < limit) return x % n;
    }
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_real01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_real(Rng& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform_real01(rng);
}

// Uniform big integer in [0, bound). Draws just enough 64-bit words to
// cover the bound's bit length and rejects values >= bound, so the result
// is exactly uniform with no floating-point collapse.
inline BigInt uniform_bigint(Rng& rng, const BigInt& bound) {
    if (bound <= 1) return 0;
    const std::size_t bits = boost::multiprecision::msb(bound) + 1;
    const std::size_t words = (bits + 63) / 64;
    const std::size_t top_bits = bits - 64 * (words - 1);
    const std::uint64_t top_mask =
        top_bits >= 64 ? UINT64_MAX : ((std::uint64_t{1} << top_bits) - 1);
    for (;;) {
        BigInt value = 0;
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t chunk = rng();
            if (w + 1 == words) chunk &= top_mask;
            value |= BigInt(chunk) << (64 * w);
        }
        if (value < bound) return value;
    }
}

} // namespace symreg
