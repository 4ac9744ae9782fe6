#pragma once

// Pinned generators so that a (seed, length, trial) triple reproduces the
// same shuffle on any platform: splitmix64 expands seeds, xoshiro256**
// produces the stream, bounded draws use rejection sampling.

#include <array>
#include <cstdint>

namespace qrsort {

class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

class Xoshiro256ss {
public:
    using result_type = std::uint64_t;

    explicit constexpr Xoshiro256ss(std::uint64_t seed) noexcept {
        SplitMix64 sm(seed);
        for (auto& word : s_) word = sm.next();
    }

    constexpr std::uint64_t next() noexcept {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform in [0, bound), bound >= 1. Rejects the low (2^64 mod bound)
    /// draws so every residue is equally likely.
    constexpr std::uint64_t bounded(std::uint64_t bound) noexcept {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // UniformRandomBitGenerator surface, for <random> distributions in tests.
    static constexpr std::uint64_t min() noexcept { return 0; }
    static constexpr std::uint64_t max() noexcept { return ~std::uint64_t{0}; }
    constexpr std::uint64_t operator()() noexcept { return next(); }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> s_{};
};

/// Seed of the stream used for trial `trial` at array length `n`.
constexpr std::uint64_t trial_stream_seed(std::uint64_t seed, std::uint64_t n,
                                          std::uint64_t trial) noexcept {
    const std::uint64_t a = SplitMix64(seed).next();
    const std::uint64_t b = SplitMix64(a ^ n).next();
    return SplitMix64(b ^ trial).next();
}

} // namespace qrsort
