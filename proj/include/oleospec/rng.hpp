#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace oleospec {

// SplitMix64 (Steele, Lea, Flood 2014). Chosen because the whole generator is
// four lines of integer arithmetic that any language can reproduce, and
// because independent streams fall out of hashing (seed, tag...) with the
// same finalizer. All randomness in this project flows through this type.
inline constexpr std::uint64_t kGolden64 = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Child stream seed from (base, tag). Used for the documented seed tree:
// every stochastic stage hashes its own tag path so partial pipelines are
// reproducible in isolation.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag) {
    return mix64((base + kGolden64) ^ mix64(tag + kGolden64));
}

constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag1, std::uint64_t tag2) {
    return derive_seed(derive_seed(base, tag1), tag2);
}

constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag1, std::uint64_t tag2,
                                    std::uint64_t tag3) {
    return derive_seed(derive_seed(base, tag1, tag2), tag3);
}

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += kGolden64;
        return mix64(state_);
    }

    // Uniform double in [0, 1), 53 mantissa bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Box-Muller, cosine branch only: exactly two uniforms per draw, so the
    // stream position after n draws is 2n regardless of values.
    double next_normal(double mean = 0.0, double stddev = 1.0) {
        const double u1 = 1.0 - next_unit(); // (0, 1], keeps log finite
        const double u2 = next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        return mean + stddev * r * std::cos(2.0 * std::numbers::pi * u2);
    }

    // Uniform integer in [0, n) via 128-bit multiply-high. Bias is O(n/2^64).
    std::uint64_t next_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    // Fisher-Yates, high-to-low.
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::uint64_t state_;
};

// Tags for the seed tree (arbitrary distinct constants, fixed forever).
namespace seed_tag {
inline constexpr std::uint64_t kSynth = 0x53594e5448ull;   // dataset generation
inline constexpr std::uint64_t kSplit = 0x53504c4954ull;   // holdout splits
inline constexpr std::uint64_t kFit = 0x464954ull;         // model fitting
inline constexpr std::uint64_t kInit = 0x494e4954ull;      // weight init
inline constexpr std::uint64_t kShuffle = 0x53485546ull;   // epoch shuffles
inline constexpr std::uint64_t kTree = 0x54524545ull;      // per-tree streams
} // namespace seed_tag

} // namespace oleospec
