#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace seishield {

// SplitMix64 finalizer. Used to derive decorrelated child seeds from a root
// seed plus a stream index, so per-sample generation is independent of the
// order (or thread) in which samples are produced.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return mix_seed(mix_seed(seed, a), b);
}

// Thin deterministic wrapper around mt19937_64. All randomness in the toolkit
// flows through this class; a given seed always yields the same stream.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in [0, 1).
    double uniform() {
        return std::uniform_real_distribution<double>(0.0, 1.0)(eng_);
    }

    // N(mean, std^2); std == 0 returns the mean exactly.
    double gaussian(double mean, double std) {
        if (std < 0.0) throw std::invalid_argument("Rng::gaussian: negative std");
        if (std == 0.0) return mean;
        return std::normal_distribution<double>(mean, std)(eng_);
    }

    // Uniform integer in [lo, hi], inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        if (lo > hi) throw std::invalid_argument("Rng::uniform_int: empty range");
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(eng_);
    }

    bool coin() { return uniform_int(0, 1) == 1; }

    // Fisher-Yates shuffle.
    template <typename Vec>
    void shuffle(Vec& v) {
        if (v.empty()) return;
        for (std::size_t i = v.size() - 1; i > 0; --i) {
            auto j = static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(i)));
            std::swap(v[i], v[j]);
        }
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace seishield
