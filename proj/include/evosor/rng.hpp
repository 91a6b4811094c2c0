#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace evosor {

/// Deterministic random stream. Wraps std::mt19937_64 but maps engine words
/// to doubles itself, so every draw consumes a fixed, countable number of
/// engine words regardless of the standard library:
///   uniform01 / uniform / bounded : 1 word
///   gaussian                      : 2 words (Box-Muller, no cached spare)
/// That fixed accounting is what makes "this operation consumed exactly k
/// draws" testable, and it keeps seeded histories identical across platforms.
class Rng {
public:
    explicit Rng(uint64_t seed) : Rng(seed, 0) {}

    /// Independent substream: (seed, stream) pairs give unrelated sequences.
    Rng(uint64_t seed, uint64_t stream) {
        std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32),
                          static_cast<uint32_t>(stream), static_cast<uint32_t>(stream >> 32)};
        engine_.seed(seq);
    }

    uint64_t next_u64() {
        ++words_;
        return engine_();
    }

    /// Uniform in [0,1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo,hi); in practice indistinguishable from the open interval.
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Gaussian via Box-Muller. Always consumes two words and discards the
    /// paired sample rather than caching it.
    double gaussian(double mean, double stddev) {
        double u1 = 1.0 - uniform01();  // (0,1], keeps log finite
        double u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        return mean + stddev * r * std::cos(6.283185307179586476925286766559 * u2);
    }

    /// Uniform integer in [0,n), n >= 1. Multiply-shift; bias is O(n / 2^64).
    uint32_t bounded(uint32_t n) {
        return static_cast<uint32_t>((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    uint64_t words_consumed() const { return words_; }

    bool operator==(const Rng&) const = default;

private:
    std::mt19937_64 engine_;
    uint64_t words_ = 0;
};

/// Fisher-Yates shuffle driven by the stream above (std::shuffle's word
/// consumption is implementation-defined, which would break seeded replay).
template <typename T>
void shuffle(std::vector<T>& values, Rng& rng) {
    for (size_t i = values.size(); i > 1; --i) {
        size_t j = rng.bounded(static_cast<uint32_t>(i));
        std::swap(values[i - 1], values[j]);
    }
}

}  // namespace evosor
