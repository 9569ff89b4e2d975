#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sens/distance.hpp"

namespace sens {

/*
 * Portable random source: std::mt19937_64 (its output sequence is fixed by
 * the C++ standard) with integer ranges drawn by rejection sampling and
 * doubles built from the top 53 bits. Unlike the std distributions, the same
 * seed gives the same draws with every standard library.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        if (lo > hi) {
            throw Error("empty range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
        }
        const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
        if (span == ~std::uint64_t{0}) {
            return static_cast<std::int64_t>(next());
        }
        const std::uint64_t range = span + 1;
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
        std::uint64_t x = 0;
        do {
            x = next();
        } while (x >= limit);
        return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % range);
    }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 1)); }

    /// Uniform in [0, 1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[index(i)]);
        }
    }

private:
    std::mt19937_64 eng_;
};

/// SplitMix64 step; derives independent per-repetition seeds from one seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace sens
