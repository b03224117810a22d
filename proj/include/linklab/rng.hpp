/**
 * @file rng.hpp
 * @brief Splittable deterministic generator; every randomized suite draws
 *        from a single 64-bit seed through this, so reports are
 *        byte-identical across runs and platforms.
 */
#ifndef LINKLAB_RNG_HPP
#define LINKLAB_RNG_HPP

#include <cstdint>

namespace linklab {

// splitmix64 (Steele/Lea/Vigna); stable output is part of the
// determinism contract, which rules out std:: distributions.
class SplitMix64 {
 public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound). bound must be > 0.
    std::uint64_t uniform(std::uint64_t bound) {
        // 128-bit multiply-shift; bias is below 2^-64 and identical everywhere
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    /// Uniform value in [lo, hi] inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        uniform(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Independent child stream; advances this generator once.
    SplitMix64 split() { return SplitMix64(next() ^ 0x632be59bd9b4e019ULL); }

 private:
    std::uint64_t state_;
};

}  // namespace linklab

#endif
