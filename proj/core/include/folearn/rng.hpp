#pragma once

#include <cstdint>

namespace folearn {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Deterministic generator with counter-based splitting: child streams are
/// derived from (seed, counter) so parallel consumers see independent,
/// reproducible streams. Output is platform-independent (no std
/// distributions involved).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(splitmix64(seed ^ 0xd6e8feb86659fd93ULL)) {}

    std::uint64_t next_u64() {
        state_ = splitmix64(state_);
        return state_;
    }

    /// Uniform in [0, n), n >= 1. Unbiased via rejection; deterministic.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t threshold = -n % n;  // 2^64 mod n
        for (;;) {
            std::uint64_t v = next_u64();
            if (v >= threshold) return v % n;
        }
    }

    /// Uniform double in [0,1) with 53-bit resolution.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_double() < p; }

    /// Independent child stream number `idx` of this generator's seed.
    static Rng split(std::uint64_t seed, std::uint64_t idx) {
        return Rng(splitmix64(seed + 0x9e3779b97f4a7c15ULL * (idx + 1)));
    }

private:
    std::uint64_t state_;
};

}  // namespace folearn
