#pragma once

#include <cstdint>

namespace entroute {

// Stateless splitmix64 finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Deterministic uniform generator (splitmix64 stream). The distribution
// mappings are hand rolled so that streams are identical across standard
// library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(mix64(seed ^ 0x9E3779B97F4A7C15ull)) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        return mix64(z);
    }

    // uniform in [0, 1)
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    bool bernoulli(double p) { return next_unit() < p; }

    // uniform integer in [0, n), n > 0
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

private:
    std::uint64_t state_;
};

// Seed for the index-th substream of a master seed. Used for generation
// retries and for per-trial counter-mode draws in the Monte Carlo engine:
// substreams are independent of the order in which they are consumed.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(mix64(seed ^ 0x9E3779B97F4A7C15ull) ^ (index * 0xBF58476D1CE4E5B9ull + 0x94D049BB133111EBull));
}

}  // namespace entroute
