#pragma once

#include <cstdint>

namespace mixsim {

// splitmix64 finalizer (Steele, Lea & Flood, 2014). Used for seed expansion
// and stream derivation; never as the simulation generator itself.
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic sub-stream seed from a master seed and up to three indices.
// Each slot is offset by a distinct constant so derive_seed(m, a, b) and
// derive_seed(m, b, a) land in unrelated streams.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                    std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t s = splitmix64_mix(master);
    s = splitmix64_mix(s ^ (a + 0x9e3779b97f4a7c15ULL));
    s = splitmix64_mix(s ^ (b + 0x6a09e667f3bcc909ULL));
    s = splitmix64_mix(s ^ (c + 0x3c6ef372fe94f82bULL));
    return s;
}

// xoshiro256** (Blackman & Vigna, 2018), seeded through a splitmix64 stream
// as its authors recommend. Fully portable: identical output on every
// platform for a given seed, unlike std:: distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) {
            word = splitmix64_mix(sm);
            sm += 0x9e3779b97f4a7c15ULL;
        }
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1) with 53 random mantissa bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_double() < p; }

    // Uniform in [0, bound) without modulo bias (rejection sampling).
    // bound must be nonzero.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
};

} // namespace mixsim
