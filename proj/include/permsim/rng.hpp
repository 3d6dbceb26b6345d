#pragma once

#include <cstdint>
#include <random>

namespace permsim {

// splitmix64 finalizer; used to turn (seed, stream) pairs into engine seeds.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic random stream. Stream k of a given seed never depends on how
// much any other stream consumed, so per-trial draws are reproducible under
// any scheduling. mt19937_64 output is fixed by the standard and the
// uniform draw below is hand-rolled, so pinned fixture values hold on every
// platform (std::uniform_int_distribution is implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(mix64(seed)) {}

    Rng(std::uint64_t seed, std::uint64_t stream)
        : gen_(mix64(mix64(seed) ^ mix64(stream ^ 0xda3e39cb94b95bdbULL))) {}

    std::uint64_t next() { return gen_(); }

    // Unbiased draw from [0, bound); bound must be >= 1.
    std::uint64_t uniform_below(std::uint64_t bound) {
        // Reject the top 2^64 mod bound values; what remains splits evenly.
        const std::uint64_t lo = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= lo) return r % bound;
        }
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace permsim
