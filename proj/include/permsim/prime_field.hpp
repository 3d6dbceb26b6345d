#pragma once

#include <cstdint>

#include "permsim/bigint.hpp"

namespace permsim {

// 2^61 - 1, Mersenne. Large enough that n(n+1)/p is negligible at any
// dimension this tool will ever see.
inline constexpr std::uint64_t kDefaultPrime = (std::uint64_t{1} << 61) - 1;

// Deterministic Miller-Rabin, valid for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

// Arithmetic context for Z_p. Elements are plain uint64_t in [0, p).
// p must be prime and below 2^62 so that dot products can accumulate 16+
// unreduced summands in 128 bits between reductions.
class PrimeField {
public:
    using Elem = std::uint64_t;

    explicit PrimeField(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    Elem add(Elem a, Elem b) const {
        const std::uint64_t s = a + b;  // p < 2^62, no wrap
        return s >= p_ ? s - p_ : s;
    }

    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }

    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }

    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>(static_cast<unsigned __int128>(a) * b % p_);
    }

    Elem pow(Elem base, std::uint64_t e) const;

    // Multiplicative inverse; a must be nonzero. Fermat: a^(p-2).
    Elem inv(Elem a) const;

    Elem reduce(std::int64_t v) const;
    Elem reduce(const BigInt& v) const;

    bool operator==(const PrimeField& other) const { return p_ == other.p_; }

private:
    std::uint64_t p_;
};

}  // namespace permsim
