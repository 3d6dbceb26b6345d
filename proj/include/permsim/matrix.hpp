#pragma once

#include <bit>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "permsim/bigint.hpp"
#include "permsim/prime_field.hpp"

namespace permsim {

// Ring of arbitrary-precision integers. Stateless; it exists so SquareMatrix
// can be generic over the entry arithmetic.
struct IntegerRing {
    using Elem = BigInt;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }

    bool operator==(const IntegerRing&) const { return true; }
};

// Dense square matrix over an exact ring, row-major. Immutable by
// convention once built: every operation returns a fresh value, so shared
// matrices are safe to read from any number of threads.
template <class Ring>
class SquareMatrix {
public:
    using Elem = typename Ring::Elem;

    SquareMatrix(std::size_t n, Ring ring) : n_(n), ring_(std::move(ring)) {
        if (n == 0) throw std::invalid_argument("matrix dimension must be >= 1");
        a_.assign(n * n, ring_.zero());
    }

    explicit SquareMatrix(std::size_t n)
        requires std::default_initializable<Ring>
        : SquareMatrix(n, Ring{}) {}

    static SquareMatrix identity(std::size_t n, Ring ring) {
        SquareMatrix m(n, std::move(ring));
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = m.ring_.one();
        return m;
    }

    static SquareMatrix identity(std::size_t n)
        requires std::default_initializable<Ring>
    {
        return identity(n, Ring{});
    }

    std::size_t dim() const { return n_; }
    const Ring& ring() const { return ring_; }

    Elem& at(std::size_t i, std::size_t j) {
        if (i >= n_ || j >= n_) throw std::out_of_range("matrix index");
        return a_[i * n_ + j];
    }

    const Elem& at(std::size_t i, std::size_t j) const {
        if (i >= n_ || j >= n_) throw std::out_of_range("matrix index");
        return a_[i * n_ + j];
    }

    std::span<const Elem> row(std::size_t i) const { return {a_.data() + i * n_, n_}; }
    std::span<Elem> row(std::size_t i) { return {a_.data() + i * n_, n_}; }

    std::span<const Elem> entries() const { return a_; }

    bool operator==(const SquareMatrix& other) const {
        return n_ == other.n_ && ring_ == other.ring_ && a_ == other.a_;
    }

private:
    std::size_t n_;
    Ring ring_;
    std::vector<Elem> a_;
};

using ModMatrix = SquareMatrix<PrimeField>;
using ExactMatrix = SquareMatrix<IntegerRing>;

namespace detail {

template <class Ring>
void require_compatible(const SquareMatrix<Ring>& a, const SquareMatrix<Ring>& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
    if (!(a.ring() == b.ring())) throw std::invalid_argument("matrix ring mismatch");
}

// Z_p product with lazy reduction: row accumulators hold raw 128-bit sums of
// uint64 products and are reduced once per chunk. Chunk size is chosen so a
// chunk of (p-1)^2 summands cannot overflow 128 bits.
inline void mul_mod_into(const ModMatrix& a, const ModMatrix& b, ModMatrix& c) {
    using u128 = unsigned __int128;
    const std::size_t n = a.dim();
    const std::uint64_t p = a.ring().modulus();
    const int headroom = 128 - 2 * std::bit_width(p - 1);
    const std::size_t chunk =
        headroom >= 20 ? (std::size_t{1} << 20) : (std::size_t{1} << headroom);

    std::vector<u128> acc(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(acc.begin(), acc.end(), u128{0});
        std::size_t k = 0;
        while (k < n) {
            const std::size_t kend = std::min(n, k + chunk);
            for (; k < kend; ++k) {
                const std::uint64_t aik = a.row(i)[k];
                if (aik == 0) continue;
                const std::span<const std::uint64_t> brow = b.row(k);
                for (std::size_t j = 0; j < n; ++j) acc[j] += static_cast<u128>(aik) * brow[j];
            }
            for (std::size_t j = 0; j < n; ++j) acc[j] %= p;
        }
        std::span<std::uint64_t> crow = c.row(i);
        for (std::size_t j = 0; j < n; ++j) crow[j] = static_cast<std::uint64_t>(acc[j]);
    }
}

}  // namespace detail

template <class Ring>
SquareMatrix<Ring> operator+(const SquareMatrix<Ring>& a, const SquareMatrix<Ring>& b) {
    detail::require_compatible(a, b);
    const std::size_t n = a.dim();
    SquareMatrix<Ring> c(n, a.ring());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c.at(i, j) = a.ring().add(a.at(i, j), b.at(i, j));
    return c;
}

template <class Ring>
SquareMatrix<Ring> operator-(const SquareMatrix<Ring>& a, const SquareMatrix<Ring>& b) {
    detail::require_compatible(a, b);
    const std::size_t n = a.dim();
    SquareMatrix<Ring> c(n, a.ring());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c.at(i, j) = a.ring().sub(a.at(i, j), b.at(i, j));
    return c;
}

// Classical cubic product. Fast multiplication is out of scope here: trial
// cost is dominated by correctness-sensitive exact arithmetic, not flops.
template <class Ring>
SquareMatrix<Ring> operator*(const SquareMatrix<Ring>& a, const SquareMatrix<Ring>& b) {
    detail::require_compatible(a, b);
    const std::size_t n = a.dim();
    SquareMatrix<Ring> c(n, a.ring());
    if constexpr (std::is_same_v<Ring, PrimeField>) {
        detail::mul_mod_into(a, b, c);
    } else {
        const Ring& ring = a.ring();
        const auto zero = ring.zero();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                const auto& aik = a.at(i, k);
                if (aik == zero) continue;
                for (std::size_t j = 0; j < n; ++j)
                    c.at(i, j) = ring.add(c.at(i, j), ring.mul(aik, b.at(k, j)));
            }
        }
    }
    return c;
}

template <class Ring>
SquareMatrix<Ring> scalar_mul(const typename Ring::Elem& s, const SquareMatrix<Ring>& m) {
    const std::size_t n = m.dim();
    SquareMatrix<Ring> c(n, m.ring());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c.at(i, j) = m.ring().mul(s, m.at(i, j));
    return c;
}

// A + cJ, J the all-ones matrix.
template <class Ring>
SquareMatrix<Ring> add_scaled_all_ones(const SquareMatrix<Ring>& m, const typename Ring::Elem& c) {
    const std::size_t n = m.dim();
    SquareMatrix<Ring> out(n, m.ring());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = m.ring().add(m.at(i, j), c);
    return out;
}

template <class Ring>
SquareMatrix<Ring> all_ones(std::size_t n, Ring ring) {
    SquareMatrix<Ring> j(n, std::move(ring));
    return add_scaled_all_ones(j, j.ring().one());
}

// M with its diagonal replaced by zeros: M - diag(M).
template <class Ring>
SquareMatrix<Ring> zero_diagonal(const SquareMatrix<Ring>& m) {
    SquareMatrix<Ring> out = m;
    for (std::size_t i = 0; i < m.dim(); ++i) out.at(i, i) = m.ring().zero();
    return out;
}

// diag(M): the diagonal of M, zeros elsewhere.
template <class Ring>
SquareMatrix<Ring> diagonal_part(const SquareMatrix<Ring>& m) {
    SquareMatrix<Ring> out(m.dim(), m.ring());
    for (std::size_t i = 0; i < m.dim(); ++i) out.at(i, i) = m.at(i, i);
    return out;
}

// q(M) = sum_{i=1..n} c_i M^i for coeffs (c_1 .. c_n); no constant term.
// Horner: (((c_n M + c_{n-1} I) M + c_{n-2} I) M + ... + c_1 I) M,
// i.e. n-1 matrix products after the initial scalar scaling.
template <class Ring>
SquareMatrix<Ring> horner_poly_eval(const SquareMatrix<Ring>& m,
                                    std::span<const typename Ring::Elem> coeffs) {
    const std::size_t n = m.dim();
    if (coeffs.size() != n)
        throw std::invalid_argument("coefficient count must equal matrix dimension");
    SquareMatrix<Ring> r = scalar_mul<Ring>(coeffs[n - 1], m);
    for (std::size_t i = n - 1; i >= 1; --i) {
        for (std::size_t d = 0; d < n; ++d) r.at(d, d) = m.ring().add(r.at(d, d), coeffs[i - 1]);
        r = r * m;
    }
    return r;
}

// Determinant over Z_p by Gaussian elimination. Pivot: first nonzero entry
// in the column (a field has no conditioning concerns); each row swap
// multiplies the result by p-1; a pivotless column means singular, det 0.
std::uint64_t det_mod_p(const ModMatrix& m);

// Exact integer determinant by Bareiss fraction-free elimination; every
// intermediate quotient is exact and intermediates stay polynomially sized.
BigInt det_exact(const ExactMatrix& m);

ModMatrix reduce_mod(const ExactMatrix& m, const PrimeField& field);

// Entries of a Z_p matrix as plain integers in [0, p).
ExactMatrix lift_exact(const ModMatrix& m);

}  // namespace permsim
