#include "permsim/matrix.hpp"

namespace permsim {

std::uint64_t det_mod_p(const ModMatrix& m) {
    const PrimeField& f = m.ring();
    const std::size_t n = m.dim();
    std::vector<std::uint64_t> w(m.entries().begin(), m.entries().end());
    auto e = [&](std::size_t i, std::size_t j) -> std::uint64_t& { return w[i * n + j]; };

    std::uint64_t det = f.one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && e(piv, col) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(e(piv, j), e(col, j));
            det = f.mul(det, f.modulus() - 1);
        }
        const std::uint64_t pivot = e(col, col);
        det = f.mul(det, pivot);
        const std::uint64_t pinv = f.inv(pivot);
        for (std::size_t r = col + 1; r < n; ++r) {
            const std::uint64_t factor = f.mul(e(r, col), pinv);
            if (factor == 0) continue;
            for (std::size_t j = col; j < n; ++j)
                e(r, j) = f.sub(e(r, j), f.mul(factor, e(col, j)));
        }
    }
    return det;
}

BigInt det_exact(const ExactMatrix& m) {
    const std::size_t n = m.dim();
    std::vector<BigInt> w(m.entries().begin(), m.entries().end());
    auto e = [&](std::size_t i, std::size_t j) -> BigInt& { return w[i * n + j]; };

    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (e(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && e(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = k; j < n; ++j) std::swap(e(piv, j), e(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Exact by the Desnanot-Jacobi identity: the division leaves
                // the order-(k+1) minor, an integer.
                e(i, j) = (e(i, j) * e(k, k) - e(i, k) * e(k, j)) / prev;
            }
            e(i, k) = 0;
        }
        prev = e(k, k);
    }
    return sign > 0 ? e(n - 1, n - 1) : -e(n - 1, n - 1);
}

ModMatrix reduce_mod(const ExactMatrix& m, const PrimeField& field) {
    ModMatrix out(m.dim(), field);
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) out.at(i, j) = field.reduce(m.at(i, j));
    return out;
}

ExactMatrix lift_exact(const ModMatrix& m) {
    ExactMatrix out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) out.at(i, j) = m.at(i, j);
    return out;
}

}  // namespace permsim
