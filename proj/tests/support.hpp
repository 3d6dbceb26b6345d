#pragma once

// Shared helpers for the test suites. The oracles here are deliberately
// written along different lines than the library (Leibniz expansion instead
// of elimination, repeated powering instead of Horner) so they can vouch for
// it.

#include <algorithm>
#include <numeric>
#include <vector>

#include "permsim/detsim.hpp"
#include "permsim/graphio.hpp"
#include "permsim/matrix.hpp"
#include "permsim/permutation.hpp"
#include "permsim/rng.hpp"

namespace permsim::testing {

// Determinant as the signed sum over all n! permutations. Exponential; fine
// for the n <= 8 cases it certifies.
inline BigInt leibniz_det(const ExactMatrix& m) {
    const std::size_t n = m.dim();
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    BigInt det = 0;
    do {
        // parity by counting inversions
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        BigInt term = (inversions % 2 == 0) ? 1 : -1;
        for (std::size_t i = 0; i < n; ++i) term *= m.at(i, perm[i]);
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

// sum c_i M^i by building M^i one product at a time.
template <class Ring>
SquareMatrix<Ring> naive_poly_eval(const SquareMatrix<Ring>& m,
                                   const std::vector<typename Ring::Elem>& coeffs) {
    const std::size_t n = m.dim();
    SquareMatrix<Ring> acc(n, m.ring());
    SquareMatrix<Ring> power = SquareMatrix<Ring>::identity(n, m.ring());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        power = power * m;  // M^(i+1)
        acc = acc + scalar_mul<Ring>(coeffs[i], power);
    }
    return acc;
}

inline ModMatrix random_mod_matrix(std::size_t n, const PrimeField& field, Rng& rng) {
    ModMatrix m(n, field);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rng.uniform_below(field.modulus());
    return m;
}

// Entries uniform in [lo, hi].
inline ExactMatrix random_exact_matrix(std::size_t n, long lo, long hi, Rng& rng) {
    ExactMatrix m(n);
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = lo + static_cast<long>(rng.uniform_below(span));
    return m;
}

inline Graph random_graph(std::size_t n, Rng& rng) {
    Graph g(n);
    for (std::size_t k = 0; k < g.pair_count(); ++k) g.set_pair_bit(k, rng.uniform_below(2));
    return g;
}

inline ExactMatrix matrix_from(std::vector<std::vector<long>> rows) {
    ExactMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

inline ModMatrix mod_matrix_from(std::vector<std::vector<long>> rows, const PrimeField& field) {
    ModMatrix m(rows.size(), field);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) m.at(i, j) = field.reduce(rows[i][j]);
    return m;
}

inline Graph path_graph(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i + 1 < n; ++i) g.set_edge(i, i + 1);
    return g;
}

inline Graph cycle_graph(std::size_t n) {
    Graph g = path_graph(n);
    g.set_edge(n - 1, 0);
    return g;
}

// K_{1,n-1} with the hub at vertex 0.
inline Graph star_graph(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 1; i < n; ++i) g.set_edge(0, i);
    return g;
}

inline Graph complete_graph(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g.set_edge(i, j);
    return g;
}

// C_4 plus one isolated vertex: the classic 5-vertex cospectral mate of the
// star K_{1,4}.
inline Graph c4_plus_isolated() {
    Graph g(5);
    g.set_edge(0, 1);
    g.set_edge(1, 2);
    g.set_edge(2, 3);
    g.set_edge(3, 0);
    return g;
}

}  // namespace permsim::testing
