#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "permsim/matrix.hpp"
#include "permsim/rng.hpp"

namespace permsim {

// A bijection on {0..n-1}; images[i] is where index i goes.
class Permutation {
public:
    explicit Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size(), false);
        for (std::uint32_t v : images_) {
            if (v >= images_.size() || seen[v])
                throw std::invalid_argument("permutation images must be a bijection");
            seen[v] = true;
        }
    }

    static Permutation identity(std::size_t n) {
        std::vector<std::uint32_t> im(n);
        std::iota(im.begin(), im.end(), 0);
        return Permutation(std::move(im));
    }

    std::size_t size() const { return images_.size(); }
    std::uint32_t operator()(std::size_t i) const { return images_[i]; }
    const std::vector<std::uint32_t>& images() const { return images_; }

    Permutation inverse() const {
        std::vector<std::uint32_t> inv(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i)
            inv[images_[i]] = static_cast<std::uint32_t>(i);
        return Permutation(std::move(inv));
    }

    // One-line image notation, e.g. "0 2 1".
    std::string to_string() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (i) os << ' ';
            os << images_[i];
        }
        return os.str();
    }

    bool operator==(const Permutation&) const = default;

private:
    std::vector<std::uint32_t> images_;
};

// PBP^t by index relabeling: out[P(i)][P(j)] = B[i][j]. No products needed.
template <class Ring>
SquareMatrix<Ring> apply_permutation(const Permutation& p, const SquareMatrix<Ring>& b) {
    const std::size_t n = b.dim();
    if (p.size() != n) throw std::invalid_argument("permutation size mismatch");
    SquareMatrix<Ring> out(n, b.ring());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(p(i), p(j)) = b.at(i, j);
    return out;
}

// Scanning all n! permutations past this point stops being a desk-scale
// operation; callers must opt in explicitly.
inline constexpr std::size_t kBruteForceGuard = 10;

// Exhaustive search for P with A = PBP^t. Scans permutations in
// lexicographic order and returns the first (hence smallest) witness.
// Deliberately naive: this is the ground truth the randomized test is
// judged against, so it must be obviously correct.
template <class Ring>
std::optional<Permutation> brute_force_similar(const SquareMatrix<Ring>& a,
                                               const SquareMatrix<Ring>& b,
                                               bool allow_large = false) {
    const std::size_t n = a.dim();
    if (b.dim() != n) throw std::invalid_argument("matrix dimension mismatch");
    if (!(a.ring() == b.ring())) throw std::invalid_argument("matrix ring mismatch");
    if (n > kBruteForceGuard && !allow_large)
        throw std::invalid_argument("brute-force search above n=10 requires the override flag");

    std::vector<std::uint32_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        bool match = true;
        for (std::size_t i = 0; i < n && match; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (a.at(p[i], p[j]) != b.at(i, j)) {
                    match = false;
                    break;
                }
        if (match) return Permutation(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return std::nullopt;
}

// (PAP^t, P) for a uniformly random P (Fisher-Yates).
template <class Ring>
std::pair<SquareMatrix<Ring>, Permutation> random_conjugate(const SquareMatrix<Ring>& a, Rng& rng) {
    const std::size_t n = a.dim();
    std::vector<std::uint32_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (std::size_t i = n - 1; i > 0; --i)
        std::swap(p[i], p[rng.uniform_below(i + 1)]);
    Permutation perm(std::move(p));
    return {apply_permutation(perm, a), perm};
}

// Executable witness of two conjugation identities:
//   diag(PAP^t) == P diag(A) P^t   and   PJP^t == J.
// Always true; exists so the identities are pinned by tests rather than
// assumed.
template <class Ring>
bool check_diag_conjugation_identity(const SquareMatrix<Ring>& a, const Permutation& p) {
    if (p.size() != a.dim()) throw std::invalid_argument("permutation size mismatch");
    const SquareMatrix<Ring> conj = apply_permutation(p, a);
    if (!(diagonal_part(conj) == apply_permutation(p, diagonal_part(a)))) return false;
    const SquareMatrix<Ring> j = all_ones(a.dim(), a.ring());
    return apply_permutation(p, j) == j;
}

}  // namespace permsim
