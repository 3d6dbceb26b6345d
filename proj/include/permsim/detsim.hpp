#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "permsim/bigint.hpp"
#include "permsim/matrix.hpp"
#include "permsim/rng.hpp"

namespace permsim {

// Full reproducibility context for a randomized run. trials must be >= 1;
// p must be prime and, once a dimension n is bound, satisfy p > n(n+1) or
// the Schwartz-Zippel bound below is vacuous. Both are checked when a test
// runs.
struct TestParams {
    std::uint64_t p = kDefaultPrime;
    std::uint32_t trials = 3;
    std::uint64_t seed = 0;
};

// One trial's randomness: the shift c and polynomial coefficients c_1..c_n,
// all uniform in [0, p).
struct CoefficientDraw {
    std::uint64_t shift = 0;
    std::vector<std::uint64_t> coeffs;
};

enum class Similarity { kDistinct, kIndistinguishable };

struct TrialDets {
    std::uint64_t det_a = 0;
    std::uint64_t det_b = 0;
};

// Trial that produced a Distinct verdict. draw is present for the
// f-construction test; the equality test's random matrix X is not stored
// (it is reproducible from seed and trial index).
struct DistinctWitness {
    std::uint32_t trial = 0;
    std::optional<CoefficientDraw> draw;
};

// Outcome of a randomized run. Distinct is a proof of non-similarity (the
// conjugation identity det f(A) = det f(PAP^t) holds over any commutative
// ring, so similar inputs can never produce unequal determinants).
// Indistinguishable means: permutation-similar, or a strongly-co-det-like
// pair, or a missed draw with probability at most error_bound.
//
// error_bound is always (n(n+1)/p)^trials_run exactly; on the degenerate
// paths that run zero randomized trials (dimension mismatch, n = 1) it is
// the vacuous empty product 1, even though those decisions are exact.
struct Verdict {
    Similarity kind = Similarity::kIndistinguishable;
    std::optional<DistinctWitness> witness;
    std::uint32_t trials_run = 0;
    std::vector<TrialDets> per_trial_dets;
    Rational error_bound = 1;

    bool distinct() const { return kind == Similarity::kDistinct; }
};

// Derived per-trial stream: draws for trial i depend only on (seed, i).
Rng trial_rng(std::uint64_t seed, std::uint64_t trial);

// Draw c then c_1..c_n from the given stream.
CoefficientDraw sample_coefficients(std::size_t n, const PrimeField& field, Rng& rng);

// f(A) = q(A+cJ) - diag(q(A+cJ)) with q(x) = sum c_i x^i. The diagonal of
// the result is identically zero.
ModMatrix randomized_f(const ModMatrix& a, const CoefficientDraw& draw);

// (det f(A), det f(B)) under one shared draw. Using the same draw on both
// sides is what makes equality a conjugation invariant; the API takes a
// single draw so the discipline cannot be violated.
TrialDets similarity_trial(const ModMatrix& a, const ModMatrix& b, const CoefficientDraw& draw);

// The decision pipeline: dimension precheck, n = 1 direct comparison, then
// up to params.trials independent draws with short-circuit on the first
// unequal determinant pair.
Verdict permutation_similarity_test(const ModMatrix& a, const ModMatrix& b,
                                    const TestParams& params);
Verdict permutation_similarity_test(const ExactMatrix& a, const ExactMatrix& b,
                                    const TestParams& params);

// Warm-up equality tester: per trial draw a full random matrix X and compare
// det(A+X) with det(B+X). Kept for completeness; matrix equality is of
// course directly checkable.
Verdict equality_test(const ModMatrix& a, const ModMatrix& b, const TestParams& params);
Verdict equality_test(const ExactMatrix& a, const ExactMatrix& b, const TestParams& params);

// (n(n+1)/p)^trials as an exact rational.
//
// Degree bound behind the numerator: every entry of c_i (A+cJ)^i has total
// degree <= i+1 <= n+1 in the variables (c, c_1..c_n), so each entry of
// f(A) has degree <= n+1, and a determinant multiplies n entries per term:
// deg G <= n(n+1) for G = det f(A) - det f(B). Schwartz-Zippel then bounds
// one trial's miss probability by n(n+1)/p; independent trials multiply.
Rational failure_bound(std::size_t n, std::uint64_t p, std::uint32_t trials);

}  // namespace permsim
