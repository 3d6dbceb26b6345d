#include "permsim/detsim.hpp"

#include <stdexcept>

namespace permsim {

namespace {

void require_valid(const TestParams& params, std::size_t n) {
    if (params.trials < 1) throw std::invalid_argument("trials must be >= 1");
    const unsigned __int128 needed =
        static_cast<unsigned __int128>(n) * (static_cast<unsigned __int128>(n) + 1);
    if (needed >= params.p)
        throw std::invalid_argument("modulus too small: need p > n(n+1)");
}

void require_field(const ModMatrix& m, const TestParams& params) {
    if (m.ring().modulus() != params.p)
        throw std::invalid_argument("matrix modulus does not match params.p");
}

Verdict degenerate(Similarity kind) {
    Verdict v;
    v.kind = kind;
    v.trials_run = 0;
    v.error_bound = 1;  // empty product; the decision itself was exact
    return v;
}

ModMatrix random_matrix(std::size_t n, const PrimeField& field, Rng& rng) {
    ModMatrix x(n, field);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) x.at(i, j) = rng.uniform_below(field.modulus());
    return x;
}

}  // namespace

Rng trial_rng(std::uint64_t seed, std::uint64_t trial) { return Rng(seed, trial); }

CoefficientDraw sample_coefficients(std::size_t n, const PrimeField& field, Rng& rng) {
    CoefficientDraw draw;
    draw.shift = rng.uniform_below(field.modulus());
    draw.coeffs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) draw.coeffs.push_back(rng.uniform_below(field.modulus()));
    return draw;
}

ModMatrix randomized_f(const ModMatrix& a, const CoefficientDraw& draw) {
    if (draw.coeffs.size() != a.dim())
        throw std::invalid_argument("draw dimension does not match matrix");
    return zero_diagonal(
        horner_poly_eval<PrimeField>(add_scaled_all_ones(a, draw.shift), draw.coeffs));
}

TrialDets similarity_trial(const ModMatrix& a, const ModMatrix& b, const CoefficientDraw& draw) {
    detail::require_compatible(a, b);
    return {det_mod_p(randomized_f(a, draw)), det_mod_p(randomized_f(b, draw))};
}

Verdict permutation_similarity_test(const ModMatrix& a, const ModMatrix& b,
                                    const TestParams& params) {
    require_field(a, params);
    require_field(b, params);
    if (a.dim() != b.dim()) return degenerate(Similarity::kDistinct);

    const std::size_t n = a.dim();
    require_valid(params, n);

    // f of any 1x1 matrix is [[0]], so the randomized test is vacuous there;
    // a 1x1 pair is permutation-similar iff equal.
    if (n == 1)
        return degenerate(a.at(0, 0) == b.at(0, 0) ? Similarity::kIndistinguishable
                                                   : Similarity::kDistinct);

    Verdict v;
    for (std::uint32_t t = 0; t < params.trials; ++t) {
        Rng rng = trial_rng(params.seed, t);
        CoefficientDraw draw = sample_coefficients(n, a.ring(), rng);
        const TrialDets dets = similarity_trial(a, b, draw);
        v.per_trial_dets.push_back(dets);
        v.trials_run = t + 1;
        if (dets.det_a != dets.det_b) {
            v.kind = Similarity::kDistinct;
            v.witness = DistinctWitness{t, std::move(draw)};
            break;
        }
    }
    v.error_bound = failure_bound(n, params.p, v.trials_run);
    return v;
}

Verdict permutation_similarity_test(const ExactMatrix& a, const ExactMatrix& b,
                                    const TestParams& params) {
    const PrimeField field(params.p);
    if (a.dim() != b.dim()) return degenerate(Similarity::kDistinct);
    return permutation_similarity_test(reduce_mod(a, field), reduce_mod(b, field), params);
}

Verdict equality_test(const ModMatrix& a, const ModMatrix& b, const TestParams& params) {
    require_field(a, params);
    require_field(b, params);
    if (a.dim() != b.dim()) return degenerate(Similarity::kDistinct);

    const std::size_t n = a.dim();
    require_valid(params, n);

    Verdict v;
    for (std::uint32_t t = 0; t < params.trials; ++t) {
        Rng rng = trial_rng(params.seed, t);
        const ModMatrix x = random_matrix(n, a.ring(), rng);
        const TrialDets dets{det_mod_p(a + x), det_mod_p(b + x)};
        v.per_trial_dets.push_back(dets);
        v.trials_run = t + 1;
        if (dets.det_a != dets.det_b) {
            v.kind = Similarity::kDistinct;
            v.witness = DistinctWitness{t, std::nullopt};
            break;
        }
    }
    // det(A+X) - det(B+X) has degree <= n in the entries of X, so the true
    // per-trial miss bound is n/p; we report the pipeline-wide formula,
    // which is an upper bound of it.
    v.error_bound = failure_bound(n, params.p, v.trials_run);
    return v;
}

Verdict equality_test(const ExactMatrix& a, const ExactMatrix& b, const TestParams& params) {
    const PrimeField field(params.p);
    if (a.dim() != b.dim()) return degenerate(Similarity::kDistinct);
    return equality_test(reduce_mod(a, field), reduce_mod(b, field), params);
}

Rational failure_bound(std::size_t n, std::uint64_t p, std::uint32_t trials) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    const BigInt degree = BigInt(n) * (BigInt(n) + 1);
    if (degree >= p) throw std::domain_error("bound would be >= 1: need p > n(n+1)");
    using boost::multiprecision::pow;
    return Rational(pow(degree, trials), pow(BigInt(p), trials));
}

}  // namespace permsim
