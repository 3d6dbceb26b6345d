#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "permsim/detsim.hpp"
#include "permsim/graphio.hpp"
#include "permsim/matrix.hpp"

namespace permsim {

enum class PairClass { kDistinguished, kStronglyCoDetCandidate };

// What a stress run observed. A candidate classification is evidence, not
// proof: it only says the pair survived this budget of independent draws.
struct StressOutcome {
    std::uint32_t attempted = 0;
    std::uint32_t distinguished = 0;
    PairClass classification = PairClass::kDistinguished;
};

// Non-isomorphic pair with equal exact adjacency determinants, by index
// into the input class list.
struct CoDetPair {
    std::size_t index_a = 0;
    std::size_t index_b = 0;
    BigInt det_a;
    BigInt det_b;
};

struct PairRecord {
    std::size_t n = 0;
    std::string id_a;  // graph6
    std::string id_b;
    BigInt det_a;
    BigInt det_b;
    bool oracle_similar = false;  // recorded pairs are always non-similar
    StressOutcome stress;
    // Re-stress after adding 1 to the (0,0) entry of both matrices; present
    // only for candidate pairs.
    std::optional<StressOutcome> perturbed;
};

struct HuntReport {
    std::uint64_t p = 0;
    std::uint64_t seed = 0;
    std::uint32_t budget = 0;
    std::size_t graphs = 0;
    std::size_t pairs_examined = 0;
    std::vector<PairRecord> records;  // ordered by (n, id_a, id_b)

    std::size_t candidate_count() const;

    // Line-oriented text: "# meta" / "# columns" headers, one tab-separated
    // record per line, "# perturbed" lines for candidates, "# summary" last.
    // Byte-stable for a given corpus, p, seed and budget.
    void write(std::ostream& os) const;
    std::string summary() const;
};

// All unordered pairs of non-isomorphic graphs whose exact adjacency
// determinants are equal. Inputs must share one vertex count and should be
// isomorphism-class representatives; isomorphic pairs are filtered out via
// the oracle regardless. Equality is checked on exact integer determinants:
// co-det is an exact notion, not a mod-p one.
std::vector<CoDetPair> find_codet_pairs(const std::vector<Graph>& graphs,
                                        bool allow_large = false);

// Runs `budget` independent draws against a pair the oracle already ruled
// non-similar, counting how many distinguished it. No short-circuit: the
// count itself is the observation.
StressOutcome stress_pair(const ExactMatrix& a, const ExactMatrix& b, std::uint32_t budget,
                          const TestParams& params);

// Copy of A with value added to A[index][index]. The suggested escape for
// pairs the randomized test cannot split: break the symmetry at one matched
// diagonal position in both matrices, then re-test.
template <class Ring>
SquareMatrix<Ring> diagonal_perturbation(const SquareMatrix<Ring>& a, std::size_t index,
                                         const typename Ring::Elem& value) {
    if (index >= a.dim()) throw std::out_of_range("diagonal index out of range");
    if (value == a.ring().zero())
        throw std::invalid_argument("perturbation value must be nonzero");
    SquareMatrix<Ring> out = a;
    out.at(index, index) = a.ring().add(out.at(index, index), value);
    return out;
}

// Full pipeline over one or more vertex-count groups: split the corpus by n,
// reduce each group to isomorphism classes, catalogue co-det pairs, stress
// each, and re-stress candidates after a matched diagonal perturbation.
HuntReport run_hunt(const std::vector<Graph>& corpus, const TestParams& params,
                    std::uint32_t budget, bool allow_large = false);

}  // namespace permsim
