#include "permsim/hunter.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "permsim/permutation.hpp"

namespace permsim {

namespace {

const char* class_name(PairClass c) {
    return c == PairClass::kDistinguished ? "distinguished" : "strongly-co-det-candidate";
}

}  // namespace

std::size_t HuntReport::candidate_count() const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [](const PairRecord& r) {
            return r.stress.classification == PairClass::kStronglyCoDetCandidate;
        }));
}

std::string HuntReport::summary() const {
    std::ostringstream os;
    os << "graphs=" << graphs << "\tpairs_examined=" << pairs_examined
       << "\tcodet_pairs=" << records.size() << "\tcandidates=" << candidate_count();
    return os.str();
}

void HuntReport::write(std::ostream& os) const {
    os << "# hunt report\n";
    os << "# meta\tp=" << p << "\tseed=" << seed << "\tbudget=" << budget << '\n';
    os << "# columns\tn\tgraph_a\tgraph_b\tdet_a\tdet_b\toracle\tattempted\tdistinguished"
          "\tclassification\n";
    for (const PairRecord& r : records) {
        os << r.n << '\t' << r.id_a << '\t' << r.id_b << '\t' << r.det_a << '\t' << r.det_b
           << '\t' << (r.oracle_similar ? "similar" : "non-similar") << '\t'
           << r.stress.attempted << '\t' << r.stress.distinguished << '\t'
           << class_name(r.stress.classification) << '\n';
    }
    for (const PairRecord& r : records) {
        if (!r.perturbed) continue;
        os << "# perturbed\t" << r.n << '\t' << r.id_a << '\t' << r.id_b << "\tattempted="
           << r.perturbed->attempted << "\tdistinguished=" << r.perturbed->distinguished << '\t'
           << class_name(r.perturbed->classification) << '\n';
    }
    os << "# summary\t" << summary() << '\n';
}

std::vector<CoDetPair> find_codet_pairs(const std::vector<Graph>& graphs, bool allow_large) {
    if (graphs.empty()) return {};
    const std::size_t n = graphs.front().vertex_count();
    for (const Graph& g : graphs)
        if (g.vertex_count() != n)
            throw std::invalid_argument("co-det search needs graphs of one vertex count");

    std::vector<ExactMatrix> adj;
    std::vector<BigInt> dets;
    adj.reserve(graphs.size());
    for (const Graph& g : graphs) {
        adj.push_back(adjacency_matrix(g));
        dets.push_back(det_exact(adj.back()));
    }

    std::vector<CoDetPair> out;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        for (std::size_t j = i + 1; j < graphs.size(); ++j) {
            if (dets[i] != dets[j]) continue;
            if (brute_force_similar(adj[i], adj[j], allow_large).has_value()) continue;
            out.push_back({i, j, dets[i], dets[j]});
        }
    }
    return out;
}

StressOutcome stress_pair(const ExactMatrix& a, const ExactMatrix& b, std::uint32_t budget,
                          const TestParams& params) {
    if (budget < 1) throw std::invalid_argument("stress budget must be >= 1");
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
    const std::size_t n = a.dim();
    const unsigned __int128 needed =
        static_cast<unsigned __int128>(n) * (static_cast<unsigned __int128>(n) + 1);
    if (needed >= params.p) throw std::invalid_argument("modulus too small: need p > n(n+1)");

    const PrimeField field(params.p);
    const ModMatrix ma = reduce_mod(a, field);
    const ModMatrix mb = reduce_mod(b, field);

    StressOutcome out;
    out.attempted = budget;
    for (std::uint32_t t = 0; t < budget; ++t) {
        Rng rng = trial_rng(params.seed, t);
        const CoefficientDraw draw = sample_coefficients(n, field, rng);
        const TrialDets dets = similarity_trial(ma, mb, draw);
        if (dets.det_a != dets.det_b) ++out.distinguished;
    }
    out.classification = out.distinguished == 0 ? PairClass::kStronglyCoDetCandidate
                                                : PairClass::kDistinguished;
    return out;
}

HuntReport run_hunt(const std::vector<Graph>& corpus, const TestParams& params,
                    std::uint32_t budget, bool allow_large) {
    if (budget < 1) throw std::invalid_argument("stress budget must be >= 1");

    HuntReport report;
    report.p = params.p;
    report.seed = params.seed;
    report.budget = budget;

    std::map<std::size_t, std::vector<Graph>> by_n;
    for (const Graph& g : corpus) by_n[g.vertex_count()].push_back(g);

    for (auto& [n, group] : by_n) {
        // Reduce the group to class representatives; a pre-deduped corpus
        // passes through unchanged.
        std::vector<Graph> classes;
        std::vector<ExactMatrix> class_adj;
        for (const Graph& g : group) {
            const ExactMatrix adj = adjacency_matrix(g);
            bool known = false;
            for (const ExactMatrix& seen : class_adj)
                if (brute_force_similar(adj, seen, allow_large).has_value()) {
                    known = true;
                    break;
                }
            if (!known) {
                classes.push_back(g);
                class_adj.push_back(adj);
            }
        }
        report.graphs += classes.size();
        report.pairs_examined += classes.size() * (classes.size() - 1) / 2;

        for (const CoDetPair& pair : find_codet_pairs(classes, allow_large)) {
            PairRecord rec;
            rec.n = n;
            rec.id_a = encode_graph6(classes[pair.index_a]);
            rec.id_b = encode_graph6(classes[pair.index_b]);
            rec.det_a = pair.det_a;
            rec.det_b = pair.det_b;
            rec.oracle_similar = false;
            rec.stress = stress_pair(class_adj[pair.index_a], class_adj[pair.index_b], budget,
                                     params);
            if (rec.stress.classification == PairClass::kStronglyCoDetCandidate) {
                const ExactMatrix pa =
                    diagonal_perturbation(class_adj[pair.index_a], 0, BigInt(1));
                const ExactMatrix pb =
                    diagonal_perturbation(class_adj[pair.index_b], 0, BigInt(1));
                rec.perturbed = stress_pair(pa, pb, budget, params);
            }
            report.records.push_back(std::move(rec));
        }
    }

    std::sort(report.records.begin(), report.records.end(),
              [](const PairRecord& x, const PairRecord& y) {
                  return std::tie(x.n, x.id_a, x.id_b) < std::tie(y.n, y.id_a, y.id_b);
              });
    return report;
}

}  // namespace permsim
