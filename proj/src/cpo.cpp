#include "scopt/cpo.hpp"

#include <vector>

#include "scopt/candidates.hpp"
#include "scopt/counting.hpp"

namespace scopt {

namespace {

// Partition-surviving candidates with their per-cell incidence, placements and
// walk views; the lifting sweep only ever looks at these.
struct CpoState {
    struct Survivor {
        const std::uint8_t* walk;
        int g;
        std::int64_t placements;
        double weight;  // cycle6_weight for g=3, 1 for g=4
    };
    std::vector<Survivor> survivors;
    std::vector<std::vector<std::int32_t>> through;  // per cell, survivor ids
    int kappa = 0;

    void add_list(const CandidateList& list, const PartitioningMatrix& p,
                  const LiftingMatrix& l, const CodeParameters& params, double weight) {
        std::vector<bool> seen(static_cast<std::size_t>(params.gamma) * params.kappa);
        for (std::int64_t c = 0; c < list.count(); ++c) {
            const std::uint8_t* walk = list.candidate(c);
            const WalkEval ev = eval_walk(walk, list.g, p, l, params.circulant_size);
            if (!ev.protograph) continue;
            const std::int64_t placements =
                std::max<std::int64_t>(0, params.replicas - ev.span);
            if (placements == 0) continue;
            const std::int32_t id = static_cast<std::int32_t>(survivors.size());
            survivors.push_back({walk, list.g, placements, weight});
            std::fill(seen.begin(), seen.end(), false);
            for (int k = 0; k < 2 * list.g; k += 2) {
                const int i = walk[k + 1];
                for (int j : {static_cast<int>(walk[k]),
                              static_cast<int>(walk[(k + 2) % (2 * list.g)])}) {
                    if (!seen[i * kappa + j]) {
                        seen[i * kappa + j] = true;
                        through[i * kappa + j].push_back(id);
                    }
                }
            }
        }
    }

    // weighted simple cycles through one cell under the current lifting
    double local_score(int i, int j, const PartitioningMatrix& p, const LiftingMatrix& l,
                       int z) const {
        double score = 0.0;
        for (std::int32_t id : through[i * kappa + j]) {
            const Survivor& s = survivors[id];
            const WalkEval ev = eval_walk(s.walk, s.g, p, l, z);
            if (ev.tanner && !ev.degenerate) {
                score += s.weight * static_cast<double>(ev.multiplicity * s.placements);
            }
        }
        return score;
    }
};

}  // namespace

CpoResult optimize_lifting_from(const CodeParameters& params, const PartitioningMatrix& partition,
                                const LiftingMatrix& start, const CpoConfig& cfg) {
    validate(params);
    validate_partition(params, partition);
    validate_lifting(params, start);
    if (cfg.max_sweeps < 1) throw ValidationError("lifting optimizer: max_sweeps must be >= 1");
    const int z = params.circulant_size;

    CpoResult res;
    res.lifting = start;

    const CandidateList list6 = enumerate_candidates(params.gamma, params.kappa, 3,
                                                     Catalog::Complete);
    const CandidateList list8 = enumerate_candidates(params.gamma, params.kappa, 4,
                                                     Catalog::Complete);
    CpoState state;
    state.kappa = params.kappa;
    state.through.resize(static_cast<std::size_t>(params.gamma) * params.kappa);
    state.add_list(list6, partition, res.lifting, params, cfg.cycle6_weight);
    state.add_list(list8, partition, res.lifting, params, 1.0);

    for (res.sweeps = 0; res.sweeps < cfg.max_sweeps; ++res.sweeps) {
        bool moved = false;
        for (int i = 0; i < params.gamma; ++i) {
            for (int j = 0; j < params.kappa; ++j) {
                const int current = res.lifting(i, j);
                double best = state.local_score(i, j, partition, res.lifting, z);
                int best_v = current;
                for (int v = 0; v < z; ++v) {
                    if (v == current) continue;
                    res.lifting(i, j) = v;
                    const double t = state.local_score(i, j, partition, res.lifting, z);
                    if (t < best) {
                        best = t;
                        best_v = v;
                    }
                }
                res.lifting(i, j) = best_v;
                if (best_v != current) {
                    moved = true;
                    res.moves += 1;
                }
            }
        }
        if (!moved) break;
    }
    res.stats = compute_stats(params, partition, res.lifting, cfg.cycle6_weight);
    return res;
}

CpoResult optimize_lifting(const CodeParameters& params, const PartitioningMatrix& partition,
                           const CpoConfig& cfg) {
    LiftingMatrix start(params.gamma, params.kappa);
    for (int i = 0; i < params.gamma; ++i) {
        for (int j = 0; j < params.kappa; ++j) {
            start(i, j) = (i * j) % params.circulant_size;
        }
    }
    return optimize_lifting_from(params, partition, start, cfg);
}

}  // namespace scopt
