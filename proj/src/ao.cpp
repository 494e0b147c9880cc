#include "scopt/ao.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "scopt/candidates.hpp"
#include "scopt/counting.hpp"
#include "scopt/rng.hpp"

namespace scopt {

PartitioningMatrix initialize_partition(const std::vector<std::int64_t>& counts,
                                        const std::vector<int>& support, int gamma, int kappa,
                                        std::uint64_t seed) {
    if (counts.size() != support.size()) {
        throw ValidationError("initialize_partition: counts/support length mismatch");
    }
    const std::int64_t total = std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
    if (total != static_cast<std::int64_t>(gamma) * kappa) {
        std::ostringstream os;
        os << "initialize_partition: counts sum to " << total << ", expected " << gamma * kappa;
        throw ValidationError(os.str());
    }
    std::vector<int> entries;
    entries.reserve(total);
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] < 0) throw ValidationError("initialize_partition: negative count");
        entries.insert(entries.end(), counts[i], support[i]);
    }
    Rng rng(seed);
    rng.shuffle(entries);
    PartitioningMatrix p(gamma, kappa);
    std::copy(entries.begin(), entries.end(), p.data().begin());
    return p;
}

namespace {

// Candidate survival bookkeeping for one cycle length: current partition sums
// plus the per-cell incidence lists with coefficients, so a tentative value at
// one cell is evaluated without touching the rest of the matrix.
struct SurvivalState {
    CandidateList list;
    NodeCandidateIndex index;
    std::vector<std::int32_t> sums;

    void init(const PartitioningMatrix& p) {
        sums.resize(list.count());
        for (std::int64_t c = 0; c < list.count(); ++c) {
            sums[c] = static_cast<std::int32_t>(partition_sum(list.candidate(c), list.g, p));
        }
    }

    std::int64_t local_survivors(int i, int j, int delta) const {
        std::int64_t n = 0;
        for (const auto& e : index.at(i, j)) {
            if (sums[e.candidate] + e.coef * delta == 0) ++n;
        }
        return n;
    }

    void apply(int i, int j, int delta) {
        for (const auto& e : index.at(i, j)) {
            sums[e.candidate] += e.coef * delta;
        }
    }

    std::int64_t global_survivors() const {
        return std::count(sums.begin(), sums.end(), 0);
    }
};

}  // namespace

AoResult optimize_partition(const CodeParameters& params, const EdgeDistribution& dist,
                            const AoConfig& cfg) {
    validate(params);
    validate(params, dist);
    const int gamma = params.gamma, kappa = params.kappa;
    const std::vector<int>& support = params.pattern.a;
    const std::int64_t cells = static_cast<std::int64_t>(gamma) * kappa;
    const std::int64_t d1 = cfg.d1 >= 0 ? cfg.d1 : (cells + 3) / 4;
    const std::int64_t d2 = cfg.d2 >= 0 ? cfg.d2 : (cells + 7) / 8;
    if (d2 > d1) throw ValidationError("partition optimizer: d2 must not exceed d1");
    if (cfg.max_sweeps < 1) throw ValidationError("partition optimizer: max_sweeps must be >= 1");
    const double w = cfg.cycle6_weight;

    const std::vector<std::int64_t> u = round_distribution(dist, cells);

    AoResult res;
    res.partition = initialize_partition(u, support, gamma, kappa, cfg.seed);

    SurvivalState s6{enumerate_candidates(gamma, kappa, 3), {}, {}};
    SurvivalState s8{enumerate_candidates(gamma, kappa, 4), {}, {}};
    s6.index = build_node_index(s6.list);
    s8.index = build_node_index(s8.list);
    s6.init(res.partition);
    s8.init(res.partition);

    std::vector<std::int64_t> deviation(support.size(), 0);
    std::int64_t dev_total = 0;

    std::int64_t g6 = s6.global_survivors();
    std::int64_t g8 = s8.global_survivors();
    res.objective_trace.push_back(w * static_cast<double>(g6) + static_cast<double>(g8));

    for (res.sweeps = 0; res.sweeps < cfg.max_sweeps; ++res.sweeps) {
        bool moved = false;
        for (int i = 0; i < gamma; ++i) {
            for (int j = 0; j < kappa; ++j) {
                std::int64_t n6 = s6.local_survivors(i, j, 0);
                std::int64_t n8 = s8.local_survivors(i, j, 0);
                double n = w * static_cast<double>(n6) + static_cast<double>(n8);
                for (std::size_t vi = 0; vi < support.size(); ++vi) {
                    const int v = support[vi];
                    if (v == res.partition(i, j)) continue;
                    if (dev_total + 1 > d1 || deviation[vi] + 1 > d2) continue;
                    const int delta = v - res.partition(i, j);
                    const std::int64_t t6 = s6.local_survivors(i, j, delta);
                    const std::int64_t t8 = s8.local_survivors(i, j, delta);
                    const double t = w * static_cast<double>(t6) + static_cast<double>(t8);
                    if (t < n) {
                        s6.apply(i, j, delta);
                        s8.apply(i, j, delta);
                        res.partition(i, j) = v;
                        deviation[vi] += 1;
                        dev_total += 1;
                        g6 += t6 - n6;
                        g8 += t8 - n8;
                        n6 = t6;
                        n8 = t8;
                        n = t;
                        moved = true;
                        res.moves += 1;
                        res.objective_trace.push_back(w * static_cast<double>(g6) +
                                                      static_cast<double>(g8));
                    }
                }
            }
        }
        if (!moved) break;
    }
    res.count6 = g6;
    res.count8 = g8;
    return res;
}

namespace {

ConstructionResult run_pipeline(const CodeParameters& params, const EdgeDistribution& dist,
                                const AoConfig& ao_cfg, const CpoConfig& cpo_cfg) {
    ConstructionResult out;
    out.params = params;
    out.seed = ao_cfg.seed;
    const AoResult ao = optimize_partition(params, dist, ao_cfg);
    out.partition = ao.partition;
    const CpoResult cpo = optimize_lifting(params, out.partition, cpo_cfg);
    out.lifting = cpo.lifting;
    out.stats = cpo.stats;
    return out;
}

}  // namespace

ConstructionResult construct_gd_code(const CodeParameters& params, const GradeConfig& grade_cfg,
                                     const AoConfig& ao_cfg, const CpoConfig& cpo_cfg) {
    validate(params);
    const GradeResult gr = optimize_distribution(params.gamma, params.kappa, params.pattern,
                                                 grade_cfg);
    return run_pipeline(params, gr.dist, ao_cfg, cpo_cfg);
}

ConstructionResult construct_unf_code(const CodeParameters& params, const AoConfig& ao_cfg,
                                      const CpoConfig& cpo_cfg) {
    validate(params);
    const auto dist = EdgeDistribution::uniform(static_cast<int>(params.pattern.a.size()));
    return run_pipeline(params, dist, ao_cfg, cpo_cfg);
}

}  // namespace scopt
