#pragma once

#include <cstdint>
#include <vector>

#include "scopt/cpo.hpp"
#include "scopt/grade.hpp"
#include "scopt/types.hpp"

namespace scopt {

struct AoConfig {
    std::int64_t d1 = -1;      // L1 budget on accepted reassignments; -1 = ceil(gamma*kappa/4)
    std::int64_t d2 = -1;      // Linf budget per support value; -1 = ceil(gamma*kappa/8)
    double cycle6_weight = 100.0;
    std::uint64_t seed = 0;
    int max_sweeps = 1000;
};

// Random matrix whose entry multiset realizes counts[i] copies of support[i].
PartitioningMatrix initialize_partition(const std::vector<std::int64_t>& counts,
                                        const std::vector<int>& support, int gamma, int kappa,
                                        std::uint64_t seed);

struct AoResult {
    PartitioningMatrix partition;
    std::int64_t count6 = 0;       // surviving cycle-6 candidates
    std::int64_t count8 = 0;       // surviving cycle-8 candidates (tracked catalog)
    std::vector<double> objective_trace;  // w*count6 + count8 after each accepted move
    int sweeps = 0;
    std::int64_t moves = 0;
};

// Semi-greedy sweep: each cell tries every other support value; a move is
// accepted iff it strictly reduces the weighted count of surviving candidates
// through that cell and the deviation budgets allow it. The deviation vector
// counts accepted reassignments per target value and never decreases, so d1
// bounds the total number of moves. Sweeps repeat until one makes no change.
AoResult optimize_partition(const CodeParameters& params, const EdgeDistribution& dist,
                            const AoConfig& cfg);

enum class ConstructionMode { GD, UNF, TC };

// GD pipeline: distribution descent -> rounding -> random placement -> partition
// sweep -> circulant sweep. UNF replaces the optimized distribution with the
// uniform one.
ConstructionResult construct_gd_code(const CodeParameters& params, const GradeConfig& grade_cfg,
                                     const AoConfig& ao_cfg, const CpoConfig& cpo_cfg);
ConstructionResult construct_unf_code(const CodeParameters& params, const AoConfig& ao_cfg,
                                      const CpoConfig& cpo_cfg);

}  // namespace scopt
