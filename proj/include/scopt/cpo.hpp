#pragma once

#include <cstdint>

#include "scopt/types.hpp"

namespace scopt {

struct CpoConfig {
    double cycle6_weight = 100.0;
    std::uint64_t seed = 0;  // reserved; the sweep itself is deterministic
    int max_sweeps = 1000;
};

struct CpoResult {
    LiftingMatrix lifting;
    CycleStats stats;
    int sweeps = 0;
    std::int64_t moves = 0;
};

// Greedy coordinate descent over circulant powers given a fixed partition.
// Starts from L(i,j) = i*j mod z and, per cell, keeps the power minimizing the
// weighted count of Tanner-graph cycles through that cell among candidates
// already satisfying the partition condition; the current power wins ties.
CpoResult optimize_lifting(const CodeParameters& params, const PartitioningMatrix& partition,
                           const CpoConfig& cfg);

// Same sweep from a caller-provided starting matrix.
CpoResult optimize_lifting_from(const CodeParameters& params, const PartitioningMatrix& partition,
                                const LiftingMatrix& start, const CpoConfig& cfg);

}  // namespace scopt
