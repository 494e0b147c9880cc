#pragma once

#include <cstdint>
#include <span>

#include "scopt/candidates.hpp"
#include "scopt/types.hpp"

namespace scopt {

// Sum_k P(i_k, j_k) - Sum_k P(i_k, j_{k+1}); zero iff the candidate survives
// into the protograph.
std::int64_t partition_sum(const std::uint8_t* walk, int g, const PartitioningMatrix& p);

struct ProtographCounts {
    std::int64_t count6 = 0;
    std::int64_t count8 = 0;
};

// Candidates of the list with partition_sum == 0. OpenMP-parallel; the serial
// variant is the reference the tests compare against.
std::int64_t count_surviving(const CandidateList& list, const PartitioningMatrix& p);
std::int64_t count_surviving_serial(const CandidateList& list, const PartitioningMatrix& p);

ProtographCounts count_protograph_candidates(const PartitioningMatrix& p,
                                             Catalog catalog = Catalog::Tracked);

// Everything the Tanner-level count needs about one candidate under (P, L, z):
// survival of both cycle conditions, the replica span of its column blocks,
// whether the lift revisits a Tanner node (then it is no simple cycle at all),
// and the circulant multiplicity (z, or z/2 for the doubled 2x2 traversal
// whose lift is invariant under the half shift).
struct WalkEval {
    bool protograph = false;   // partition condition
    bool tanner = false;       // both conditions
    bool degenerate = false;   // lift revisits a node
    std::int64_t span = 0;
    std::int64_t multiplicity = 0;
};

WalkEval eval_walk(const std::uint8_t* walk, int g, const PartitioningMatrix& p,
                   const LiftingMatrix& l, int z);

// Simple cycles contributed by one candidate over L replicas.
std::int64_t walk_cycle_count(const WalkEval& ev, int replicas);

struct TannerCounts {
    std::int64_t survivors6 = 0;   // candidates passing both conditions
    std::int64_t survivors8 = 0;
    std::int64_t full6 = 0;        // simple cycles in the whole Tanner graph
    std::int64_t full8 = 0;
    std::int64_t period6 = 0;      // z * survivors
    std::int64_t period8 = 0;
};

TannerCounts count_tanner_cycles(const CodeParameters& params, const PartitioningMatrix& p,
                                 const LiftingMatrix& l);
TannerCounts count_tanner_cycles_serial(const CodeParameters& params, const PartitioningMatrix& p,
                                        const LiftingMatrix& l);

// Explicit binary parity-check matrix of the coupled code: L replicas, replica
// r placing the circulant lift of component a at vertical block offset r + a.
// Guarded at 100000 ones.
Matrix<std::uint8_t> build_parity_matrix(const CodeParameters& params, const PartitioningMatrix& p,
                                         const LiftingMatrix& l);

// Independent oracle: counts simple cycles of length 2g in the Tanner graph of
// an explicit binary matrix by non-backtracking walk enumeration, each cycle
// once. Exponential in g; meant for small instances only.
std::int64_t brute_force_tanner_count(const Matrix<std::uint8_t>& h, int g);

CycleStats compute_stats(const CodeParameters& params, const PartitioningMatrix& p,
                         const LiftingMatrix& l, double cycle6_weight);

}  // namespace scopt
