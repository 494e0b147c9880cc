#pragma once

#include <cstdint>
#include <vector>

#include "scopt/types.hpp"

namespace scopt {

// Structure class of a cycle candidate by the distinct rows x columns it spans.
enum class Structure : std::uint8_t {
    S1 = 1,  // 2x2
    S2,      // 2x3 or 3x2
    S3,      // 3x3
    S4,      // 2x4 or 4x2
    S5,      // 3x4 or 4x3
    S6,      // 4x4
};

// Which candidate family to enumerate.
//
// Tracked: the six-structure catalog whose per-structure totals are the w1..w4
// closed forms; for 4x4 spans it keeps the 24 traversals per submatrix that
// visit the four columns in sorted cyclic order. This is the family the
// expectation metrics and the partition optimizer work with.
//
// Complete: every non-backtracking closed walk modulo dihedral symmetry (72
// traversals per 4x4 submatrix). Tanner-graph cycle counting uses this one;
// the two families coincide whenever min(gamma, kappa) < 4 or g = 3.
enum class Catalog { Tracked, Complete };

// Flat list of canonical cycle candidates. Node sequence per candidate is
// (j1, i1, j2, i2, ..., jg, ig): columns at even slots, rows at odd slots,
// traversing cells (i_k, j_k) then (i_k, j_{k+1}) with j_{g+1} = j_1.
struct CandidateList {
    int g = 0;
    int gamma = 0, kappa = 0;
    std::vector<std::uint8_t> nodes;     // size() == count() * 2g
    std::vector<Structure> structure;    // per candidate

    std::int64_t count() const { return static_cast<std::int64_t>(structure.size()); }
    const std::uint8_t* candidate(std::int64_t idx) const { return nodes.data() + idx * 2 * g; }
};

CandidateList enumerate_candidates(int gamma, int kappa, int g, Catalog catalog = Catalog::Tracked);

// Per-cell index for local survival bookkeeping: for cell (i, j), the
// candidates through it and the integer coefficient of P(i, j) in their
// partition condition (+1 per use as (i_k, j_k), -1 per use as (i_k, j_{k+1})).
struct NodeCandidateIndex {
    struct Entry {
        std::int32_t candidate;
        std::int8_t coef;
    };
    int gamma = 0, kappa = 0;
    std::vector<std::vector<Entry>> cells;  // gamma * kappa, row-major

    const std::vector<Entry>& at(int i, int j) const { return cells[i * kappa + j]; }
};

NodeCandidateIndex build_node_index(const CandidateList& list);

}  // namespace scopt
