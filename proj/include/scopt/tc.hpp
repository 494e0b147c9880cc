#pragma once

#include "scopt/ao.hpp"
#include "scopt/grade.hpp"
#include "scopt/types.hpp"

namespace scopt {

// Brute-force search over strictly increasing patterns with a_0 = 0 and
// a_{m_t} = m: each candidate pattern is scored by the converged objective of
// the distribution optimizer; ties within a small relative tolerance go to the
// lexicographically smallest pattern. Guarded at 10^6 candidate patterns.
CouplingPattern search_coupling_pattern(int memory, int pseudo_memory, int gamma, int kappa,
                                        const GradeConfig& cfg);

// Full pipeline over the restricted support of params.pattern.
ConstructionResult construct_tc_code(const CodeParameters& params, const GradeConfig& grade_cfg,
                                     const AoConfig& ao_cfg, const CpoConfig& cpo_cfg);

}  // namespace scopt
