#pragma once

#include <cstdint>
#include <vector>

#include "scopt/types.hpp"

namespace scopt {

struct GradeConfig {
    double epsilon = 1e-10;   // convergence accuracy on the objective
    double alpha = 0.01;      // gradient step size
    double cycle6_weight = 100.0;
    int max_iters = 100000;
};

struct GradeResult {
    EdgeDistribution dist;
    std::vector<double> trace;  // objective after each accepted step, front() = start
    bool converged = false;
};

// Projected gradient descent over the probability simplex, from the uniform
// start. The raw gradient is centered (mean subtracted) so update directions
// sum to zero; a step is accepted only if the objective does not increase,
// halving the step size down to alpha * 2^-20 otherwise. Components pushed to
// or below zero are clamped to 1e-6 and the vector renormalized.
GradeResult optimize_distribution(int gamma, int kappa, const CouplingPattern& pattern,
                                  const GradeConfig& cfg);

// Nonnegative integer vector u with sum(u) = total minimizing
// || u / total - p ||_2; ties resolved to the lexicographically smallest u.
std::vector<std::int64_t> round_distribution(const EdgeDistribution& dist, std::int64_t total);

}  // namespace scopt
