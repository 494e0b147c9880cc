#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "scopt/laurent.hpp"
#include "scopt/types.hpp"

namespace scopt {

// Counts of cycle-8 candidate structures per base-matrix size, and the reduced
// weights that drive the distribution objective and its gradient.
struct StructureWeights {
    std::int64_t w1, w2, w3, w4;
    double wbar2, wbar3, wbar4;

    static StructureWeights compute(int gamma, int kappa);
};

std::int64_t binomial(int n, int k);

// Number of cycle-6 candidates in an all-one gamma x kappa base matrix.
std::int64_t cycle6_candidate_count(int gamma, int kappa);

// Probability that a cycle-6 candidate survives a random partition drawn from
// (pattern, dist): the X^0 coefficient of f(X)^3 f(X^-1)^3.
double cycle6_probability(const CouplingPattern& pattern, const EdgeDistribution& dist);

// Survival probabilities per structure class S1..S6 (S4 = S5 = S6).
std::array<double, 6> cycle8_structure_probabilities(const CouplingPattern& pattern,
                                                     const EdgeDistribution& dist);

// Expected number of surviving cycle-8 candidates under a random partition.
double expected_cycle8_count(int gamma, int kappa, const CouplingPattern& pattern,
                             const EdgeDistribution& dist);

// Gradient of cycle6_probability: component i is 6 [f^3(X) f^2(X^-1)]_{a_i}.
std::vector<double> cycle6_gradient(const CouplingPattern& pattern, const EdgeDistribution& dist);

// Gradient of expected_cycle8_count / w1.
std::vector<double> cycle8_gradient(int gamma, int kappa, const CouplingPattern& pattern,
                                    const EdgeDistribution& dist);

// Combined objective wbar1 * P6 + N8 / w1 with wbar1 = (2w/3)(gamma-2)(kappa-2);
// this is the quantity the distribution optimizer descends on.
double combined_objective(int gamma, int kappa, const CouplingPattern& pattern,
                          const EdgeDistribution& dist, double cycle6_weight);

std::vector<double> combined_gradient(int gamma, int kappa, const CouplingPattern& pattern,
                                      const EdgeDistribution& dist, double cycle6_weight);

}  // namespace scopt
