#include "scopt/grade.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "scopt/metrics.hpp"

namespace scopt {

GradeResult optimize_distribution(int gamma, int kappa, const CouplingPattern& pattern,
                                  const GradeConfig& cfg) {
    if (cfg.epsilon <= 0 || cfg.alpha <= 0 || cfg.max_iters < 1 || cfg.cycle6_weight < 0) {
        throw ValidationError("distribution optimizer: epsilon, alpha must be > 0, max_iters >= 1, weight >= 0");
    }
    validate(pattern);
    const int n = static_cast<int>(pattern.a.size());

    GradeResult res;
    res.dist = EdgeDistribution::uniform(n);
    double value = combined_objective(gamma, kappa, pattern, res.dist, cfg.cycle6_weight);
    res.trace.push_back(value);

    std::vector<double> p = res.dist.p;
    res.converged = false;
    for (int iter = 0; iter < cfg.max_iters; ++iter) {
        std::vector<double> g = combined_gradient(gamma, kappa, pattern,
                                                  EdgeDistribution{p}, cfg.cycle6_weight);
        const double mean = std::accumulate(g.begin(), g.end(), 0.0) / n;
        double norm2 = 0.0;
        for (double& gi : g) {
            gi -= mean;
            norm2 += gi * gi;
        }
        const double norm = std::sqrt(norm2);
        if (norm < 1e-300) {  // stationary (always the case for a one-point support)
            res.converged = true;
            break;
        }

        bool accepted = false;
        double new_value = value;
        for (int backtrack = 0; backtrack <= 20; ++backtrack) {
            const double step = cfg.alpha * std::ldexp(1.0, -backtrack) / norm;
            std::vector<double> cand(n);
            bool clamped = false;
            for (int i = 0; i < n; ++i) {
                cand[i] = p[i] - step * g[i];
                if (cand[i] <= 0.0) {
                    cand[i] = 1e-6;
                    clamped = true;
                }
            }
            if (clamped) {
                const double sum = std::accumulate(cand.begin(), cand.end(), 0.0);
                for (double& c : cand) c /= sum;
                if (backtrack < 20) continue;  // leaving the simplex halves the step
            }
            const double v = combined_objective(gamma, kappa, pattern, EdgeDistribution{cand},
                                                cfg.cycle6_weight);
            if (v <= value) {
                p = std::move(cand);
                new_value = v;
                accepted = true;
                break;
            }
        }
        if (!accepted) {  // no step size descends: locally optimal at resolution
            res.converged = true;
            break;
        }
        const double drop = value - new_value;
        value = new_value;
        res.trace.push_back(value);
        if (drop <= cfg.epsilon) {
            res.converged = true;
            break;
        }
    }
    res.dist.p = p;
    return res;
}

std::vector<std::int64_t> round_distribution(const EdgeDistribution& dist, std::int64_t total) {
    if (total < 1) throw ValidationError("round_distribution: total must be >= 1");
    const int n = static_cast<int>(dist.p.size());
    std::vector<std::int64_t> u(n);
    std::vector<double> rem(n);
    std::int64_t assigned = 0;
    for (int i = 0; i < n; ++i) {
        const double exact = dist.p[i] * static_cast<double>(total);
        u[i] = static_cast<std::int64_t>(std::floor(exact));
        rem[i] = exact - static_cast<double>(u[i]);
        assigned += u[i];
    }
    // largest fractional remainders get the leftover units; equal remainders go
    // to the later index, which makes the result lexicographically smallest
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (rem[a] != rem[b]) return rem[a] > rem[b];
        return a > b;
    });
    for (std::int64_t k = 0; k < total - assigned; ++k) u[order[k]] += 1;

    // largest-remainder is L2-optimal; keep a local-exchange pass as a guard
    for (bool improved = true; improved;) {
        improved = false;
        for (int from = 0; from < n; ++from) {
            if (u[from] == 0) continue;
            for (int to = 0; to < n; ++to) {
                if (to == from) continue;
                // moving one unit from 'from' to 'to' changes ||u - total*p||^2 by
                // 2*(total*p_from - u_from) - 2*(total*p_to - u_to) + 2
                const double delta = 2.0 * (dist.p[from] * total - u[from]) -
                                     2.0 * (dist.p[to] * total - u[to]) + 2.0;
                if (delta < -1e-9) {
                    u[from] -= 1;
                    u[to] += 1;
                    improved = true;
                }
            }
        }
    }
    return u;
}

}  // namespace scopt
