#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "scopt/grade.hpp"
#include "scopt/metrics.hpp"
#include "scopt/rng.hpp"
#include "support/oracles.hpp"

using namespace scopt;

TEST_CASE("descends to the grid-search minimizer of the cycle-6 probability") {
    // with a huge cycle-6 weight the combined objective is dominated by P6
    GradeConfig cfg;
    cfg.cycle6_weight = 1e6;
    const CouplingPattern pattern = CouplingPattern::full(2);
    const GradeResult res = optimize_distribution(17, 17, pattern, cfg);

    double best = 1e9;
    std::vector<double> best_p;
    for (int i = 1; i < 1000; ++i) {
        for (int j = 1; j < 1000 - i; ++j) {
            const std::vector<double> p{i / 1000.0, j / 1000.0, 1.0 - i / 1000.0 - j / 1000.0};
            const double v = cycle6_probability(pattern, EdgeDistribution{p});
            if (v < best) {
                best = v;
                best_p = p;
            }
        }
    }
    REQUIRE(best_p.size() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(std::abs(res.dist.p[i] - best_p[i]) < 5e-3);
    }
    CHECK(res.converged);
}

TEST_CASE("full-memory optimum is skewed to the ends") {
    GradeConfig cfg;
    cfg.cycle6_weight = 1e6;
    const GradeResult res = optimize_distribution(17, 17, CouplingPattern::full(4), cfg);
    std::vector<double> sorted = res.dist.p;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    CHECK(res.dist.p.front() >= sorted[1] - 1e-9);
    CHECK(res.dist.p.back() >= sorted[1] - 1e-9);
    CHECK(res.dist.p.front() > res.dist.p[1]);
    CHECK(res.dist.p.back() > res.dist.p[3]);
}

TEST_CASE("one-point support returns immediately") {
    const GradeResult res = optimize_distribution(3, 7, CouplingPattern{{0}}, GradeConfig{});
    CHECK(res.dist.p == std::vector<double>{1.0});
    CHECK(res.converged);
    CHECK(res.trace.size() == 1);
}

TEST_CASE("iterates stay on the simplex and the trace never increases") {
    GradeConfig cfg;
    cfg.cycle6_weight = 100.0;
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        Rng rng(seed);
        const int m = 3 + static_cast<int>(rng.below(7));
        const GradeResult res = optimize_distribution(3, 17, CouplingPattern::full(m), cfg);
        const double sum = std::accumulate(res.dist.p.begin(), res.dist.p.end(), 0.0);
        CHECK(std::abs(sum - 1.0) <= 1e-9);
        for (double v : res.dist.p) CHECK(v > 0.0);
        for (std::size_t i = 1; i < res.trace.size(); ++i) {
            CHECK(res.trace[i] <= res.trace[i - 1] + 1e-15);
        }
        CHECK(res.converged);
    }
}

TEST_CASE("config validation") {
    GradeConfig cfg;
    cfg.alpha = 0.0;
    CHECK_THROWS_AS(optimize_distribution(3, 7, CouplingPattern::full(2), cfg), ValidationError);
    cfg = {};
    cfg.epsilon = -1.0;
    CHECK_THROWS_AS(optimize_distribution(3, 7, CouplingPattern::full(2), cfg), ValidationError);
    cfg = {};
    cfg.max_iters = 0;
    CHECK_THROWS_AS(optimize_distribution(3, 7, CouplingPattern::full(2), cfg), ValidationError);
}

namespace {

double l2_to_target(const std::vector<std::int64_t>& u, const std::vector<double>& p,
                    std::int64_t total) {
    double d = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double diff = static_cast<double>(u[i]) / static_cast<double>(total) - p[i];
        d += diff * diff;
    }
    return d;
}

// exhaustive minimizer with the lexicographic tie rule
void best_composition(std::vector<std::int64_t>& cur, std::size_t idx, std::int64_t left,
                      const std::vector<double>& p, std::int64_t total,
                      std::vector<std::int64_t>& best, double& best_d) {
    if (idx + 1 == cur.size()) {
        cur[idx] = left;
        const double d = l2_to_target(cur, p, total);
        if (d < best_d - 1e-15 || (std::abs(d - best_d) <= 1e-15 && cur < best)) {
            best = cur;
            best_d = d;
        }
        return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
        cur[idx] = v;
        best_composition(cur, idx + 1, left - v, p, total, best, best_d);
    }
}

}  // namespace

TEST_CASE("distribution rounding") {
    SUBCASE("exact multiples") {
        const auto u = round_distribution(EdgeDistribution::uniform(3), 21);
        CHECK(u == std::vector<std::int64_t>{7, 7, 7});
    }
    SUBCASE("tie resolved to the lexicographically smallest vector") {
        const auto u = round_distribution(EdgeDistribution{{0.4, 0.2, 0.4}}, 21);
        CHECK(u == std::vector<std::int64_t>{8, 4, 9});
    }
    SUBCASE("single component") {
        CHECK(round_distribution(EdgeDistribution{{1.0}}, 35) == std::vector<std::int64_t>{35});
    }
    SUBCASE("matches the exhaustive minimizer") {
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            Rng rng(seed);
            const int n = 2 + static_cast<int>(rng.below(4));
            const std::int64_t total = 5 + static_cast<std::int64_t>(rng.below(36));
            std::vector<double> p(n);
            double sum = 0.0;
            for (double& v : p) {
                v = 0.01 + rng.unit();
                sum += v;
            }
            for (double& v : p) v /= sum;
            const auto u = round_distribution(EdgeDistribution{p}, total);
            CHECK(std::accumulate(u.begin(), u.end(), std::int64_t{0}) == total);

            std::vector<std::int64_t> cur(n), best(n, total + 1);
            double best_d = 1e300;
            best_composition(cur, 0, total, p, total, best, best_d);
            CHECK(u == best);
            // apportionment never strays more than one unit from the exact share
            for (int i = 0; i < n; ++i) {
                CHECK(std::abs(static_cast<double>(u[i]) - p[i] * total) <= 1.0 + 1e-9);
            }
        }
    }
    SUBCASE("rejects nonpositive totals") {
        CHECK_THROWS_AS(round_distribution(EdgeDistribution{{1.0}}, 0), ValidationError);
    }
}
