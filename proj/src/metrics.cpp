#include "scopt/metrics.hpp"

#include <sstream>

namespace scopt {

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

StructureWeights StructureWeights::compute(int gamma, int kappa) {
    if (gamma < 2 || kappa < 2) throw ValidationError("structure weights: gamma, kappa must be >= 2");
    if (gamma > 64 || kappa > 64) {
        std::ostringstream os;
        os << "structure weights: gamma=" << gamma << ", kappa=" << kappa
           << " exceed the 64 limit for exact 64-bit binomials";
        throw ValidationError(os.str());
    }
    StructureWeights w{};
    const std::int64_t g2 = binomial(gamma, 2), g3 = binomial(gamma, 3), g4 = binomial(gamma, 4);
    const std::int64_t k2 = binomial(kappa, 2), k3 = binomial(kappa, 3), k4 = binomial(kappa, 4);
    w.w1 = g2 * k2;
    w.w2 = 3 * g2 * k3 + 3 * g3 * k2;
    w.w3 = 18 * g3 * k3;
    w.w4 = 6 * g2 * k4 + 6 * g4 * k2 + 36 * g3 * k4 + 36 * g4 * k3 + 24 * g4 * k4;
    w.wbar2 = gamma + kappa - 4;
    w.wbar3 = 2.0 * (gamma - 2) * (kappa - 2);
    w.wbar4 = 0.5 * ((gamma - 2.0) * (gamma - 3.0) + (kappa - 2.0) * (kappa - 3.0)) +
              (gamma - 2.0) * (kappa - 2.0) * (gamma + kappa - 6.0) +
              (gamma - 2.0) * (gamma - 3.0) * (kappa - 2.0) * (kappa - 3.0) / 6.0;
    return w;
}

std::int64_t cycle6_candidate_count(int gamma, int kappa) {
    return 6 * binomial(gamma, 3) * binomial(kappa, 3);
}

double cycle6_probability(const CouplingPattern& pattern, const EdgeDistribution& dist) {
    const LaurentPoly f = LaurentPoly::from_distribution(pattern, dist);
    const LaurentPoly fb = f.reversed();
    return (f * f * f * fb * fb * fb).coeff(0);
}

std::array<double, 6> cycle8_structure_probabilities(const CouplingPattern& pattern,
                                                     const EdgeDistribution& dist) {
    const LaurentPoly f = LaurentPoly::from_distribution(pattern, dist);
    const LaurentPoly fb = f.reversed();
    const LaurentPoly f2 = f.dilated2();
    const LaurentPoly f2b = f2.reversed();
    const LaurentPoly ff = f * f;
    const LaurentPoly fbfb = fb * fb;
    const double s1 = (ff * fbfb).coeff(0);
    const double s2 = (f2 * f2b * ff * fbfb).coeff(0);
    const double s3 = (f2 * ff * fbfb * fbfb).coeff(0);
    const double s4 = (ff * ff * fbfb * fbfb).coeff(0);
    return {s1, s2, s3, s4, s4, s4};
}

double expected_cycle8_count(int gamma, int kappa, const CouplingPattern& pattern,
                             const EdgeDistribution& dist) {
    const StructureWeights w = StructureWeights::compute(gamma, kappa);
    const auto p = cycle8_structure_probabilities(pattern, dist);
    return static_cast<double>(w.w1) * p[0] + static_cast<double>(w.w2) * p[1] +
           static_cast<double>(w.w3) * p[2] + static_cast<double>(w.w4) * p[3];
}

std::vector<double> cycle6_gradient(const CouplingPattern& pattern, const EdgeDistribution& dist) {
    const LaurentPoly f = LaurentPoly::from_distribution(pattern, dist);
    const LaurentPoly fb = f.reversed();
    const LaurentPoly q = f * f * f * fb * fb;
    std::vector<double> g(pattern.a.size());
    for (std::size_t i = 0; i < pattern.a.size(); ++i) g[i] = 6.0 * q.coeff(pattern.a[i]);
    return g;
}

std::vector<double> cycle8_gradient(int gamma, int kappa, const CouplingPattern& pattern,
                                    const EdgeDistribution& dist) {
    const StructureWeights w = StructureWeights::compute(gamma, kappa);
    const LaurentPoly f = LaurentPoly::from_distribution(pattern, dist);
    const LaurentPoly fb = f.reversed();
    const LaurentPoly f2 = f.dilated2();
    const LaurentPoly f2b = f2.reversed();
    const LaurentPoly ff = f * f;
    const LaurentPoly fbfb = fb * fb;

    // One polynomial per extraction term of the stationarity condition; the
    // component at support point a_i reads coefficients at a_i, 2a_i, -a_i, -2a_i.
    const LaurentPoly t1 = ff * fb;                      // [4 f^2 fb]_{a_i}
    const LaurentPoly t2 = f2 * ff * fbfb;               // [2 f(X^2) f^2 fb^2]_{2 a_i}
    const LaurentPoly t3 = f2 * f2b * ff * fb;           // [4 f(X^2) f(X^-2) f^2 fb]_{a_i}
    const LaurentPoly t4 = ff * fbfb * fbfb;             // [f^2 fb^4]_{-2 a_i}
    const LaurentPoly t5 = f2 * f * fbfb * fbfb;         // [2 f(X^2) f fb^4]_{-a_i}
    const LaurentPoly t6 = f2 * ff * fb * fbfb;          // [4 f(X^2) f^2 fb^3]_{a_i}
    const LaurentPoly t7 = ff * ff * fb * fbfb;          // [8 f^4 fb^3]_{a_i}

    std::vector<double> g(pattern.a.size());
    for (std::size_t i = 0; i < pattern.a.size(); ++i) {
        const int a = pattern.a[i];
        g[i] = 4.0 * t1.coeff(a) +
               w.wbar2 * (2.0 * t2.coeff(2 * a) + 4.0 * t3.coeff(a)) +
               w.wbar3 * (t4.coeff(-2 * a) + 2.0 * t5.coeff(-a) + 4.0 * t6.coeff(a)) +
               w.wbar4 * 8.0 * t7.coeff(a);
    }
    return g;
}

namespace {

double wbar1(int gamma, int kappa, double cycle6_weight) {
    return (2.0 * cycle6_weight / 3.0) * (gamma - 2.0) * (kappa - 2.0);
}

}  // namespace

double combined_objective(int gamma, int kappa, const CouplingPattern& pattern,
                          const EdgeDistribution& dist, double cycle6_weight) {
    const StructureWeights w = StructureWeights::compute(gamma, kappa);
    const auto p = cycle8_structure_probabilities(pattern, dist);
    return wbar1(gamma, kappa, cycle6_weight) * cycle6_probability(pattern, dist) + p[0] +
           w.wbar2 * p[1] + w.wbar3 * p[2] + w.wbar4 * p[3];
}

std::vector<double> combined_gradient(int gamma, int kappa, const CouplingPattern& pattern,
                                      const EdgeDistribution& dist, double cycle6_weight) {
    std::vector<double> g = cycle8_gradient(gamma, kappa, pattern, dist);
    const std::vector<double> g6 = cycle6_gradient(pattern, dist);
    const double w1b = wbar1(gamma, kappa, cycle6_weight);
    for (std::size_t i = 0; i < g.size(); ++i) g[i] += w1b * g6[i];
    return g;
}

}  // namespace scopt
