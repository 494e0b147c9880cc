#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>

#include "scopt/counting.hpp"
#include "scopt/rng.hpp"

namespace scopt::test {

MonteCarlo mc_survivor_count(const CandidateList& list, const CouplingPattern& pattern,
                             const EdgeDistribution& dist, int draws, std::uint64_t seed) {
    const int gamma = list.gamma, kappa = list.kappa;
    std::vector<double> cdf(dist.p.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < dist.p.size(); ++i) {
        acc += dist.p[i];
        cdf[i] = acc;
    }
    std::int64_t sum = 0;
    std::int64_t sumsq = 0;
#pragma omp parallel for reduction(+ : sum, sumsq) schedule(static)
    for (int d = 0; d < draws; ++d) {
        Rng rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(d));
        PartitioningMatrix p(gamma, kappa);
        for (int i = 0; i < gamma; ++i) {
            for (int j = 0; j < kappa; ++j) {
                const double x = rng.unit();
                std::size_t k = 0;
                while (k + 1 < cdf.size() && x > cdf[k]) ++k;
                p(i, j) = pattern.a[k];
            }
        }
        const std::int64_t n = count_surviving_serial(list, p);
        sum += n;
        sumsq += n * n;
    }
    MonteCarlo out{};
    out.mean = static_cast<double>(sum) / draws;
    const double var =
        (static_cast<double>(sumsq) - static_cast<double>(sum) * out.mean) / (draws - 1);
    out.stderr_ = std::sqrt(std::max(0.0, var) / draws);
    return out;
}

double central_difference(const std::function<double(const std::vector<double>&)>& f,
                          std::vector<double> p, std::size_t i, double h) {
    std::vector<double> hi = p, lo = p;
    hi[i] += h;
    lo[i] -= h;
    return (f(hi) - f(lo)) / (2 * h);
}

RandomInstance random_instance(std::uint64_t seed, int max_memory) {
    Rng rng(seed);
    const int m = 1 + static_cast<int>(rng.below(max_memory));
    const int mt = 1 + static_cast<int>(rng.below(m));
    RandomInstance inst;
    inst.pattern.a.push_back(0);
    if (mt > 1) {
        std::vector<int> mids;
        for (int v = 1; v < m; ++v) mids.push_back(v);
        rng.shuffle(mids);
        mids.resize(mt - 1);
        std::sort(mids.begin(), mids.end());
        inst.pattern.a.insert(inst.pattern.a.end(), mids.begin(), mids.end());
    }
    inst.pattern.a.push_back(m);
    inst.dist.p.resize(mt + 1);
    double sum = 0.0;
    for (double& v : inst.dist.p) {
        v = 0.05 + rng.unit();
        sum += v;
    }
    for (double& v : inst.dist.p) v /= sum;
    return inst;
}

PartitioningMatrix random_partition(int gamma, int kappa, const CouplingPattern& pattern,
                                    std::uint64_t seed) {
    Rng rng(seed);
    PartitioningMatrix p(gamma, kappa);
    for (int& v : p.data()) v = pattern.a[rng.below(pattern.a.size())];
    return p;
}

LiftingMatrix random_lifting(int gamma, int kappa, int z, std::uint64_t seed) {
    Rng rng(seed ^ 0xabcdef12345ULL);
    LiftingMatrix l(gamma, kappa);
    for (int& v : l.data()) v = static_cast<int>(rng.below(z));
    return l;
}

}  // namespace scopt::test
