#include "scopt/tc.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "scopt/metrics.hpp"

namespace scopt {

CouplingPattern search_coupling_pattern(int memory, int pseudo_memory, int gamma, int kappa,
                                        const GradeConfig& cfg) {
    if (pseudo_memory < 1 || pseudo_memory > memory) {
        throw ValidationError("pattern search: need 1 <= pseudo_memory <= memory");
    }
    const std::int64_t patterns = binomial(memory - 1, pseudo_memory - 1);
    if (patterns > 1000000) {
        std::ostringstream os;
        os << "pattern search: " << patterns << " candidate patterns exceed the 10^6 guard";
        throw ValidationError(os.str());
    }

    // middle entries are a (pseudo_memory - 1)-combination of 1..memory-1,
    // enumerated in lexicographic order so the first of a tied group wins
    std::vector<int> mid(pseudo_memory - 1);
    for (std::size_t k = 0; k < mid.size(); ++k) mid[k] = static_cast<int>(k) + 1;

    CouplingPattern best;
    double best_value = 0.0;
    bool have = false;
    // objective values of reflected patterns agree mathematically but differ in
    // float noise; treat anything this close as a tie
    const double tie_tol = 1e-9;

    for (;;) {
        CouplingPattern pattern;
        pattern.a.push_back(0);
        pattern.a.insert(pattern.a.end(), mid.begin(), mid.end());
        pattern.a.push_back(memory);

        const GradeResult gr = optimize_distribution(gamma, kappa, pattern, cfg);
        const double value = gr.trace.back();
        if (!have || value < best_value - tie_tol * std::max(1.0, std::abs(best_value))) {
            best = pattern;
            best_value = value;
            have = true;
        }

        // next combination
        int k = static_cast<int>(mid.size()) - 1;
        while (k >= 0 && mid[k] == memory - static_cast<int>(mid.size()) + k) --k;
        if (k < 0) break;
        ++mid[k];
        for (std::size_t t = k + 1; t < mid.size(); ++t) mid[t] = mid[t - 1] + 1;
    }
    return best;
}

ConstructionResult construct_tc_code(const CodeParameters& params, const GradeConfig& grade_cfg,
                                     const AoConfig& ao_cfg, const CpoConfig& cpo_cfg) {
    return construct_gd_code(params, grade_cfg, ao_cfg, cpo_cfg);
}

}  // namespace scopt
