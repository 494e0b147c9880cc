#include "scopt/types.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace scopt {

void validate(const CouplingPattern& pattern) {
    if (pattern.a.empty()) throw ValidationError("coupling pattern: empty");
    if (pattern.a.front() != 0) {
        std::ostringstream os;
        os << "coupling pattern: a_0 must be 0, got " << pattern.a.front();
        throw ValidationError(os.str());
    }
    for (std::size_t i = 0; i < pattern.a.size(); ++i) {
        if (pattern.a[i] < 0) throw ValidationError("coupling pattern: negative entry");
        if (i > 0 && pattern.a[i] <= pattern.a[i - 1]) {
            std::ostringstream os;
            os << "coupling pattern: entries must be strictly increasing, a_" << i - 1 << "="
               << pattern.a[i - 1] << " >= a_" << i << "=" << pattern.a[i];
            throw ValidationError(os.str());
        }
    }
}

void validate(const CodeParameters& params) {
    if (params.gamma < 2) throw ValidationError("gamma must be >= 2");
    if (params.kappa < 2) throw ValidationError("kappa must be >= 2");
    if (params.memory < 0) throw ValidationError("memory must be >= 0");
    if (params.circulant_size < 2) throw ValidationError("circulant size must be >= 2");
    if (params.replicas < 1) throw ValidationError("replica count must be >= 1");
    validate(params.pattern);
    if (params.pattern.last() != params.memory) {
        std::ostringstream os;
        os << "coupling pattern: last entry " << params.pattern.last()
           << " must equal memory " << params.memory;
        throw ValidationError(os.str());
    }
    if (params.pattern.pseudo_memory() > params.memory) {
        throw ValidationError("pseudo-memory exceeds memory");
    }
}

void validate(const CodeParameters& params, const EdgeDistribution& dist) {
    const std::size_t want = params.pattern.a.size();
    if (dist.p.size() != want) {
        std::ostringstream os;
        os << "edge distribution: length " << dist.p.size() << " does not match support size "
           << want;
        throw ValidationError(os.str());
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < dist.p.size(); ++i) {
        if (!(dist.p[i] > 0.0) || dist.p[i] > 1.0) {
            std::ostringstream os;
            os << "edge distribution: p_" << i << "=" << dist.p[i] << " outside (0, 1]";
            throw ValidationError(os.str());
        }
        sum += dist.p[i];
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        std::ostringstream os;
        os << "edge distribution: sum " << sum << " differs from 1 by more than 1e-12";
        throw ValidationError(os.str());
    }
}

namespace {

void check_shape(const CodeParameters& params, const Matrix<int>& m, const char* name) {
    if (m.rows() != params.gamma || m.cols() != params.kappa) {
        std::ostringstream os;
        os << name << ": shape " << m.rows() << "x" << m.cols() << " does not match "
           << params.gamma << "x" << params.kappa;
        throw ValidationError(os.str());
    }
}

}  // namespace

void validate_partition(const CodeParameters& params, const PartitioningMatrix& p) {
    check_shape(params, p, "partitioning matrix");
    const auto& a = params.pattern.a;
    for (int i = 0; i < p.rows(); ++i) {
        for (int j = 0; j < p.cols(); ++j) {
            if (!std::binary_search(a.begin(), a.end(), p(i, j))) {
                std::ostringstream os;
                os << "partitioning matrix: entry (" << i << "," << j << ")=" << p(i, j)
                   << " not in the coupling-pattern support";
                throw ValidationError(os.str());
            }
        }
    }
}

void validate_lifting(const CodeParameters& params, const LiftingMatrix& l) {
    check_shape(params, l, "lifting matrix");
    for (int i = 0; i < l.rows(); ++i) {
        for (int j = 0; j < l.cols(); ++j) {
            if (l(i, j) < 0 || l(i, j) >= params.circulant_size) {
                std::ostringstream os;
                os << "lifting matrix: entry (" << i << "," << j << ")=" << l(i, j)
                   << " outside [0, " << params.circulant_size << ")";
                throw ValidationError(os.str());
            }
        }
    }
}

}  // namespace scopt
