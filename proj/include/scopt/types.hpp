#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace scopt {

// Thrown for any domain-invariant violation; the CLI maps it to exit code 1.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

    T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<T>& data() const { return data_; }
    std::vector<T>& data() { return data_; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    int rows_, cols_;
    std::vector<T> data_;
};

using PartitioningMatrix = Matrix<int>;
using LiftingMatrix = Matrix<int>;

// Sorted indices of the nonzero component matrices; a.front() == 0 and
// a.back() == memory for a valid code.
struct CouplingPattern {
    std::vector<int> a;

    int pseudo_memory() const { return static_cast<int>(a.size()) - 1; }
    int last() const { return a.back(); }

    static CouplingPattern full(int memory) {
        CouplingPattern p;
        for (int i = 0; i <= memory; ++i) p.a.push_back(i);
        return p;
    }

    bool operator==(const CouplingPattern& o) const { return a == o.a; }
};

struct CodeParameters {
    int gamma = 0;          // base matrix rows
    int kappa = 0;          // base matrix columns
    int memory = 0;         // highest component index m
    CouplingPattern pattern;
    int circulant_size = 0; // z
    int replicas = 0;       // L

    bool operator==(const CodeParameters& o) const {
        return gamma == o.gamma && kappa == o.kappa && memory == o.memory &&
               pattern == o.pattern && circulant_size == o.circulant_size &&
               replicas == o.replicas;
    }
};

// Probability vector over the coupling-pattern support.
struct EdgeDistribution {
    std::vector<double> p;

    static EdgeDistribution uniform(int support_size) {
        EdgeDistribution d;
        d.p.assign(support_size, 1.0 / support_size);
        return d;
    }
};

struct CycleStats {
    std::int64_t protograph_candidates6 = 0;
    std::int64_t protograph_candidates8 = 0;
    // Full-graph convention: every placement of every surviving candidate over
    // the L replicas, times its circulant multiplicity.
    std::int64_t tanner_cycles6 = 0;
    std::int64_t tanner_cycles8 = 0;
    // Per-period convention: z * number of surviving candidates.
    std::int64_t tanner_period6 = 0;
    std::int64_t tanner_period8 = 0;
    double weighted_objective = 0.0;

    bool operator==(const CycleStats& o) const {
        return protograph_candidates6 == o.protograph_candidates6 &&
               protograph_candidates8 == o.protograph_candidates8 &&
               tanner_cycles6 == o.tanner_cycles6 && tanner_cycles8 == o.tanner_cycles8 &&
               tanner_period6 == o.tanner_period6 && tanner_period8 == o.tanner_period8 &&
               weighted_objective == o.weighted_objective;
    }
};

struct ConstructionResult {
    CodeParameters params;
    PartitioningMatrix partition;
    LiftingMatrix lifting;
    CycleStats stats;
    std::uint64_t seed = 0;

    bool operator==(const ConstructionResult& o) const {
        return params == o.params && partition == o.partition && lifting == o.lifting &&
               stats == o.stats && seed == o.seed;
    }
};

void validate(const CouplingPattern& pattern);
void validate(const CodeParameters& params);
void validate(const CodeParameters& params, const EdgeDistribution& dist);
void validate_partition(const CodeParameters& params, const PartitioningMatrix& p);
void validate_lifting(const CodeParameters& params, const LiftingMatrix& l);

}  // namespace scopt
