#pragma once

#include <span>
#include <vector>

#include "scopt/types.hpp"

namespace scopt {

// Laurent polynomial with real coefficients over a signed degree range.
// Canonical form keeps the end coefficients nonzero (exact-zero trimming only,
// so structural zeros inside the range survive). The zero polynomial has an
// empty coefficient vector.
class LaurentPoly {
public:
    LaurentPoly() : lo_(0) {}
    LaurentPoly(int lo, std::vector<double> coeffs);

    static LaurentPoly constant(double c);
    static LaurentPoly from_distribution(const CouplingPattern& pattern,
                                         const EdgeDistribution& dist);

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<double>& coeffs() const { return coeffs_; }

    double coeff(int degree) const;
    double eval(double x) const;

    // substitution X -> X^-1
    LaurentPoly reversed() const;
    // substitution X -> X^2
    LaurentPoly dilated2() const;

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    bool operator==(const LaurentPoly& o) const { return lo_ == o.lo_ && coeffs_ == o.coeffs_; }

private:
    void trim();

    int lo_;
    std::vector<double> coeffs_;  // coeffs_[k] is the coefficient of X^(lo_ + k)
};

LaurentPoly product(std::span<const LaurentPoly> factors);

}  // namespace scopt
