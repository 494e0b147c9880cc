#include "scopt/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace scopt {

LaurentPoly::LaurentPoly(int lo, std::vector<double> coeffs) : lo_(lo), coeffs_(std::move(coeffs)) {
    trim();
}

void LaurentPoly::trim() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0.0) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        lo_ = 0;
        return;
    }
    std::size_t tail = coeffs_.size();
    while (tail > lead && coeffs_[tail - 1] == 0.0) --tail;
    if (lead > 0 || tail < coeffs_.size()) {
        coeffs_ = std::vector<double>(coeffs_.begin() + lead, coeffs_.begin() + tail);
        lo_ += static_cast<int>(lead);
    }
}

LaurentPoly LaurentPoly::constant(double c) { return LaurentPoly(0, {c}); }

LaurentPoly LaurentPoly::from_distribution(const CouplingPattern& pattern,
                                           const EdgeDistribution& dist) {
    if (pattern.a.size() != dist.p.size()) {
        std::ostringstream os;
        os << "coupling polynomial: pattern support size " << pattern.a.size()
           << " does not match distribution length " << dist.p.size();
        throw ValidationError(os.str());
    }
    std::vector<double> c(static_cast<std::size_t>(pattern.last()) + 1, 0.0);
    for (std::size_t i = 0; i < pattern.a.size(); ++i) c[pattern.a[i]] = dist.p[i];
    return LaurentPoly(0, std::move(c));
}

double LaurentPoly::coeff(int degree) const {
    const int k = degree - lo_;
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0.0;
    return coeffs_[k];
}

double LaurentPoly::eval(double x) const {
    double acc = 0.0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
    return acc * std::pow(x, lo_);
}

LaurentPoly LaurentPoly::reversed() const {
    if (is_zero()) return {};
    std::vector<double> c(coeffs_.rbegin(), coeffs_.rend());
    return LaurentPoly(-hi(), std::move(c));
}

LaurentPoly LaurentPoly::dilated2() const {
    if (is_zero()) return {};
    std::vector<double> c(2 * (coeffs_.size() - 1) + 1, 0.0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[2 * k] = coeffs_[k];
    return LaurentPoly(2 * lo_, std::move(c));
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<double> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        const double ai = a.coeffs_[i];
        if (ai == 0.0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += ai * b.coeffs_[j];
    }
    return LaurentPoly(a.lo_ + b.lo_, std::move(c));
}

LaurentPoly product(std::span<const LaurentPoly> factors) {
    if (factors.empty()) throw ValidationError("product: empty factor list");
    LaurentPoly acc = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) acc *= factors[i];
    return acc;
}

}  // namespace scopt
