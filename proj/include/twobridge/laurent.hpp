#pragma once

#include <string>
#include <vector>

#include "twobridge/rational.hpp"

namespace twobridge {

/// Integer Laurent polynomial normalized up to units +-t^k: nonzero constant
/// term, positive leading coefficient. Two polynomials are equal up to units
/// iff their normalized coefficient vectors coincide.
class LaurentPoly {
public:
    LaurentPoly() = default;
    /// coeffs[i] is the coefficient of t^(min_exp + i); normalizes on build.
    LaurentPoly(std::vector<Int> coeffs, long long min_exp);

    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    long long min_exp() const { return min_exp_; }
    long long degree_span() const { return coeffs_.empty() ? -1 : static_cast<long long>(coeffs_.size()) - 1; }

    Int evaluate_at_one() const;
    Int evaluate_at_minus_one() const;

    /// p(t) agrees with p(1/t) up to units.
    bool is_symmetric() const;

    /// Equality up to units +-t^k.
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    std::string str() const;

private:
    std::vector<Int> coeffs_;
    long long min_exp_ = 0;
};

/// True iff n = d * c for an integer Laurent polynomial c, up to units.
bool laurent_divides(const LaurentPoly& d, const LaurentPoly& n);

}  // namespace twobridge
