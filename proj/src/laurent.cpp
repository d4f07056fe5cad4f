#include "twobridge/laurent.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <sstream>

namespace twobridge {

LaurentPoly::LaurentPoly(std::vector<Int> coeffs, long long min_exp) : coeffs_(std::move(coeffs)), min_exp_(min_exp) {
    std::size_t lead = coeffs_.size();
    while (lead > 0 && coeffs_[lead - 1] == 0) --lead;
    coeffs_.resize(lead);
    std::size_t low = 0;
    while (low < coeffs_.size() && coeffs_[low] == 0) ++low;
    if (low > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(low));
        min_exp_ += static_cast<long long>(low);
    }
    if (coeffs_.empty()) {
        min_exp_ = 0;
        return;
    }
    if (coeffs_.back() < 0)
        for (Int& c : coeffs_) c = -c;
}

Int LaurentPoly::evaluate_at_one() const {
    Int s = 0;
    for (const Int& c : coeffs_) s += c;
    return s;
}

Int LaurentPoly::evaluate_at_minus_one() const {
    Int s = 0;
    bool odd = false;
    for (const Int& c : coeffs_) {
        s += odd ? Int(-c) : c;
        odd = !odd;
    }
    // Off by the unit (-1)^min_exp, irrelevant up to sign.
    return s;
}

bool LaurentPoly::is_symmetric() const {
    std::vector<Int> rev(coeffs_.rbegin(), coeffs_.rend());
    return LaurentPoly(std::move(rev), 0) == *this;
}

std::string LaurentPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        long long e = min_exp_ + static_cast<long long>(i);
        if (first) {
            os << coeffs_[i].str();
            first = false;
        } else {
            os << (coeffs_[i] > 0 ? " + " : " - ") << boost::multiprecision::abs(coeffs_[i]).str();
        }
        if (e != 0) os << "*t^" << e;
    }
    return os.str();
}

bool laurent_divides(const LaurentPoly& d, const LaurentPoly& n) {
    if (d.is_zero()) return n.is_zero();
    if (n.is_zero()) return true;
    if (n.degree_span() < d.degree_span()) return false;

    using Rat = boost::multiprecision::cpp_rational;
    std::vector<Rat> rem(n.coeffs().size());
    for (std::size_t i = 0; i < rem.size(); ++i) rem[i] = Rat(n.coeffs()[i]);
    const std::vector<Int>& dc = d.coeffs();

    // Long division from the top; divisibility over Z requires an exact
    // quotient that is also integral.
    std::vector<Rat> quot(rem.size() - dc.size() + 1);
    for (std::size_t qi = quot.size(); qi-- > 0;) {
        Rat factor = rem[qi + dc.size() - 1] / Rat(dc.back());
        quot[qi] = factor;
        if (factor != 0)
            for (std::size_t j = 0; j < dc.size(); ++j) rem[qi + j] -= factor * Rat(dc[j]);
    }
    for (const Rat& r : rem)
        if (r != 0) return false;
    for (const Rat& c : quot)
        if (boost::multiprecision::denominator(c) != 1) return false;
    return true;
}

}  // namespace twobridge
