#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>

namespace twobridge {

using Int = boost::multiprecision::cpp_int;

/// Exact fraction p/q in lowest terms with q >= 0. The single value 1/0
/// represents the point at infinity of the Farey graph; 0/0 is rejected.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Int numerator, Int denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
        normalize();
    }
    explicit Rational(Int value) : num_(std::move(value)), den_(1) {}
    explicit Rational(long long value) : num_(value), den_(1) {}

    static Rational infinity() { return Rational(1, 0); }

    const Int& numerator() const { return num_; }
    const Int& denominator() const { return den_; }

    bool is_infinite() const { return den_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return den_ != 0 && num_ == 0; }

    /// Largest integer <= this. Requires a finite value.
    Int floor() const {
        require_finite();
        Int q = num_ / den_;
        if (num_ < 0 && q * den_ != num_) --q;
        return q;
    }

    Int ceil() const {
        require_finite();
        Int q = num_ / den_;
        if (num_ > 0 && q * den_ != num_) ++q;
        return q;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    /// Order by value; 1/0 compares greater than every finite rational.
    friend bool operator<(const Rational& a, const Rational& b) {
        if (a.is_infinite()) return false;
        if (b.is_infinite()) return true;
        return a.num_ * b.den_ < b.num_ * a.den_;
    }

    std::string str() const { return num_.str() + "/" + den_.str(); }

private:
    void require_finite() const {
        if (is_infinite()) throw std::domain_error("operation requires a finite rational");
    }

    void normalize() {
        using boost::multiprecision::gcd;
        if (den_ == 0) {
            if (num_ == 0) throw std::domain_error("0/0 is not a rational");
            num_ = 1;
            return;
        }
        if (den_ < 0) {
            den_ = -den_;
            num_ = -num_;
        }
        Int g = gcd(num_ < 0 ? Int(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Int num_;
    Int den_;
};

/// Determinant of the directed Farey edge from a/b to c/d, i.e. a*d - c*b.
/// The pair is an edge of the Farey graph iff the result is +-1.
inline Int farey_edge_det(const Rational& from, const Rational& to) {
    return from.numerator() * to.denominator() - to.numerator() * from.denominator();
}

/// Mediant (a+c)/(b+d); the third vertex of both triangles over a Farey edge.
inline Rational mediant(const Rational& a, const Rational& b) {
    return Rational(a.numerator() + b.numerator(), a.denominator() + b.denominator());
}

Rational parse_rational(const std::string& text);

}  // namespace twobridge
