#include "twobridge/continued_fraction.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace twobridge {

namespace {

// Column state of the running matrix product (r,1;1,0)(b1,1;1,0)...: the
// first column (p,q) is the current convergent, the second the previous one.
struct MatrixColumns {
    Int p = 1, q = 0;        // current
    Int p_prev = 0, q_prev = 1;  // previous

    void push(const Int& b) {
        Int np = b * p + p_prev;
        Int nq = b * q + q_prev;
        p_prev = std::move(p);
        q_prev = std::move(q);
        p = std::move(np);
        q = std::move(nq);
    }

    Rational current() const { return Rational(p, q); }
};

}  // namespace

Rational eval_cf(const ContinuedFraction& cf) {
    MatrixColumns m;
    m.push(cf.integer_part);
    for (const Int& b : cf.quotients) m.push(b);
    return m.current();
}

std::vector<Rational> convergents(const ContinuedFraction& cf) {
    std::vector<Rational> out;
    out.reserve(cf.quotients.size() + 2);
    MatrixColumns m;
    out.push_back(m.current());  // 1/0
    m.push(cf.integer_part);
    out.push_back(m.current());  // r/1
    for (const Int& b : cf.quotients) {
        m.push(b);
        out.push_back(m.current());
    }
    return out;
}

ContinuedFraction rewrite_negate(const ContinuedFraction& cf, std::size_t index) {
    if (index >= cf.quotients.size() || index == 0)
        throw std::invalid_argument("rewrite_negate: index must point at a quotient with a predecessor");
    if (cf.quotients[index] >= 0)
        throw std::invalid_argument("rewrite_negate: quotient at index is not negative");

    const Int n = -cf.quotients[index];
    ContinuedFraction out;
    out.integer_part = cf.integer_part;
    out.quotients.reserve(cf.quotients.size() + 1);
    for (std::size_t i = 0; i + 1 < index; ++i) out.quotients.push_back(cf.quotients[i]);
    out.quotients.push_back(cf.quotients[index - 1] - 1);
    out.quotients.push_back(1);
    out.quotients.push_back(n - 1);
    for (std::size_t i = index + 1; i < cf.quotients.size(); ++i)
        out.quotients.push_back(-cf.quotients[i]);
    return out;
}

ContinuedFraction rewrite_drop_zero(const ContinuedFraction& cf, std::size_t index) {
    if (index >= cf.quotients.size() || cf.quotients[index] != 0)
        throw std::invalid_argument("rewrite_drop_zero: quotient at index is not zero");
    if (index + 1 >= cf.quotients.size())
        throw std::invalid_argument("rewrite_drop_zero: trailing zero has no merge partner");

    ContinuedFraction out;
    out.quotients.reserve(cf.quotients.size() - 2);
    if (index == 0) {
        // r+[0, n, b..] = (r+n)+[b..]
        out.integer_part = cf.integer_part + cf.quotients[1];
        for (std::size_t i = 2; i < cf.quotients.size(); ++i) out.quotients.push_back(cf.quotients[i]);
        return out;
    }
    out.integer_part = cf.integer_part;
    for (std::size_t i = 0; i + 1 < index; ++i) out.quotients.push_back(cf.quotients[i]);
    out.quotients.push_back(cf.quotients[index - 1] + cf.quotients[index + 1]);
    for (std::size_t i = index + 2; i < cf.quotients.size(); ++i) out.quotients.push_back(cf.quotients[i]);
    return out;
}

ContinuedFraction euclidean_cf(const Rational& x) {
    if (x.is_infinite() || x.numerator() <= 0 || x.numerator() >= x.denominator())
        throw std::domain_error("euclidean_cf: argument must lie strictly between 0 and 1");
    ContinuedFraction out;
    // Plain continued fraction algorithm on q/p; all quotients >= 1, last > 1.
    Int num = x.denominator(), den = x.numerator();
    while (den != 0) {
        Int b = num / den;
        Int rem = num - b * den;
        if (rem == 0 && b == 1) throw std::logic_error("euclidean_cf: unit quotient at tail");
        out.quotients.push_back(b);
        num = std::move(den);
        den = std::move(rem);
    }
    return out;
}

StronglyPositiveCf strongly_positive_cf(const Rational& x) {
    if (x.is_infinite() || x.denominator() % 2 == 0)
        throw std::domain_error("strongly_positive_cf: denominator must be odd");
    ContinuedFraction e = euclidean_cf(x);
    if (e.quotients.front() > 1) return {e, x, false};

    // Leading quotient 1: reverse the vector and absorb the trailing 1,
    // [1, b2, ..., bn] -> [bn, ..., b3, b2+1].
    ContinuedFraction r;
    r.quotients.reserve(e.quotients.size() - 1);
    for (std::size_t i = e.quotients.size(); i-- > 2;) r.quotients.push_back(e.quotients[i]);
    r.quotients.push_back(e.quotients[1] + 1);
    Rational value = eval_cf(r);
    if (value.denominator() != x.denominator())
        throw std::logic_error("strongly_positive_cf: reversal changed the denominator");
    return {r, value, true};
}

std::pair<ContinuedFraction, Rational> cf_reverse(const ContinuedFraction& cf) {
    if (!cf.is_strongly_positive())
        throw std::invalid_argument("cf_reverse: expansion is not strongly positive");
    ContinuedFraction rev;
    rev.quotients.assign(cf.quotients.rbegin(), cf.quotients.rend());
    Rational value = eval_cf(rev);

    // p * p' = (-1)^(n+1) mod q, n the number of quotients.
    const Rational orig = eval_cf(cf);
    const Int q = orig.denominator();
    Int prod = orig.numerator() * value.numerator() % q;
    if (prod < 0) prod += q;
    Int expect = (cf.quotients.size() % 2 == 0) ? Int(q - 1) : Int(1);
    if (prod % q != expect % q)
        throw std::logic_error("cf_reverse: reversal congruence violated");
    return {rev, value};
}

std::string ContinuedFraction::str() const {
    std::ostringstream os;
    os << integer_part.str() << "+[";
    for (std::size_t i = 0; i < quotients.size(); ++i) {
        if (i) os << ",";
        os << quotients[i].str();
    }
    os << "]";
    return os.str();
}

namespace {

bool parse_int(const std::string& s, std::size_t& pos, Int& out) {
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) {
        pos = start;
        return false;
    }
    out = Int(s.substr(start, pos - start));
    return true;
}

std::string strip_spaces(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    return s;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const std::string s = strip_spaces(text);
    std::size_t pos = 0;
    Int num;
    if (!parse_int(s, pos, num)) throw std::invalid_argument("parse_rational: expected integer in '" + text + "'");
    if (pos == s.size()) return Rational(num, 1);
    if (s[pos] != '/') throw std::invalid_argument("parse_rational: expected '/' in '" + text + "'");
    ++pos;
    Int den;
    if (!parse_int(s, pos, den) || pos != s.size())
        throw std::invalid_argument("parse_rational: malformed fraction '" + text + "'");
    return Rational(num, den);
}

ContinuedFraction parse_cf(const std::string& text) {
    const std::string s = strip_spaces(text);
    std::size_t pos = 0;
    ContinuedFraction cf;
    if (pos < s.size() && s[pos] != '[') {
        if (!parse_int(s, pos, cf.integer_part) || pos >= s.size() || s[pos] != '+')
            throw std::invalid_argument("parse_cf: expected 'r+[...]' in '" + text + "'");
        ++pos;
    }
    if (pos >= s.size() || s[pos] != '[') throw std::invalid_argument("parse_cf: expected '[' in '" + text + "'");
    ++pos;
    if (pos < s.size() && s[pos] == ']') {
        ++pos;
    } else {
        while (true) {
            Int b;
            if (!parse_int(s, pos, b)) throw std::invalid_argument("parse_cf: expected quotient in '" + text + "'");
            cf.quotients.push_back(b);
            if (pos < s.size() && s[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < s.size() && s[pos] == ']') {
                ++pos;
                break;
            }
            throw std::invalid_argument("parse_cf: malformed quotient list in '" + text + "'");
        }
    }
    if (pos != s.size()) throw std::invalid_argument("parse_cf: trailing characters in '" + text + "'");
    return cf;
}

}  // namespace twobridge
