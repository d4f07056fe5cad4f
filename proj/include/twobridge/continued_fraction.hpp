#pragma once

#include <string>
#include <utility>
#include <vector>

#include "twobridge/rational.hpp"

namespace twobridge {

/// Continued fraction r + 1/(b1 + 1/(b2 + ... + 1/bn)) with integer partial
/// quotients. Quotients may be negative, and zero is permitted transiently
/// between rewriting steps.
struct ContinuedFraction {
    Int integer_part = 0;
    std::vector<Int> quotients;

    ContinuedFraction() = default;
    ContinuedFraction(Int r, std::vector<Int> q) : integer_part(std::move(r)), quotients(std::move(q)) {}

    /// All quotients positive, first and last > 1, integer part zero.
    bool is_strongly_positive() const {
        if (integer_part != 0 || quotients.empty()) return false;
        for (const Int& b : quotients)
            if (b <= 0) return false;
        return quotients.front() > 1 && quotients.back() > 1;
    }

    bool all_quotients_even() const {
        for (const Int& b : quotients)
            if (b % 2 != 0) return false;
        return true;
    }

    friend bool operator==(const ContinuedFraction& a, const ContinuedFraction& b) {
        return a.integer_part == b.integer_part && a.quotients == b.quotients;
    }

    std::string str() const;
};

/// Exact value of the continued fraction. Total: the 2x2 matrix form never
/// breaks down, and 1/0 is a legal result. The sign ambiguity of the matrix
/// column is resolved by forcing the denominator to be non-negative.
Rational eval_cf(const ContinuedFraction& cf);

/// Vertex path in the Farey graph traced by the expansion: 1/0, r/1, then
/// one convergent per quotient. The last entry equals eval_cf.
std::vector<Rational> convergents(const ContinuedFraction& cf);

/// r+[a.., m, -n, b..] -> r+[a.., m-1, 1, n-1, -b..]; the quotient at `index`
/// must be negative and have a predecessor. Preserves the value exactly.
ContinuedFraction rewrite_negate(const ContinuedFraction& cf, std::size_t index);

/// r+[a.., m, 0, n, b..] -> r+[a.., m+n, b..]. A leading zero merges the
/// following quotient into the integer part; a trailing zero has no merge
/// partner and is rejected.
ContinuedFraction rewrite_drop_zero(const ContinuedFraction& cf, std::size_t index);

/// Euclidean expansion 0+[b1,...,bn] of x in (0,1) with every bi >= 1 and
/// bn > 1 (unique). The leading quotient is 1 exactly when x > 1/2.
ContinuedFraction euclidean_cf(const Rational& x);

struct StronglyPositiveCf {
    ContinuedFraction cf;   ///< strongly positive expansion
    Rational value;         ///< fraction the expansion evaluates to
    bool used_reversal;     ///< true when value is the reversal partner of the input
};

/// Strongly positive expansion of x = p/q (0 < x < 1, q odd). When the
/// Euclidean expansion starts with 1 the reversed expansion is returned
/// instead; it evaluates to p'/q with p*p' = (-1)^(n+1) mod q.
StronglyPositiveCf strongly_positive_cf(const Rational& x);

/// Reverse the quotient vector of a strongly positive expansion and return
/// the reversed expansion together with its value.
std::pair<ContinuedFraction, Rational> cf_reverse(const ContinuedFraction& cf);

ContinuedFraction parse_cf(const std::string& text);

}  // namespace twobridge
