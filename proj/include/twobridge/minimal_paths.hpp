#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "twobridge/continued_fraction.hpp"
#include "twobridge/knot.hpp"
#include "twobridge/rational.hpp"

namespace twobridge {

/// A minimal edge path in the Farey graph from 1/0 to a fraction,
/// equivalently an expansion r+[b1,...,bk] with every |bi| >= 2.
struct MinimalPath {
    ContinuedFraction expansion;
    std::vector<Rational> vertices;     ///< 1/0, r/1, then one convergent per quotient
    long long unadjusted_slope = 0;     ///< sum of edge determinants, first edge excluded
    bool is_even = false;               ///< all partial quotients even
};

/// Boundary slopes with path multiplicities. Slopes are always even and 0 is
/// always present (contributed by the even path).
class SlopeMultiset {
public:
    SlopeMultiset() = default;
    /// Build from the multiset of unadjusted slopes m and the even path's m;
    /// each path contributes the slope -2*(m - m_even).
    SlopeMultiset(const std::map<long long, Int>& m_counts, long long m_even);

    const std::map<long long, Int>& entries() const { return entries_; }
    std::set<long long> distinct_slopes() const;
    std::size_t distinct_count() const { return entries_.size(); }
    Int path_count() const;
    long long min_slope() const { return entries_.begin()->first; }
    long long max_slope() const { return entries_.rbegin()->first; }
    long long diameter() const { return max_slope() - min_slope(); }
    long long crossing_number() const { return diameter() / 2; }
    bool contains(long long slope) const { return entries_.count(slope) != 0; }

    /// Slope multiset of the mirror image.
    SlopeMultiset negated() const;

    friend bool operator==(const SlopeMultiset& a, const SlopeMultiset& b) {
        return a.entries_ == b.entries_;
    }

private:
    std::map<long long, Int> entries_;
};

/// All expansions of x with every |quotient| >= 2, in lexicographic order of
/// the quotient vectors. Finite: convergent denominators strictly increase.
std::vector<MinimalPath> enumerate_minimal_expansions(const Rational& x);

std::vector<MinimalPath> enumerate_minimal_expansions(const TwoBridgeKnot& knot, const Int& representative_p);

/// The unique all-even expansion of x. The parity of each quotient is forced
/// step by step, so only the two choices of leading integer are tried; it is
/// an error if none or both survive.
MinimalPath even_expansion(const Rational& x);

/// Slope multiset computed without listing paths: unadjusted slopes satisfy
/// m = sum over positions j of (-1)^j * sign(b_j), which admits a memoized
/// recursion over expansion tails. Scales to very large denominators.
SlopeMultiset slope_multiset(const Rational& x);

SlopeMultiset boundary_slopes(const TwoBridgeKnot& knot, const Int& representative_p);

/// Slopes of the canonical representative.
SlopeMultiset boundary_slopes(const TwoBridgeKnot& knot);

/// Fibonacci with fib(1) = fib(2) = 1.
Int fibonacci(long long n);

/// Bounds on the number of distinct boundary slopes implied by a strongly
/// positive expansion with m quotients: at least 2 + floor(m/2), at most
/// fib(m+2).
std::pair<long long, Int> slope_count_bounds(const ContinuedFraction& sp);

struct ExtremalPaths {
    std::size_t upper_index;  ///< unique path of maximal unadjusted slope
    std::size_t lower_index;  ///< unique path of minimal unadjusted slope
};

/// Indices of the extremal paths; a tie at either extremum is an anomaly.
ExtremalPaths extremal_paths(const std::vector<MinimalPath>& paths);

}  // namespace twobridge
