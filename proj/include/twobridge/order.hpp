#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "twobridge/invariants.hpp"
#include "twobridge/knot.hpp"
#include "twobridge/minimal_paths.hpp"

namespace twobridge {

struct CheckOutcome {
    std::string name;
    bool passed;
    std::string detail;
};

/// Outcome of the necessary-condition battery for K1 >= K2. "Survives" only
/// means no computable obstruction fired; it never asserts the order holds.
struct OrderVerdict {
    bool survives = false;
    std::string excluded_by;            ///< first failed check, in evaluation order
    std::set<long long> witness_d;      ///< odd longitude degrees consistent with all checks
    std::vector<CheckOutcome> checks;

    std::string verdict_string() const { return survives ? "survives" : "excluded(" + excluded_by + ")"; }
};

/// Odd nonzero d with d * distinct(S2) contained in distinct(S1) or its
/// negation; |d| is capped by the diameter ratio.
std::set<long long> slope_scaling_witnesses(const SlopeMultiset& s1, const SlopeMultiset& s2);

/// Run the battery in the fixed order: determinant divisibility, slope
/// scaling, crossing bound, Alexander divisibility. The knots must be
/// inequivalent.
OrderVerdict candidate_battery(const TwoBridgeKnot& k1, const TwoBridgeKnot& k2);

struct ScanCandidate {
    TwoBridgeKnot k2;
    OrderVerdict verdict;
    std::string case_label;  ///< "(3_x,3_y)" when both knots have three slopes
};

struct MinimalityReport {
    TwoBridgeKnot k1;
    std::vector<ScanCandidate> candidates;
    std::vector<std::size_t> survivor_indices;
};

/// Run the battery against every knot class whose denominator properly
/// divides q1. An empty survivor list is the desk-scale analogue of
/// minimality.
MinimalityReport minimality_scan(const TwoBridgeKnot& k1);

/// d values consistent with both slope scaling (a = d*b componentwise) and
/// genus equality of the attached curves, for two-parameter family knots.
std::set<Int> genus_case_check(const Int& a1, const Int& a2, const Int& b1, const Int& b2);

/// Same check starting from classified knots; both must be in family 3_ii.
std::set<Int> genus_case_check(const FamilyTag& tag1, const FamilyTag& tag2);

}  // namespace twobridge
