#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "twobridge/knot.hpp"
#include "twobridge/laurent.hpp"
#include "twobridge/minimal_paths.hpp"

namespace twobridge {

/// Rows of the classification of 2-bridge knots with at most four distinct
/// boundary slopes, keyed by the strongly positive expansion shape.
enum class Family { T2, T3i, T3ii, T3iii, T4i, T4ii, T4iii, T4iv, T4v };

std::string family_name(Family f);
int family_slope_count(Family f);

struct FamilyTag {
    Family family;
    std::vector<Int> params;
    /// +1 when the matched expansion represents the canonical chirality, so
    /// predicted equals the canonical representative's computed multiset;
    /// -1 when it represents the mirror (predicted = negated computed).
    int chirality_sign;
    SlopeMultiset predicted;
    ContinuedFraction matched_expansion;
};

/// Match the strongly positive expansions of both chirality classes against
/// the family table. Returns nullopt exactly when the knot has five or more
/// distinct boundary slopes.
std::optional<FamilyTag> classify_family(const TwoBridgeKnot& knot);

struct ArithmeticTier {
    int tier = 0;  ///< predicted distinct slope count in {2,3,4}; 0 = none (>= 5)
    std::vector<std::string> matched_conditions;
};

/// Arithmetic slope-count conditions evaluated over all class
/// representatives, with lower tiers excluding higher ones.
ArithmeticTier corollary_arithmetic(const TwoBridgeKnot& knot);

/// Alexander polynomial of K_{p/q} from the 2-generator presentation:
/// sum over k < q of (-1)^k t^(e_k) with e_k the partial sums of
/// (-1)^floor(i*p/q). Requires an odd representative p.
LaurentPoly alexander_from_representative(const Int& p, const Int& q);

/// Alexander polynomial of the knot class, computed from its smallest odd
/// representative. Mirror-insensitive.
LaurentPoly alexander_general(const TwoBridgeKnot& knot);

/// Closed-form Alexander polynomial for the three-slope families.
LaurentPoly alexander_family(const FamilyTag& tag);

/// Genus of the curve attached to the two-parameter family with parameters
/// (b1 even, b2 odd).
Int genus_3ii(const Int& b1, const Int& b2);

/// Positive d for which the (d*b1, d*b2) and (b1, b2) family curves have
/// equal genus; expected to be exactly {1}.
std::set<Int> equal_genus_d(const Int& b1, const Int& b2, long long d_max = 1000);

}  // namespace twobridge
