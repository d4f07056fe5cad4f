#include "twobridge/order.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace twobridge {

namespace {

std::string join_ds(const std::set<long long>& ds) {
    std::ostringstream os;
    bool first = true;
    for (long long d : ds) {
        if (!first) os << " ";
        os << d;
        first = false;
    }
    return os.str();
}

}  // namespace

std::set<long long> slope_scaling_witnesses(const SlopeMultiset& s1, const SlopeMultiset& s2) {
    const std::set<long long> d1 = s1.distinct_slopes();
    const std::set<long long> d2 = s2.distinct_slopes();
    std::set<long long> out;
    if (s2.diameter() == 0) return out;
    const long long bound = s1.diameter() / s2.diameter();
    for (long long d = -bound; d <= bound; ++d) {
        if (d == 0 || d % 2 == 0) continue;
        bool plus = true, minus = true;
        for (long long s : d2) {
            if (!d1.count(d * s)) plus = false;
            if (!d1.count(-d * s)) minus = false;
            if (!plus && !minus) break;
        }
        if (plus || minus) out.insert(d);
    }
    return out;
}

OrderVerdict candidate_battery(const TwoBridgeKnot& k1, const TwoBridgeKnot& k2) {
    if (k1 == k2) throw std::invalid_argument("candidate_battery: knots are equivalent");

    OrderVerdict v;
    auto fail = [&v](const std::string& name, const std::string& detail) {
        v.checks.push_back({name, false, detail});
        v.excluded_by = name;
        return v;
    };

    // Determinant: q2 must properly divide q1.
    if (k1.q() % k2.q() != 0 || k1.q() == k2.q())
        return fail("determinant", k2.q().str() + " does not properly divide " + k1.q().str());
    v.checks.push_back({"determinant", true, "q1 = " + (k1.q() / k2.q()).str() + " * q2"});

    const SlopeMultiset s1 = boundary_slopes(k1);
    const SlopeMultiset s2 = boundary_slopes(k2);
    std::set<long long> ds = slope_scaling_witnesses(s1, s2);
    if (ds.empty()) return fail("slopes", "no odd d scales the slope set into the larger one");
    v.checks.push_back({"slopes", true, "d in {" + join_ds(ds) + "}"});

    // Crossing bound |d| * cr(K2) <= cr(K1); implied by the containment but
    // kept as its own pruning step.
    const long long cr1 = s1.crossing_number(), cr2 = s2.crossing_number();
    for (auto it = ds.begin(); it != ds.end();) {
        if (std::abs(*it) * cr2 > cr1)
            it = ds.erase(it);
        else
            ++it;
    }
    if (ds.empty()) return fail("crossing", "every scaling degree violates the crossing bound");
    v.checks.push_back({"crossing", true, "cr " + std::to_string(cr1) + " vs " + std::to_string(cr2)});

    const LaurentPoly a1 = alexander_general(k1);
    const LaurentPoly a2 = alexander_general(k2);
    if (!laurent_divides(a2, a1))
        return fail("alexander", "polynomial of the smaller knot does not divide the larger one's");
    v.checks.push_back({"alexander", true, "divides"});

    v.survives = true;
    v.witness_d = std::move(ds);
    return v;
}

MinimalityReport minimality_scan(const TwoBridgeKnot& k1) {
    MinimalityReport report;
    report.k1 = k1;

    const auto tag1 = classify_family(k1);
    const bool three_slopes = tag1 && family_slope_count(tag1->family) == 3;

    std::vector<Int> divisors;
    for (Int d = 3; d * d <= k1.q(); ++d) {
        if (k1.q() % d != 0) continue;
        divisors.push_back(d);
        Int other = k1.q() / d;
        if (other != d && other != k1.q()) divisors.push_back(other);
    }
    std::sort(divisors.begin(), divisors.end());

    for (const Int& q2 : divisors) {
        for (Int p2 = 1; p2 < q2; ++p2) {
            if (boost::multiprecision::gcd(p2, q2) != 1) continue;
            TwoBridgeKnot k2 = normalize_knot(p2, q2);
            if (k2.canonical_p() != p2) continue;  // one representative per class

            ScanCandidate cand{k2, candidate_battery(k1, k2), ""};
            if (three_slopes) {
                const auto tag2 = classify_family(k2);
                if (tag2)
                    cand.case_label = "(" + family_name(tag1->family) + "," + family_name(tag2->family) + ")";
            }
            if (cand.verdict.survives) report.survivor_indices.push_back(report.candidates.size());
            report.candidates.push_back(std::move(cand));
        }
    }
    return report;
}

std::set<Int> genus_case_check(const Int& a1, const Int& a2, const Int& b1, const Int& b2) {
    std::set<Int> out;
    // Slope scaling forces a single candidate degree a1/b1 = a2/b2.
    if (a1 % b1 != 0 || a2 % b2 != 0) return out;
    Int d = a1 / b1;
    if (d < 1 || a2 / b2 != d) return out;
    // Genus equality of the attached curves, cleared of denominators.
    if (d * (3 * d * b1 * b2 - 5 * b1 - 2 * b2) == 3 * b1 * b2 - 5 * b1 - 2 * b2) out.insert(d);
    return out;
}

std::set<Int> genus_case_check(const FamilyTag& tag1, const FamilyTag& tag2) {
    if (tag1.family != Family::T3ii || tag2.family != Family::T3ii)
        throw std::invalid_argument("genus_case_check: both knots must be in family 3_ii");
    return genus_case_check(tag1.params[0], tag1.params[1], tag2.params[0], tag2.params[1]);
}

}  // namespace twobridge
