#include "twobridge/invariants.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace twobridge {

std::string family_name(Family f) {
    switch (f) {
        case Family::T2: return "2";
        case Family::T3i: return "3_i";
        case Family::T3ii: return "3_ii";
        case Family::T3iii: return "3_iii";
        case Family::T4i: return "4_i";
        case Family::T4ii: return "4_ii";
        case Family::T4iii: return "4_iii";
        case Family::T4iv: return "4_iv";
        case Family::T4v: return "4_v";
    }
    throw std::logic_error("family_name: bad enum");
}

int family_slope_count(Family f) {
    switch (f) {
        case Family::T2: return 2;
        case Family::T3i:
        case Family::T3ii:
        case Family::T3iii: return 3;
        default: return 4;
    }
}

namespace {

SlopeMultiset multiset_from(const std::map<long long, Int>& entries) {
    // Expected sets are written down directly as slope -> multiplicity; reuse
    // the m-based constructor with m_even = 0 by translating slopes to m.
    std::map<long long, Int> m_counts;
    for (const auto& [slope, count] : entries) m_counts[-slope / 2] = count;
    return SlopeMultiset(m_counts, 0);
}

long long ll(const Int& v) { return v.convert_to<long long>(); }

struct RowMatch {
    Family family;
    std::vector<Int> params;
    SlopeMultiset predicted;
};

std::optional<RowMatch> match_row(const std::vector<Int>& v) {
    const std::size_t n = v.size();
    if (n == 1) {
        if (v[0] % 2 != 0)
            return RowMatch{Family::T2, {v[0]}, multiset_from({{0, 1}, {ll(2 * v[0]), 1}})};
        return std::nullopt;
    }
    if (n == 2) {
        const Int &a1 = v[0], &a2 = v[1];
        if (a1 % 2 == 0 && a2 % 2 == 0)
            return RowMatch{Family::T3i, {a1, a2},
                            multiset_from({{ll(-2 * a1), 1}, {0, 1}, {ll(2 * a2), 1}})};
        if (a1 % 2 == 0 && a2 % 2 != 0)
            return RowMatch{Family::T3ii, {a1, a2},
                            multiset_from({{0, 1}, {ll(2 * a1), 1}, {ll(2 * a1 + 2 * a2), 1}})};
        return std::nullopt;
    }
    if (n == 3) {
        const Int &a1 = v[0], &a2 = v[1], &a3 = v[2];
        if (a2 == 1) {
            if (a1 == a3 && a1 % 2 != 0)
                return RowMatch{Family::T3iii, {a1},
                                multiset_from({{ll(-4 * a1 - 2), 1}, {ll(-2 * a1 - 2), 2}, {0, 1}})};
            if (a1 != a3 && a1 % 2 != 0 && a3 % 2 != 0)
                return RowMatch{Family::T4ii, {a1, a3},
                                multiset_from({{ll(-2 * a1 - 2 * a3 - 2), 1},
                                               {ll(-2 * a3 - 2), 1},
                                               {ll(-2 * a1 - 2), 1},
                                               {0, 1}})};
            if (a1 != a3 && a1 % 2 == 0 && a3 % 2 != 0)
                return RowMatch{Family::T4iii, {a1, a3},
                                multiset_from({{ll(-2 * a1), 1},
                                               {0, 1},
                                               {ll(-2 * a1 + 2 * a3), 1},
                                               {ll(2 * a3 + 2), 1}})};
            return std::nullopt;
        }
        if (a1 == a3 && a1 % 2 != 0 && a2 % 2 != 0 && a2 > 1)
            return RowMatch{Family::T4i, {a1, a2},
                            multiset_from({{ll(-4 * a1 - 2 * a2), 1},
                                           {ll(-2 * a1 - 2 * a2), 2},
                                           {ll(-2 * a2), 1},
                                           {0, 1}})};
        return std::nullopt;
    }
    if (n == 4) {
        const Int& a1 = v[0];
        if (a1 % 2 == 0 && v[1] == 1 && v[2] == a1 && v[3] == a1 + 1)
            return RowMatch{Family::T4iv, {a1},
                            multiset_from({{ll(-2 * a1), 1},
                                           {0, 2},
                                           {ll(2 * a1 + 2), 2},
                                           {ll(4 * a1 + 4), 1}})};
        return std::nullopt;
    }
    if (n == 5 && v == std::vector<Int>{2, 1, 1, 1, 2})
        return RowMatch{Family::T4v, {}, multiset_from({{-8, 1}, {-4, 2}, {0, 3}, {6, 1}})};
    return std::nullopt;
}

}  // namespace

std::optional<FamilyTag> classify_family(const TwoBridgeKnot& knot) {
    // Try the Euclidean expansion of every class representative below q/2;
    // those are exactly the strongly positive expansions of the knot and of
    // its mirror image.
    for (const Int& rep : knot.class_reps()) {
        if (2 * rep > knot.q()) continue;
        ContinuedFraction e = euclidean_cf(Rational(rep, knot.q()));
        auto row = match_row(e.quotients);
        if (!row) continue;
        FamilyTag tag;
        tag.family = row->family;
        tag.params = std::move(row->params);
        tag.chirality_sign = knot.same_chirality_as_canonical(rep) ? 1 : -1;
        tag.predicted = std::move(row->predicted);
        tag.matched_expansion = std::move(e);
        return tag;
    }
    return std::nullopt;
}

ArithmeticTier corollary_arithmetic(const TwoBridgeKnot& knot) {
    const Int& q = knot.q();
    ArithmeticTier out;
    std::vector<std::string> tier2, tier3, tier4;
    for (const Int& r : knot.class_reps()) {
        if (r == 1) tier2.push_back("p=1");
        if ((q - 1) % r == 0) tier3.push_back("p|q-1 (p=" + r.str() + ")");
        if (r * r == q + 1) tier3.push_back("p^2=q+1 (p=" + r.str() + ")");
        if (q % (r + 1) == 0 && (r * r - 1) % q == 0) tier4.push_back("p+1|q, q|p^2-1 (p=" + r.str() + ")");
        if ((q + 1) % r == 0) tier4.push_back("p|q+1 (p=" + r.str() + ")");
        if ((r - 1) * (r - 1) * (r - 1) == q * q) tier4.push_back("(p-1)^3=q^2 (p=" + r.str() + ")");
        if (q == 21 && (r == 8 || r == 13)) tier4.push_back("p/q=8/21");
    }
    if (!tier2.empty()) {
        out.tier = 2;
        out.matched_conditions = std::move(tier2);
    } else if (!tier3.empty()) {
        out.tier = 3;
        out.matched_conditions = std::move(tier3);
    } else if (!tier4.empty()) {
        out.tier = 4;
        out.matched_conditions = std::move(tier4);
    }
    return out;
}

LaurentPoly alexander_from_representative(const Int& p, const Int& q) {
    if (p % 2 == 0) throw std::invalid_argument("alexander_from_representative: p must be odd");
    std::map<long long, Int> coeff;
    Int e = 0;
    coeff[0] += 1;  // k = 0 term
    bool negative = true;
    for (Int i = 1; i < q; ++i, negative = !negative) {
        Int floor_term = i * p / q;
        e += (floor_term % 2 == 0) ? 1 : -1;
        coeff[ll(e)] += negative ? -1 : 1;
    }

    long long min_e = coeff.begin()->first;
    long long max_e = coeff.rbegin()->first;
    std::vector<Int> c(static_cast<std::size_t>(max_e - min_e + 1));
    for (const auto& [exp, v] : coeff) c[static_cast<std::size_t>(exp - min_e)] = v;
    return LaurentPoly(std::move(c), min_e);
}

LaurentPoly alexander_general(const TwoBridgeKnot& knot) {
    // Mirror-invariant, so any odd representative gives the same polynomial
    // up to units; pick the smallest for determinism.
    for (const Int& r : knot.class_reps())
        if (r % 2 != 0) return alexander_from_representative(r, knot.q());
    throw std::logic_error("alexander_general: no odd representative");
}

LaurentPoly alexander_family(const FamilyTag& tag) {
    switch (tag.family) {
        case Family::T3i: {
            // The tabulated row fails |poly(-1)| = q for every parameter
            // choice; the sign-corrected form below satisfies it and matches
            // the general computation.
            const Int &a1 = tag.params[0], &a2 = tag.params[1];
            Int c = a1 * a2 / 4;
            return LaurentPoly({c, -(1 + a1 * a2 / 2), c}, 0);
        }
        case Family::T3ii: {
            const Int &a1 = tag.params[0], &a2 = tag.params[1];
            std::size_t deg = static_cast<std::size_t>(ll(a1));
            std::vector<Int> c(deg + 1);
            c[0] = (a2 + 1) / 2;
            c[deg] = (a2 + 1) / 2;
            for (std::size_t i = 1; i < deg; ++i) c[i] = (i % 2 == 1) ? Int(-a2) : a2;
            return LaurentPoly(std::move(c), 0);
        }
        case Family::T3iii: {
            const Int& a1 = tag.params[0];
            Int s = (a1 + 1) * (a1 + 1) / 4;
            return LaurentPoly({s, 1 - 2 * s, s}, 0);
        }
        default:
            throw std::invalid_argument("alexander_family: closed form only for the three-slope families");
    }
}

Int genus_3ii(const Int& b1, const Int& b2) {
    if (b1 % 2 != 0 || b1 < 2 || b2 % 2 == 0 || b2 < 1)
        throw std::invalid_argument("genus_3ii: requires b1 even >= 2, b2 odd >= 1");
    return 3 * ((b2 + 1) / 2) * (b1 / 2) - (b2 + 1) / 2 - 4 * (b1 / 2) + 2;
}

std::set<Int> equal_genus_d(const Int& b1, const Int& b2, long long d_max) {
    std::set<Int> out;
    const Int rhs = 3 * b1 * b2 - 5 * b1 - 2 * b2;
    for (Int d = 1; d <= d_max; ++d)
        if (d * (3 * d * b1 * b2 - 5 * b1 - 2 * b2) == rhs) out.insert(d);
    return out;
}

}  // namespace twobridge
