#include "twobridge/report.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace twobridge {

namespace {

Json int_json(const Int& v) {
    // Values beyond 64 bits are emitted as decimal strings.
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return Json(v.convert_to<long long>());
    return Json(v.str());
}

std::string path_vertices_text(const MinimalPath& p) {
    std::ostringstream os;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        if (i) os << " ";
        os << p.vertices[i].str();
    }
    return os.str();
}

}  // namespace

std::vector<std::size_t> table_order(const std::vector<MinimalPath>& paths) {
    std::vector<std::size_t> order(paths.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (paths[a].unadjusted_slope != paths[b].unadjusted_slope)
            return paths[a].unadjusted_slope > paths[b].unadjusted_slope;
        return std::lexicographical_compare(
            paths[a].expansion.quotients.begin(), paths[a].expansion.quotients.end(),
            paths[b].expansion.quotients.begin(), paths[b].expansion.quotients.end());
    });
    return order;
}

Json slope_multiset_json(const SlopeMultiset& slopes) {
    Json out = Json::object();
    for (const auto& [slope, count] : slopes.entries()) out[std::to_string(slope)] = int_json(count);
    return out;
}

Json knot_slopes_json(const TwoBridgeKnot& knot, const Rational& representative,
                      const std::vector<MinimalPath>* paths, const SlopeMultiset& slopes) {
    Json out;
    out["p"] = int_json(representative.numerator());
    out["q"] = int_json(knot.q());
    out["canonical_p"] = int_json(knot.canonical_p());
    if (paths) {
        Json rows = Json::array();
        const long long m_even = [&] {
            for (const MinimalPath& p : *paths)
                if (p.is_even) return p.unadjusted_slope;
            return 0LL;
        }();
        for (std::size_t i : table_order(*paths)) {
            const MinimalPath& p = (*paths)[i];
            Json row;
            row["cf"] = p.expansion.str();
            row["m"] = p.unadjusted_slope;
            row["slope"] = -2 * (p.unadjusted_slope - m_even);
            rows.push_back(std::move(row));
        }
        out["paths"] = std::move(rows);
    }
    out["slopes"] = slope_multiset_json(slopes);
    out["distinct"] = static_cast<long long>(slopes.distinct_count());
    out["diameter"] = slopes.diameter();
    out["crossing_number"] = slopes.crossing_number();
    return out;
}

std::string knot_slopes_text(const TwoBridgeKnot& knot, const Rational& representative,
                             const std::vector<MinimalPath>* paths, const SlopeMultiset& slopes) {
    std::ostringstream os;
    os << "K_{" << representative.str() << "}  canonical p = " << knot.canonical_p().str() << "  class {";
    for (std::size_t i = 0; i < knot.class_reps().size(); ++i) {
        if (i) os << ",";
        os << knot.class_reps()[i].str();
    }
    os << "}\n";
    if (paths) {
        const long long m_even = [&] {
            for (const MinimalPath& p : *paths)
                if (p.is_even) return p.unadjusted_slope;
            return 0LL;
        }();
        os << "minimal path | fraction | m | slope\n";
        for (std::size_t i : table_order(*paths)) {
            const MinimalPath& p = (*paths)[i];
            os << path_vertices_text(p) << " | " << p.expansion.str() << " | " << p.unadjusted_slope << " | "
               << -2 * (p.unadjusted_slope - m_even) << "\n";
        }
    } else {
        os << "(paths not listed: " << slopes.path_count().str() << " minimal paths)\n";
    }
    os << "slopes:";
    for (const auto& [slope, count] : slopes.entries()) {
        os << " " << slope;
        if (count > 1) os << "^" << count.str();
    }
    os << "\ndistinct: " << slopes.distinct_count() << "  diameter: " << slopes.diameter()
       << "  crossing number: " << slopes.crossing_number() << "\n";
    return os.str();
}

Json classification_json(const TwoBridgeKnot& knot, const std::optional<FamilyTag>& tag,
                         const ArithmeticTier& tier, const SlopeMultiset& computed) {
    Json out;
    out["knot"] = knot.str();
    out["canonical_p"] = int_json(knot.canonical_p());
    out["distinct"] = static_cast<long long>(computed.distinct_count());
    if (tag) {
        out["family"] = family_name(tag->family);
        Json params = Json::array();
        for (const Int& p : tag->params) params.push_back(int_json(p));
        out["params"] = std::move(params);
        out["chirality"] = tag->chirality_sign;
        out["predicted_slopes"] = slope_multiset_json(tag->predicted);
        out["matched_expansion"] = tag->matched_expansion.str();
    } else {
        out["family"] = nullptr;
    }
    out["arithmetic_tier"] = tier.tier;
    out["arithmetic_conditions"] = tier.matched_conditions;
    return out;
}

Json ors_pair_json(const OrsPair& pair, const Theorem42Result& check) {
    Json out;
    Json seed = Json::array();
    for (const Int& a : pair.seed) seed.push_back(int_json(a));
    out["seed"] = std::move(seed);
    Json word = Json::array();
    for (const OrsSyllable& s : pair.word.syllables()) word.push_back(Json::array({int_json(s.c), s.eta}));
    out["word"] = std::move(word);
    out["raw"] = pair.raw_cf.str();
    out["reduced"] = pair.reduced_cf.str();
    out["child"] = pair.child_value.str();
    out["parent"] = pair.parent.str();
    out["dichotomy"] = check.branch == Dichotomy::torus_case ? "torus" : "at_least_five";
    out["distinct"] = check.distinct_slopes;
    return out;
}

Json order_verdict_json(const TwoBridgeKnot& k1, const TwoBridgeKnot& k2, const OrderVerdict& verdict) {
    Json out;
    out["k1"] = k1.str();
    out["k2"] = k2.str();
    out["verdict"] = verdict.survives ? "survives" : "excluded";
    if (!verdict.survives) out["excluded_by"] = verdict.excluded_by;
    out["witness_d"] = verdict.witness_d;
    Json checks = Json::array();
    for (const CheckOutcome& c : verdict.checks)
        checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    out["checks"] = std::move(checks);
    return out;
}

std::string order_verdict_csv_row(const TwoBridgeKnot& k1, const TwoBridgeKnot& k2, const OrderVerdict& verdict) {
    std::ostringstream os;
    os << k1.str() << "," << k2.str() << "," << (verdict.survives ? "survives" : "excluded") << ","
       << verdict.excluded_by << ",";
    bool first = true;
    for (long long d : verdict.witness_d) {
        if (!first) os << " ";
        os << d;
        first = false;
    }
    return os.str();
}

Json minimality_report_json(const MinimalityReport& report) {
    Json out;
    out["k1"] = report.k1.str();
    Json rows = Json::array();
    for (const ScanCandidate& c : report.candidates) {
        Json row = order_verdict_json(report.k1, c.k2, c.verdict);
        if (!c.case_label.empty()) row["case"] = c.case_label;
        rows.push_back(std::move(row));
    }
    out["candidates"] = std::move(rows);
    out["survivors"] = static_cast<long long>(report.survivor_indices.size());
    return out;
}

std::string minimality_report_csv(const MinimalityReport& report) {
    std::ostringstream os;
    os << "k1,k2,verdict,failing_check,witness_d\n";
    for (const ScanCandidate& c : report.candidates)
        os << order_verdict_csv_row(report.k1, c.k2, c.verdict) << "\n";
    return os.str();
}

}  // namespace twobridge
