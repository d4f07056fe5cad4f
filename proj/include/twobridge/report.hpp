#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "twobridge/invariants.hpp"
#include "twobridge/knot.hpp"
#include "twobridge/minimal_paths.hpp"
#include "twobridge/order.hpp"
#include "twobridge/ors.hpp"

namespace twobridge {

using Json = nlohmann::ordered_json;

Json slope_multiset_json(const SlopeMultiset& slopes);

/// Per-knot record: paths (when listed), slope multiset and derived counts.
Json knot_slopes_json(const TwoBridgeKnot& knot, const Rational& representative,
                      const std::vector<MinimalPath>* paths, const SlopeMultiset& slopes);

std::string knot_slopes_text(const TwoBridgeKnot& knot, const Rational& representative,
                             const std::vector<MinimalPath>* paths, const SlopeMultiset& slopes);

Json classification_json(const TwoBridgeKnot& knot, const std::optional<FamilyTag>& tag,
                         const ArithmeticTier& tier, const SlopeMultiset& computed);

Json ors_pair_json(const OrsPair& pair, const Theorem42Result& check);

Json order_verdict_json(const TwoBridgeKnot& k1, const TwoBridgeKnot& k2, const OrderVerdict& verdict);

std::string order_verdict_csv_row(const TwoBridgeKnot& k1, const TwoBridgeKnot& k2, const OrderVerdict& verdict);

Json minimality_report_json(const MinimalityReport& report);

std::string minimality_report_csv(const MinimalityReport& report);

/// Paths sorted for table display: descending unadjusted slope, then
/// lexicographic quotients.
std::vector<std::size_t> table_order(const std::vector<MinimalPath>& paths);

}  // namespace twobridge
