#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "altiset/collective.hpp"
#include "altiset/dependence.hpp"
#include "altiset/geoalt.hpp"
#include "altiset/induced_orders.hpp"
#include "altiset/relation.hpp"

// Dataset formats. Parsers validate strictly and throw ParseError naming the
// offending field and, for CSV, the 1-based line. Emitters produce canonical
// text that the matching parser maps back to an equal value.
namespace altiset::io {

// {"size": n, "labels": [...]?, "pairs": [[a, b], ...]}
FiniteRelation parse_relation_json(std::string_view text);
std::string emit_relation_json(const FiniteRelation& r);

// {"size": n, "labels": [...]?,
//  "orders": [{"keys": [...], "direction": "gain"|"price"}, ...]}
// Keys are JSON numbers or decimal strings.
OrderSystem parse_system_json(std::string_view text);
std::string emit_system_json(const OrderSystem& s);

// Two numeric columns x,y; optional header line.
PointSet2D parse_points_csv(std::string_view text);
std::string emit_points_csv(const PointSet2D& s);

// {"elements": [...], "h": {"a": 3, ...}, "family": [["a", "c"], ...]}
SubsetFamily parse_family_json(std::string_view text);
std::string emit_family_json(const SubsetFamily& f);

// Columns x,h (real line) or x,y,h (plane); optional header line.
struct SummitTable {
    bool planar = false;
    std::vector<Point2> points;
    std::vector<double> altitudes;
    bool operator==(const SummitTable&) const = default;
};
SummitTable parse_summits_csv(std::string_view text);
std::string emit_summits_csv(const SummitTable& t);

/// Shortest decimal text that reads back as the same double.
std::string format_double(double v);

} // namespace altiset::io
