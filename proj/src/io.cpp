#include "altiset/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include <json.hpp>

#include "altiset/errors.hpp"

namespace altiset::io {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        // Byte offset -> 1-based line.
        const auto upto = std::min<std::size_t>(e.byte, text.size());
        const auto line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + upto, '\n'));
        throw ParseError(std::string("malformed JSON: ") + e.what(), line);
    }
}

void expect_object(const json& j, std::string_view what, std::initializer_list<std::string_view> allowed) {
    if (!j.is_object()) throw ParseError(std::string(what) + " must be a JSON object", 0, std::string(what));
    for (const auto& [k, v] : j.items())
        if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
            throw ParseError("unexpected field '" + k + "'", 0, k);
}

const json& require(const json& j, const std::string& field) {
    auto it = j.find(field);
    if (it == j.end()) throw ParseError("missing field '" + field + "'", 0, field);
    return *it;
}

std::size_t as_index(const json& j, const std::string& field) {
    if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0))
        throw ParseError("field '" + field + "' must be a non-negative integer", 0, field);
    return j.get<std::size_t>();
}

std::vector<std::string> as_labels(const json& j, const std::string& field) {
    if (!j.is_array()) throw ParseError("field '" + field + "' must be an array of strings", 0, field);
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const auto& e : j) {
        if (!e.is_string()) throw ParseError("field '" + field + "' must contain strings only", 0, field);
        if (!seen.insert(e.get<std::string>()).second)
            throw ParseError("duplicate label '" + e.get<std::string>() + "' in '" + field + "'", 0, field);
        out.push_back(e.get<std::string>());
    }
    return out;
}

Universe universe_from(const json& j) {
    const auto n = as_index(require(j, "size"), "size");
    if (!j.contains("labels")) return Universe(n);
    auto labels = as_labels(j["labels"], "labels");
    if (labels.size() != n) throw ParseError("'labels' length differs from 'size'", 0, "labels");
    return Universe(std::move(labels));
}

void put_universe(json& j, const Universe& u) {
    j["size"] = u.size();
    if (u.has_labels()) j["labels"] = u.labels();
}

Key as_key(const json& j, const std::string& field) {
    try {
        if (j.is_number_unsigned()) return Key::parse(std::to_string(j.get<std::uint64_t>()));
        if (j.is_number_integer()) return Key(j.get<std::int64_t>());
        if (j.is_number_float()) return Key::from_double(j.get<double>());
        if (j.is_string()) return Key::parse(j.get<std::string>());
    } catch (const ArgumentError& e) {
        throw ParseError(std::string(e.what()) + " in '" + field + "'", 0, field);
    }
    throw ParseError("keys in '" + field + "' must be numbers or decimal strings", 0, field);
}

json key_json(const Key& k) {
    if (auto v = k.to_int64()) return *v;
    return k.to_string();
}

double as_number(const json& j, const std::string& field) {
    if (!j.is_number()) throw ParseError("field '" + field + "' must be numeric", 0, field);
    return j.get<double>();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---- CSV ----

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

bool parse_double(std::string_view cell, double& out) {
    if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), out);
    return ec == std::errc{} && ptr == cell.data() + cell.size() && std::isfinite(out);
}

struct CsvRow {
    std::size_t line;
    std::vector<double> values;
};

// Numeric rows of a CSV table; a non-numeric first line is taken as a header.
std::vector<CsvRow> read_numeric_csv(std::string_view text, std::size_t min_cols, std::size_t max_cols,
                                     const std::vector<std::vector<std::string>>& headers) {
    std::vector<CsvRow> rows;
    std::size_t line_no = 0, width = 0;
    bool first = true;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        const auto line = trim(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (line.empty()) {
            if (pos > text.size()) break;
            continue;
        }
        std::vector<std::string_view> cells;
        std::size_t start = 0;
        while (true) {
            auto comma = line.find(',', start);
            cells.push_back(trim(line.substr(start, comma == std::string_view::npos ? comma : comma - start)));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (cells.size() < min_cols || cells.size() > max_cols)
            throw ParseError("expected " +
                                 (min_cols == max_cols ? std::to_string(min_cols)
                                                       : std::to_string(min_cols) + " to " + std::to_string(max_cols)) +
                                 " columns, found " + std::to_string(cells.size()),
                             line_no);
        if (width != 0 && cells.size() != width)
            throw ParseError("row has " + std::to_string(cells.size()) + " columns, expected " + std::to_string(width),
                             line_no);
        width = cells.size();
        CsvRow row{line_no, {}};
        bool numeric = true;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            double v = 0;
            if (!parse_double(cells[c], v)) {
                if (first) {
                    numeric = false;
                    break;
                }
                throw ParseError("non-numeric cell '" + std::string(cells[c]) + "' in column " + std::to_string(c + 1),
                                 line_no, "column " + std::to_string(c + 1));
            }
            row.values.push_back(v);
        }
        if (!numeric) {
            std::vector<std::string> names(cells.begin(), cells.end());
            for (auto& n : names) std::transform(n.begin(), n.end(), n.begin(), ::tolower);
            if (std::find(headers.begin(), headers.end(), names) == headers.end())
                throw ParseError("unrecognised header line", line_no, "header");
        } else {
            rows.push_back(std::move(row));
        }
        first = false;
        if (pos > text.size()) break;
    }
    return rows;
}

} // namespace

std::string format_double(double v) {
    std::array<char, 64> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

FiniteRelation parse_relation_json(std::string_view text) {
    const auto j = parse_json(text);
    expect_object(j, "relation", {"size", "labels", "pairs"});
    auto universe = universe_from(j);
    const auto& pairs = require(j, "pairs");
    if (!pairs.is_array()) throw ParseError("field 'pairs' must be an array", 0, "pairs");
    std::vector<IndexPair> out;
    for (const auto& p : pairs) {
        if (!p.is_array() || p.size() != 2) throw ParseError("each pair must be [a, b]", 0, "pairs");
        const auto a = as_index(p[0], "pairs"), b = as_index(p[1], "pairs");
        if (a >= universe.size() || b >= universe.size())
            throw ParseError("pair [" + std::to_string(a) + ", " + std::to_string(b) + "] out of range for size " +
                                 std::to_string(universe.size()),
                             0, "pairs");
        out.emplace_back(a, b);
    }
    return FiniteRelation::from_pairs(std::move(universe), out);
}

std::string emit_relation_json(const FiniteRelation& r) {
    json j;
    put_universe(j, r.universe());
    j["pairs"] = json::array();
    for (auto [a, b] : r.pairs()) j["pairs"].push_back({a, b});
    return dump(j);
}

OrderSystem parse_system_json(std::string_view text) {
    const auto j = parse_json(text);
    expect_object(j, "system", {"size", "labels", "orders"});
    auto universe = universe_from(j);
    const auto& orders = require(j, "orders");
    if (!orders.is_array() || orders.empty())
        throw ParseError("field 'orders' must be a nonempty array", 0, "orders");
    std::vector<KeyedOrder> out;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        const auto& o = orders[i];
        const std::string where = "orders[" + std::to_string(i) + "]";
        expect_object(o, where, {"keys", "direction"});
        KeyedOrder k;
        const auto& dir = require(o, "direction");
        if (dir == "gain") k.direction = Direction::gain;
        else if (dir == "price") k.direction = Direction::price;
        else throw ParseError(where + ".direction must be \"gain\" or \"price\"", 0, where + ".direction");
        const auto& keys = require(o, "keys");
        if (!keys.is_array()) throw ParseError(where + ".keys must be an array", 0, where + ".keys");
        for (const auto& key : keys) k.keys.push_back(as_key(key, where + ".keys"));
        if (k.keys.size() != universe.size())
            throw ParseError(where + ".keys length differs from 'size'", 0, where + ".keys");
        out.push_back(std::move(k));
    }
    return OrderSystem(std::move(universe), std::move(out));
}

std::string emit_system_json(const OrderSystem& s) {
    json j;
    put_universe(j, s.universe());
    j["orders"] = json::array();
    for (const auto& o : s.orders()) {
        json keys = json::array();
        for (const auto& k : o.keys) keys.push_back(key_json(k));
        j["orders"].push_back({{"direction", o.direction == Direction::gain ? "gain" : "price"}, {"keys", keys}});
    }
    return dump(j);
}

PointSet2D parse_points_csv(std::string_view text) {
    const auto rows = read_numeric_csv(text, 2, 2, {{"x", "y"}});
    std::vector<Point2> pts;
    for (const auto& r : rows) pts.push_back({r.values[0], r.values[1]});
    return PointSet2D(std::move(pts));
}

std::string emit_points_csv(const PointSet2D& s) {
    std::string out = "x,y\n";
    for (const auto& p : s.points()) out += format_double(p.x) + "," + format_double(p.y) + "\n";
    return out;
}

SubsetFamily parse_family_json(std::string_view text) {
    const auto j = parse_json(text);
    expect_object(j, "family document", {"elements", "h", "family"});
    auto labels = as_labels(require(j, "elements"), "elements");
    const auto& h = require(j, "h");
    if (!h.is_object()) throw ParseError("field 'h' must map element names to numbers", 0, "h");
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = i;
    std::vector<double> values(labels.size(), 0.0);
    std::vector<bool> seen(labels.size(), false);
    for (const auto& [name, v] : h.items()) {
        auto it = index.find(name);
        if (it == index.end()) throw ParseError("'h' names unknown element '" + name + "'", 0, "h");
        values[it->second] = as_number(v, "h." + name);
        seen[it->second] = true;
    }
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (!seen[i]) throw ParseError("'h' has no value for element '" + labels[i] + "'", 0, "h");
    const auto& fam = require(j, "family");
    if (!fam.is_array()) throw ParseError("field 'family' must be an array of element lists", 0, "family");
    SubsetFamily out{ValuedGroundSet(std::move(labels), std::move(values)), {}};
    for (std::size_t k = 0; k < fam.size(); ++k) {
        const std::string where = "family[" + std::to_string(k) + "]";
        if (!fam[k].is_array()) throw ParseError(where + " must be an array of element names", 0, where);
        std::set<std::size_t> member;
        for (const auto& e : fam[k]) {
            if (!e.is_string()) throw ParseError(where + " must contain element names", 0, where);
            auto it = index.find(e.get<std::string>());
            if (it == index.end())
                throw ParseError(where + " names unknown element '" + e.get<std::string>() + "'", 0, where);
            member.insert(it->second);
        }
        out.members.emplace_back(member.begin(), member.end());
    }
    return out;
}

std::string emit_family_json(const SubsetFamily& f) {
    json j;
    j["elements"] = f.ground.labels();
    j["h"] = json::object();
    for (std::size_t i = 0; i < f.ground.size(); ++i) j["h"][f.ground.labels()[i]] = f.ground.values()[i];
    j["family"] = json::array();
    for (const auto& m : f.members) {
        json names = json::array();
        for (auto x : m) names.push_back(f.ground.labels()[x]);
        j["family"].push_back(names);
    }
    return dump(j);
}

SummitTable parse_summits_csv(std::string_view text) {
    const auto rows = read_numeric_csv(text, 2, 3, {{"x", "h"}, {"x", "y", "h"}});
    SummitTable t;
    t.planar = !rows.empty() && rows.front().values.size() == 3;
    for (const auto& r : rows) {
        if (t.planar) t.points.push_back({r.values[0], r.values[1]});
        else t.points.push_back({r.values[0], 0.0});
        t.altitudes.push_back(r.values.back());
    }
    return t;
}

std::string emit_summits_csv(const SummitTable& t) {
    std::string out = t.planar ? "x,y,h\n" : "x,h\n";
    for (std::size_t i = 0; i < t.points.size(); ++i) {
        out += format_double(t.points[i].x) + ",";
        if (t.planar) out += format_double(t.points[i].y) + ",";
        out += format_double(t.altitudes[i]) + "\n";
    }
    return out;
}

} // namespace altiset::io
