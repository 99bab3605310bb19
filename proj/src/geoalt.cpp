#include "altiset/geoalt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "altiset/errors.hpp"

namespace altiset {

std::string_view to_string(MetricKind kind) {
    switch (kind) {
    case MetricKind::euclidean_2d: return "euclidean-2d";
    case MetricKind::real_line: return "real-line";
    case MetricKind::real_line_left_restricted: return "real-line-left-restricted";
    }
    return "?";
}

MetricKind parse_metric_kind(std::string_view name) {
    for (auto k : {MetricKind::euclidean_2d, MetricKind::real_line, MetricKind::real_line_left_restricted})
        if (to_string(k) == name) return k;
    throw ArgumentError("unknown metric space '" + std::string(name) + "'");
}

SummitField::SummitField(MetricKind space, std::vector<Point2> summits, std::vector<double> altitudes,
                         Point2 reference)
    : space_(space), summits_(std::move(summits)), altitudes_(std::move(altitudes)), reference_(reference) {
    if (altitudes_.size() != summits_.size())
        throw DimensionError("field has " + std::to_string(summits_.size()) + " summits but " +
                             std::to_string(altitudes_.size()) + " altitudes");
    auto finite = [](const Point2& p) { return std::isfinite(p.x) && std::isfinite(p.y); };
    if (!finite(reference_)) throw ArgumentError("reference point must be finite");
    for (std::size_t i = 0; i < summits_.size(); ++i) {
        if (!finite(summits_[i]) || !std::isfinite(altitudes_[i]))
            throw ArgumentError("summit " + std::to_string(i) + " has a non-finite value");
        if (space_ == MetricKind::real_line_left_restricted && summits_[i].x > reference_.x)
            throw SpaceError("summit " + std::to_string(i) + " lies right of the reference point");
    }
}

namespace {

bool small_integer(double v) { return v == std::trunc(v) && std::abs(v) <= 33554432.0; }  // 2^25

bool planar(const SummitField& f) { return f.space() == MetricKind::euclidean_2d; }

template <typename T, typename Same>
std::vector<std::size_t> dense_rank_by(const std::vector<T>& values, Same same) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });
    std::vector<std::size_t> ranks(values.size(), 0);
    std::size_t r = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i > 0 && !same(values[order[i - 1]], values[order[i]])) ++r;
        ranks[order[i]] = r;
    }
    return ranks;
}

// Definitional altiset restricted to `subset`, on precomputed distance ranks.
std::vector<std::size_t> oracle_on(const std::vector<double>& h, const std::vector<std::size_t>& d,
                                   const std::vector<std::size_t>& subset) {
    std::vector<std::size_t> out;
    for (auto a : subset) {
        bool dominated = false;
        for (auto b : subset) {
            if (h[b] >= h[a] && d[b] <= d[a] && (h[b] > h[a] || d[b] < d[a])) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(a);
    }
    return out;
}

// Keeps a iff its altitude is the maximum among summits of equal rank and
// exceeds every altitude of strictly smaller rank.
std::vector<std::size_t> rank_sweep(const std::vector<double>& h, const std::vector<std::size_t>& rank) {
    std::vector<std::size_t> order(h.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return rank[a] < rank[b]; });
    std::vector<std::size_t> out;
    double highest_inside = -std::numeric_limits<double>::infinity();
    bool any_inside = false;
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        double group_max = h[order[i]];
        while (j < order.size() && rank[order[j]] == rank[order[i]]) group_max = std::max(group_max, h[order[j++]]);
        for (std::size_t k = i; k < j; ++k)
            if (h[order[k]] == group_max && (!any_inside || group_max > highest_inside)) out.push_back(order[k]);
        highest_inside = any_inside ? std::max(highest_inside, group_max) : group_max;
        any_inside = true;
        i = j;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> all_indices(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), std::size_t{0});
    return v;
}

} // namespace

DistanceRanks distance_ranks(const SummitField& field) {
    const auto& ref = field.reference();
    bool exact = small_integer(ref.x) && (!planar(field) || small_integer(ref.y));
    for (const auto& p : field.summits())
        exact = exact && small_integer(p.x) && (!planar(field) || small_integer(p.y));

    std::vector<double> dist;
    dist.reserve(field.size());
    for (const auto& p : field.summits()) {
        const double dx = p.x - ref.x;
        const double dy = planar(field) ? p.y - ref.y : 0.0;
        dist.push_back(exact ? dx * dx + dy * dy : std::hypot(dx, dy));
    }
    if (exact) return {dense_rank_by(dist, std::equal_to<>()), true};
    return {dense_rank_by(dist, [](double a, double b) { return b - a <= distance_tolerance; }), false};
}

std::vector<std::size_t> geo_altiset_oracle(const SummitField& field) {
    return oracle_on(field.altitudes(), distance_ranks(field).ranks, all_indices(field.size()));
}

std::vector<std::size_t> skyline_circular(const SummitField& field) {
    return rank_sweep(field.altitudes(), distance_ranks(field).ranks);
}

std::vector<std::size_t> skyline_contour(const SummitField& field) {
    const auto& h = field.altitudes();
    const auto d = distance_ranks(field).ranks;
    std::vector<std::size_t> order = all_indices(field.size());
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return h[a] > h[b]; });
    std::vector<std::size_t> out;
    std::size_t closest_higher = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        std::size_t group_min = d[order[i]];
        while (j < order.size() && h[order[j]] == h[order[i]]) group_min = std::min(group_min, d[order[j++]]);
        for (std::size_t k = i; k < j; ++k)
            if (d[order[k]] == group_min && group_min < closest_higher) out.push_back(order[k]);
        closest_higher = std::min(closest_higher, group_min);
        i = j;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> skyline_recursive(const SummitField& field, std::size_t block_size) {
    if (block_size == 0) throw ArgumentError("block size must be positive");
    const auto& h = field.altitudes();
    const auto d = distance_ranks(field).ranks;
    auto current = all_indices(field.size());
    while (current.size() > block_size) {
        std::vector<std::size_t> merged;
        for (std::size_t start = 0; start < current.size(); start += block_size) {
            const std::vector<std::size_t> block(
                current.begin() + static_cast<std::ptrdiff_t>(start),
                current.begin() + static_cast<std::ptrdiff_t>(std::min(current.size(), start + block_size)));
            const auto local = oracle_on(h, d, block);
            merged.insert(merged.end(), local.begin(), local.end());
        }
        // No block shrank: move to a coarser map.
        if (merged.size() == current.size()) block_size *= 2;
        current = std::move(merged);
    }
    auto out = oracle_on(h, d, current);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> record_events(const SummitField& field) {
    if (planar(field)) throw SpaceError("record events need a real-line space");
    std::vector<double> times;
    for (const auto& p : field.summits()) times.push_back(p.x);
    return rank_sweep(field.altitudes(), dense_rank_by(times, std::equal_to<>()));
}

} // namespace altiset
