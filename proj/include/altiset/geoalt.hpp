#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "altiset/point.hpp"

namespace altiset {

enum class MetricKind { euclidean_2d, real_line, real_line_left_restricted };

std::string_view to_string(MetricKind kind);
/// Throws ArgumentError on an unknown name.
MetricKind parse_metric_kind(std::string_view name);

/// Summits with altitudes and a reference point x0. On the real-line spaces
/// only the x coordinates are used.
class SummitField {
public:
    SummitField() = default;
    /// Throws DimensionError when the altitude count differs from the summit
    /// count, ArgumentError on non-finite input, and SpaceError when a summit
    /// lies right of x0 in the left-restricted space.
    SummitField(MetricKind space, std::vector<Point2> summits, std::vector<double> altitudes, Point2 reference);

    MetricKind space() const noexcept { return space_; }
    std::size_t size() const noexcept { return summits_.size(); }
    const std::vector<Point2>& summits() const noexcept { return summits_; }
    const std::vector<double>& altitudes() const noexcept { return altitudes_; }
    const Point2& reference() const noexcept { return reference_; }

    bool operator==(const SummitField&) const = default;

private:
    MetricKind space_ = MetricKind::euclidean_2d;
    std::vector<Point2> summits_;
    std::vector<double> altitudes_;
    Point2 reference_;
};

/// Absolute tolerance on distances used when they cannot be compared exactly.
inline constexpr double distance_tolerance = 1e-9;

/// Dense ranks of the summits' distances to the reference point.
///
/// Exact when every coordinate is an integer of magnitude at most 2^25 (the
/// squared distances are then exact doubles). Otherwise distances whose
/// sorted neighbours differ by at most `distance_tolerance` share a rank and
/// `exact` is false.
struct DistanceRanks {
    std::vector<std::size_t> ranks;
    bool exact = true;
};

DistanceRanks distance_ranks(const SummitField& field);

/// Definitional altiset of <_h u >_d: a is excluded iff some b is at least as
/// high and at least as close, strictly in one of the two.
std::vector<std::size_t> geo_altiset_oracle(const SummitField& field);

/// Sweep outward by distance, keeping the highest summit seen so far.
std::vector<std::size_t> skyline_circular(const SummitField& field);

/// Sweep downward by altitude, keeping the closest summit seen so far.
std::vector<std::size_t> skyline_contour(const SummitField& field);

/// Blocks of at most `block_size` summits in input order, reduced to their
/// altisets and merged until a single block remains. Throws ArgumentError for
/// block_size == 0.
std::vector<std::size_t> skyline_recursive(const SummitField& field, std::size_t block_size);

/// Events (summit x = time) that outstrip every earlier event: the altiset of
/// <_h u >_time. Throws SpaceError on the euclidean space.
std::vector<std::size_t> record_events(const SummitField& field);

} // namespace altiset
