#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "altiset/point.hpp"
#include "altiset/relation.hpp"

namespace altiset {

/// A finite planar point set with pairwise distinct, finite points.
class PointSet2D {
public:
    PointSet2D() = default;
    /// Throws InjectivityError on a repeated point, ArgumentError on non-finite coordinates.
    explicit PointSet2D(std::vector<Point2> points);

    std::size_t size() const noexcept { return points_.size(); }
    const std::vector<Point2>& points() const noexcept { return points_; }
    const Point2& operator[](std::size_t i) const { return points_[i]; }

    bool operator==(const PointSet2D&) const = default;

private:
    std::vector<Point2> points_;
};

/// R = <_y u >_x, whose asymmetric interior joins exactly the index pairs that
/// cannot share a strictly increasing block.
FiniteRelation increasing_relation(const PointSet2D& s);
/// R = <_y u <_x, the dual for strictly decreasing blocks.
FiniteRelation decreasing_relation(const PointSet2D& s);

/// True iff the points with the given indices lie on the plot of a strictly
/// increasing (resp. decreasing) function.
bool is_increasing(const PointSet2D& s, std::span<const std::size_t> subset);
bool is_decreasing(const PointSet2D& s, std::span<const std::size_t> subset);

/// Minimal number of strictly increasing blocks covering S. Throws
/// DegenerateInputError on an empty set.
std::size_t increasingness_index(const PointSet2D& s);
std::size_t decreasingness_index(const PointSet2D& s);

/// ln(iota_minus / iota_plus) / ln(n), in [-1, 1]. Throws DegenerateInputError for n <= 1.
double epsilon(const PointSet2D& s);

/// A minimum-size partition into strictly increasing blocks, one block per
/// successive upper altiset of the increasing relation.
std::vector<std::vector<std::size_t>> increasing_decomposition(const PointSet2D& s);
std::vector<std::vector<std::size_t>> decreasing_decomposition(const PointSet2D& s);

} // namespace altiset
