#include "altiset/dependence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "altiset/errors.hpp"
#include "altiset/layers.hpp"

namespace altiset {

PointSet2D::PointSet2D(std::vector<Point2> points) : points_(std::move(points)) {
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (!std::isfinite(points_[i].x) || !std::isfinite(points_[i].y))
            throw ArgumentError("point " + std::to_string(i) + " has a non-finite coordinate");
    std::vector<std::size_t> order(points_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    auto key = [&](std::size_t i) { return std::pair{points_[i].x, points_[i].y}; };
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return key(a) < key(b); });
    for (std::size_t i = 1; i < order.size(); ++i)
        if (points_[order[i - 1]] == points_[order[i]])
            throw InjectivityError("points " + std::to_string(std::min(order[i - 1], order[i])) + " and " +
                                   std::to_string(std::max(order[i - 1], order[i])) + " coincide");
}

FiniteRelation increasing_relation(const PointSet2D& s) {
    return FiniteRelation::from_predicate(Universe(s.size()), [&](std::size_t i, std::size_t j) {
        return s[i].y < s[j].y || s[i].x > s[j].x;
    });
}

FiniteRelation decreasing_relation(const PointSet2D& s) {
    return FiniteRelation::from_predicate(Universe(s.size()), [&](std::size_t i, std::size_t j) {
        return s[i].y < s[j].y || s[i].x < s[j].x;
    });
}

bool is_increasing(const PointSet2D& s, std::span<const std::size_t> subset) {
    for (auto i : subset)
        for (auto j : subset) {
            if (i == j) continue;
            if (s[i].x == s[j].x) return false;
            if (s[i].x < s[j].x && !(s[i].y < s[j].y)) return false;
        }
    return true;
}

bool is_decreasing(const PointSet2D& s, std::span<const std::size_t> subset) {
    for (auto i : subset)
        for (auto j : subset) {
            if (i == j) continue;
            if (s[i].x == s[j].x) return false;
            if (s[i].x < s[j].x && !(s[i].y > s[j].y)) return false;
        }
    return true;
}

namespace {

void require_nonempty(const PointSet2D& s) {
    if (s.size() == 0) throw DegenerateInputError("point set is empty");
}

std::vector<std::vector<std::size_t>> decomposition(const FiniteRelation& r) {
    return upper_layers(r).upper_layers();
}

} // namespace

std::size_t increasingness_index(const PointSet2D& s) {
    require_nonempty(s);
    return upper_layers(increasing_relation(s)).class_count;
}

std::size_t decreasingness_index(const PointSet2D& s) {
    require_nonempty(s);
    return upper_layers(decreasing_relation(s)).class_count;
}

double epsilon(const PointSet2D& s) {
    if (s.size() <= 1)
        throw DegenerateInputError("epsilon needs at least two points, got " + std::to_string(s.size()));
    const auto plus = static_cast<double>(increasingness_index(s));
    const auto minus = static_cast<double>(decreasingness_index(s));
    return std::log(minus / plus) / std::log(static_cast<double>(s.size()));
}

std::vector<std::vector<std::size_t>> increasing_decomposition(const PointSet2D& s) {
    require_nonempty(s);
    return decomposition(increasing_relation(s));
}

std::vector<std::vector<std::size_t>> decreasing_decomposition(const PointSet2D& s) {
    require_nonempty(s);
    return decomposition(decreasing_relation(s));
}

} // namespace altiset
