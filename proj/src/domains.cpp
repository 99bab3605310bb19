#include "altiset/domains.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "altiset/errors.hpp"

namespace altiset {

GridMeasure::GridMeasure(Point2 min_corner, Point2 max_corner, std::size_t cells_x, std::size_t cells_y)
    : min_(min_corner), max_(max_corner), nx_(cells_x), ny_(cells_y) {
    const bool finite = std::isfinite(min_.x) && std::isfinite(min_.y) && std::isfinite(max_.x) &&
                        std::isfinite(max_.y);
    if (!finite || !(max_.x > min_.x) || !(max_.y > min_.y)) throw GridError("grid box is degenerate");
    if (nx_ == 0 || ny_ == 0) throw GridError("grid resolution must be at least 1x1");
    cell_w_ = (max_.x - min_.x) / static_cast<double>(nx_);
    cell_h_ = (max_.y - min_.y) / static_cast<double>(ny_);
}

GridMeasure GridMeasure::around(std::span<const Point2> points, double inflate, std::size_t cells_x,
                                std::size_t cells_y) {
    if (points.empty()) throw GridError("cannot fit a grid around no points");
    if (!(inflate >= 0) || !std::isfinite(inflate)) throw GridError("inflation must be a finite non-negative factor");
    Point2 lo = points.front(), hi = points.front();
    for (const auto& p : points) {
        lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
        hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
    }
    auto widen = [inflate](double& a, double& b) {
        if (a == b) {
            a -= 0.5;
            b += 0.5;
        }
        const double pad = inflate * (b - a);
        a -= pad;
        b += pad;
    };
    widen(lo.x, hi.x);
    widen(lo.y, hi.y);
    return GridMeasure(lo, hi, cells_x, cells_y);
}

namespace {

double squared_distance(Point2 a, Point2 b) {
    const double dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

void check_summits(std::span<const Point2> summits, std::span<const double> altitudes, std::size_t a) {
    if (altitudes.size() != summits.size()) throw DimensionError("summit and altitude counts differ");
    if (a >= summits.size()) throw IndexError("summit index " + std::to_string(a) + " out of range");
}

bool significant_at(std::span<const Point2> summits, std::span<const double> altitudes, std::size_t a, Point2 x) {
    const double da = squared_distance(summits[a], x);
    for (std::size_t b = 0; b < summits.size(); ++b) {
        const double db = squared_distance(summits[b], x);
        if (altitudes[b] >= altitudes[a] && db <= da && (altitudes[b] > altitudes[a] || db < da)) return false;
    }
    return true;
}

} // namespace

bool inverse_altiset_member(std::span<const Point2> summits, std::span<const double> altitudes, std::size_t a,
                            Point2 x) {
    check_summits(summits, altitudes, a);
    return significant_at(summits, altitudes, a, x);
}

std::size_t inverse_altiset_cells(std::span<const Point2> summits, std::span<const double> altitudes,
                                  std::size_t a, const GridMeasure& grid) {
    check_summits(summits, altitudes, a);
    std::size_t count = 0;
    for (std::size_t i = 0; i < grid.cells_x(); ++i)
        for (std::size_t j = 0; j < grid.cells_y(); ++j)
            if (significant_at(summits, altitudes, a, grid.center(i, j))) ++count;
    return count;
}

double inverse_altiset_measure(std::span<const Point2> summits, std::span<const double> altitudes, std::size_t a,
                               const GridMeasure& grid) {
    return grid.cell_area() * static_cast<double>(inverse_altiset_cells(summits, altitudes, a, grid));
}

std::size_t voronoi_cells(std::size_t x, const ElementSet& excluded, std::span<const Point2> summits,
                          const GridMeasure& grid) {
    if (x >= summits.size()) throw IndexError("summit index " + std::to_string(x) + " out of range");
    if (excluded.universe_size() != summits.size()) throw DimensionError("excluded set has the wrong universe");
    if (excluded.contains(x)) throw ArgumentError("summit " + std::to_string(x) + " lies in the excluded set");
    const auto competitors = excluded.complement().indices();
    std::size_t count = 0;
    for (std::size_t i = 0; i < grid.cells_x(); ++i)
        for (std::size_t j = 0; j < grid.cells_y(); ++j) {
            const auto y = grid.center(i, j);
            const double own = squared_distance(y, summits[x]);
            const bool inside = std::all_of(competitors.begin(), competitors.end(),
                                            [&](std::size_t a) { return squared_distance(y, summits[a]) >= own; });
            if (inside) ++count;
        }
    return count;
}

double voronoi_mu(std::size_t x, const ElementSet& excluded, std::span<const Point2> summits,
                  const GridMeasure& grid) {
    return grid.cell_area() * static_cast<double>(voronoi_cells(x, excluded, summits, grid));
}

std::vector<double> evolve_step(std::span<const Point2> summits, std::span<const double> h, const GridMeasure& grid) {
    if (h.size() != summits.size()) throw DimensionError("valuation and summit counts differ");
    std::vector<double> next(h.size());
    for (std::size_t x = 0; x < h.size(); ++x) {
        ElementSet lower(h.size());
        for (std::size_t y = 0; y < h.size(); ++y)
            if (h[y] < h[x]) lower.insert(y);
        next[x] = voronoi_mu(x, lower, summits, grid);
    }
    return next;
}

ValuationTrace evolve(std::span<const Point2> summits, std::span<const double> h0, const GridMeasure& grid,
                      std::size_t max_steps) {
    if (max_steps == 0) throw ArgumentError("max_steps must be at least 1");
    if (h0.size() != summits.size()) throw DimensionError("initial valuation and summit counts differ");

    // mu depends only on (x, M); the evolution revisits the same pairs often.
    std::map<std::pair<std::size_t, std::vector<std::uint64_t>>, double> memo;
    auto mu = [&](std::size_t x, const ElementSet& lower) {
        auto key = std::pair{x, std::vector<std::uint64_t>(lower.words().begin(), lower.words().end())};
        auto it = memo.find(key);
        if (it == memo.end()) it = memo.emplace(std::move(key), voronoi_mu(x, lower, summits, grid)).first;
        return it->second;
    };

    ValuationTrace trace;
    trace.valuations.emplace_back(h0.begin(), h0.end());
    for (std::size_t step = 0; step < max_steps; ++step) {
        const auto& h = trace.valuations.back();
        std::vector<double> next(h.size());
        for (std::size_t x = 0; x < h.size(); ++x) {
            ElementSet lower(h.size());
            for (std::size_t y = 0; y < h.size(); ++y)
                if (h[y] < h[x]) lower.insert(y);
            next[x] = mu(x, lower);
        }
        const bool fixed = next == h;
        trace.valuations.push_back(std::move(next));
        if (fixed) {
            trace.stop_index = step;
            return trace;
        }
    }
    throw NonterminationError("valuation did not stabilise within " + std::to_string(max_steps) + " steps");
}

} // namespace altiset
