#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "altiset/element_set.hpp"
#include "altiset/point.hpp"

namespace altiset {

/// Counting measure on a regular lattice of cell centres over a box.
/// The measure of a region is cell_area() times the number of centres in it.
class GridMeasure {
public:
    /// Throws GridError on a degenerate or non-finite box or zero resolution.
    GridMeasure(Point2 min_corner, Point2 max_corner, std::size_t cells_x, std::size_t cells_y);

    /// Bounding box of `points` inflated by `inflate` times its extent on
    /// each side. An axis of zero extent is first widened to unit length.
    static GridMeasure around(std::span<const Point2> points, double inflate = 0.25, std::size_t cells_x = 128,
                              std::size_t cells_y = 128);

    const Point2& min_corner() const noexcept { return min_; }
    const Point2& max_corner() const noexcept { return max_; }
    std::size_t cells_x() const noexcept { return nx_; }
    std::size_t cells_y() const noexcept { return ny_; }
    std::size_t cell_count() const noexcept { return nx_ * ny_; }
    double cell_area() const noexcept { return cell_w_ * cell_h_; }
    double box_area() const noexcept { return (max_.x - min_.x) * (max_.y - min_.y); }
    Point2 center(std::size_t i, std::size_t j) const noexcept {
        return {min_.x + (static_cast<double>(i) + 0.5) * cell_w_, min_.y + (static_cast<double>(j) + 0.5) * cell_h_};
    }

private:
    Point2 min_, max_;
    std::size_t nx_, ny_;
    double cell_w_, cell_h_;
};

/// True iff summit `a` is significant for reference point `x` under the
/// altitude order and the distance-from-x order.
bool inverse_altiset_member(std::span<const Point2> summits, std::span<const double> altitudes, std::size_t a,
                            Point2 x);

/// Grid centres lying in the significance domain of `a`, and its measure.
std::size_t inverse_altiset_cells(std::span<const Point2> summits, std::span<const double> altitudes,
                                  std::size_t a, const GridMeasure& grid);
double inverse_altiset_measure(std::span<const Point2> summits, std::span<const double> altitudes, std::size_t a,
                               const GridMeasure& grid);

/// Grid centres y with dist(y, a) >= dist(y, x) for every summit a outside
/// `excluded` (ties count for every summit involved), and their measure.
/// Throws ArgumentError when x is in `excluded`.
std::size_t voronoi_cells(std::size_t x, const ElementSet& excluded, std::span<const Point2> summits,
                          const GridMeasure& grid);
double voronoi_mu(std::size_t x, const ElementSet& excluded, std::span<const Point2> summits,
                  const GridMeasure& grid);

/// h_0, h_1, ... with h_{i+1}(x) = mu(x, { y : h_i(y) < h_i(x) }).
/// stop_index is the first k with h_k == h_{k+1}; valuations ends with h_{k+1}.
struct ValuationTrace {
    std::vector<std::vector<double>> valuations;
    std::size_t stop_index = 0;
};

/// One evolution step.
std::vector<double> evolve_step(std::span<const Point2> summits, std::span<const double> h, const GridMeasure& grid);

/// Throws ArgumentError for max_steps == 0, DimensionError when h0 and the
/// summits differ in length, and NonterminationError when no fixed point is
/// reached within max_steps steps.
ValuationTrace evolve(std::span<const Point2> summits, std::span<const double> h0, const GridMeasure& grid,
                      std::size_t max_steps);

} // namespace altiset
