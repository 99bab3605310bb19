#pragma once

namespace altiset {

struct Point2 {
    double x = 0;
    double y = 0;
    bool operator==(const Point2&) const = default;
};

} // namespace altiset
