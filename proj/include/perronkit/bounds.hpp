#pragma once

#include "perronkit/matrix.hpp"

namespace perronkit {

/// Closed enclosure [lo, hi] of the Perron root.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double width() const noexcept { return hi - lo; }
    bool contains(double v, double slack = 0.0) const noexcept {
        return lo - slack <= v && v <= hi + slack;
    }
};

struct BoundsReport {
    Interval frobenius_row;
    Interval frobenius_col;
    Interval minc_row;
    Interval minc_col;
};

/// (min, max) of the row or column sums.
Interval frobenius_bounds(const NonnegMatrix& a, Side side);

/// Frobenius bounds after one similarity step with the sum vector:
/// row side uses D_r^{-1} A D_r, column side D_c A D_c^{-1}. Throws ZeroSum.
Interval minc_bounds(const NonnegMatrix& a, Side side);

BoundsReport bounds_report(const NonnegMatrix& a);

struct Perron2x2 {
    double root = 0.0;
    /// Off-diagonal scale: A o [[1, x], [1/x, 1]] has both row sums equal to root.
    double x = 0.0;
};

/// Closed form for order 2. Throws NotApplicable unless a12 > 0 and a21 > 0.
Perron2x2 perron_2x2(const NonnegMatrix& a);

}  // namespace perronkit
