#include "perronkit/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "perronkit/errors.hpp"

namespace perronkit {

namespace {

Interval extent(const std::vector<double>& v) {
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return {*lo, *hi};
}

}  // namespace

Interval frobenius_bounds(const NonnegMatrix& a, Side side) { return extent(sums(a, side).values); }

Interval minc_bounds(const NonnegMatrix& a, Side side) {
    // Column side is the row bound of the transpose.
    const NonnegMatrix oriented = side == Side::Row ? a : a.transpose();
    const SumVector r = sums(oriented, Side::Row);
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (!(r[i] > 0.0)) throw ZeroSum(i);
    }
    const NonnegMatrix scaled = diag_similarity(oriented, r.values);
    return frobenius_bounds(scaled, Side::Row);
}

BoundsReport bounds_report(const NonnegMatrix& a) {
    return {frobenius_bounds(a, Side::Row), frobenius_bounds(a, Side::Column),
            minc_bounds(a, Side::Row), minc_bounds(a, Side::Column)};
}

Perron2x2 perron_2x2(const NonnegMatrix& a) {
    if (a.order() != 2) throw NotApplicable("perron_2x2 needs an order-2 matrix");
    const double a11 = a(0, 0), a12 = a(0, 1), a21 = a(1, 0), a22 = a(1, 1);
    if (!(a12 > 0.0) || !(a21 > 0.0)) throw NotApplicable("perron_2x2 needs positive off-diagonals");
    const double diff = a11 - a22;
    const double root = (a11 + a22 + std::sqrt(diff * diff + 4.0 * a12 * a21)) / 2.0;
    return {root, (root - a11) / a12};
}

}  // namespace perronkit
