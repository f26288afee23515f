#include <cmath>
#include <limits>

#include "kernel_rows.hpp"
#include "perronkit/kernels.hpp"

namespace perronkit::kernels {

bool is_unit_product(double x, double y) noexcept {
    return std::abs(x * y - 1.0) <= 2.0 * std::numeric_limits<double>::epsilon();
}

namespace serial {

void row_sums(Pattern p, std::span<const double> values, std::span<double> out) {
    for (std::size_t i = 0; i < p.n; ++i) out[i] = detail::row_sum(p, values, i);
}

void rank_one_scale(Pattern p, std::span<const double> values, std::span<const double> x,
                    std::span<const double> y, std::span<double> out) {
    for (std::size_t i = 0; i < p.n; ++i) detail::scale_row(p, values, x, y, out, i);
}

void matvec(Pattern p, std::span<const double> values, std::span<const double> v,
            std::span<double> out) {
    for (std::size_t i = 0; i < p.n; ++i) out[i] = detail::row_dot(p, values, v, i);
}

}  // namespace serial

void row_sums(Pattern p, std::span<const double> values, std::span<double> out) {
    if (values.size() >= kParallelThreshold) {
        parallel::row_sums(p, values, out);
    } else {
        serial::row_sums(p, values, out);
    }
}

void rank_one_scale(Pattern p, std::span<const double> values, std::span<const double> x,
                    std::span<const double> y, std::span<double> out) {
    if (values.size() >= kParallelThreshold) {
        parallel::rank_one_scale(p, values, x, y, out);
    } else {
        serial::rank_one_scale(p, values, x, y, out);
    }
}

void matvec(Pattern p, std::span<const double> values, std::span<const double> v,
            std::span<double> out) {
    if (values.size() >= kParallelThreshold) {
        parallel::matvec(p, values, v, out);
    } else {
        serial::matvec(p, values, v, out);
    }
}

}  // namespace perronkit::kernels
