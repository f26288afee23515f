#pragma once

// Per-row bodies shared by the serial and OpenMP kernels, so both paths
// perform the identical floating-point operations in the identical order.

#include <cstddef>
#include <span>

#include "perronkit/kernels.hpp"

namespace perronkit::kernels::detail {

inline double row_sum(const Pattern& p, std::span<const double> values, std::size_t i) {
    double s = 0.0;
    if (p.dense()) {
        const std::size_t base = i * p.n;
        for (std::size_t j = 0; j < p.n; ++j) s += values[base + j];
    } else {
        for (std::size_t k = p.row_ptr[i]; k < p.row_ptr[i + 1]; ++k) s += values[k];
    }
    return s;
}

inline void scale_row(const Pattern& p, std::span<const double> values, std::span<const double> x,
                      std::span<const double> y, std::span<double> out, std::size_t i) {
    const double xi = x[i];
    const bool keep_diag = is_unit_product(xi, y[i]);
    auto scale = [&](std::size_t k, std::size_t j) {
        if (j == i && keep_diag) {
            out[k] = values[k];
        } else {
            out[k] = values[k] * xi * y[j];
        }
    };
    if (p.dense()) {
        const std::size_t base = i * p.n;
        for (std::size_t j = 0; j < p.n; ++j) scale(base + j, j);
    } else {
        for (std::size_t k = p.row_ptr[i]; k < p.row_ptr[i + 1]; ++k) scale(k, p.col_idx[k]);
    }
}

inline double row_dot(const Pattern& p, std::span<const double> values, std::span<const double> v,
                      std::size_t i) {
    double s = 0.0;
    if (p.dense()) {
        const std::size_t base = i * p.n;
        for (std::size_t j = 0; j < p.n; ++j) s += values[base + j] * v[j];
    } else {
        for (std::size_t k = p.row_ptr[i]; k < p.row_ptr[i + 1]; ++k) s += values[k] * v[p.col_idx[k]];
    }
    return s;
}

}  // namespace perronkit::kernels::detail
