#pragma once

#include <cstddef>
#include <vector>

#include "perronkit/matrix.hpp"

namespace perronkit {

enum class PowerStatus { Converged, MaxIterations };

const char* to_string(PowerStatus status) noexcept;

struct PowerResult {
    double eigenvalue = 0.0;
    /// Positive, unit infinity norm.
    std::vector<double> eigenvector;
    std::size_t iterations = 0;
    PowerStatus status = PowerStatus::MaxIterations;
    /// ||A v - eigenvalue v||_inf for the returned v.
    double residual = 0.0;
};

/// v <- A v / ||A v||_inf from v = 1. Stops when the eigenvalue estimate moved
/// by at most `tol` and the residual of the current vector is at most `tol`.
/// Throws Breakdown when A v vanishes.
PowerResult power_method(const NonnegMatrix& a, double tol = 1e-8, std::size_t max_iter = 100000);

}  // namespace perronkit
