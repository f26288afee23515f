#include "perronkit/power.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "perronkit/errors.hpp"
#include "perronkit/kernels.hpp"

namespace perronkit {

const char* to_string(PowerStatus status) noexcept {
    return status == PowerStatus::Converged ? "converged" : "max_iterations";
}

PowerResult power_method(const NonnegMatrix& a, double tol, std::size_t max_iter) {
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    if (max_iter < 1) throw DomainError("max_iter must be at least 1");
    const std::size_t n = a.order();
    const kernels::Pattern pattern = a.pattern();

    std::vector<double> v(n, 1.0), w(n);
    double previous = std::numeric_limits<double>::quiet_NaN();
    PowerResult result;
    for (std::size_t k = 1; k <= max_iter; ++k) {
        kernels::matvec(pattern, a.values(), v, w);
        const double lambda = *std::max_element(w.begin(), w.end());
        if (!(lambda > 0.0)) throw Breakdown();

        // Residual of v: ||A v - lambda v|| = max_i |w_i - lambda v_i|.
        double residual = 0.0;
        for (std::size_t i = 0; i < n; ++i) residual = std::max(residual, std::abs(w[i] - lambda * v[i]));

        const bool settled = k == 1 ? true : std::abs(lambda - previous) <= tol;
        result.iterations = k;
        result.eigenvalue = lambda;
        result.residual = residual;
        if (settled && residual <= tol) {
            result.status = PowerStatus::Converged;
            result.eigenvector = v;
            return result;
        }
        previous = lambda;
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / lambda;
    }
    // Report the pair for the final vector.
    kernels::matvec(pattern, a.values(), v, w);
    const double lambda = *std::max_element(w.begin(), w.end());
    if (!(lambda > 0.0)) throw Breakdown();
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) residual = std::max(residual, std::abs(w[i] - lambda * v[i]));
    result.status = PowerStatus::MaxIterations;
    result.eigenvalue = lambda;
    result.residual = residual;
    result.eigenvector = std::move(v);
    return result;
}

}  // namespace perronkit
