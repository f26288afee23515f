#pragma once

#include <cstddef>
#include <vector>

#include "perronkit/matrix.hpp"
#include "perronkit/solver.hpp"

namespace perronkit {

/// Row-stochastic matrix: every row sums to 1 within 1e-12.
class StochasticMatrix {
public:
    static constexpr double kRowSumSlack = 1e-12;

    /// Throws NotStochastic(i) for the first row that does not sum to 1.
    static StochasticMatrix verify(NonnegMatrix p);

    const NonnegMatrix& matrix() const noexcept { return p_; }
    std::size_t order() const noexcept { return p_.order(); }

private:
    explicit StochasticMatrix(NonnegMatrix p) : p_(std::move(p)) {}
    NonnegMatrix p_;

    friend StochasticMatrix make_stochastic(const NonnegMatrix& a);
    friend StochasticMatrix damp(const StochasticMatrix& p, double alpha);
};

struct StationaryDistribution {
    std::vector<double> u;
    /// ||u^T P - u^T||_inf.
    double residual = 0.0;
    std::size_t iterations = 0;
    double root = 0.0;
    Status status = Status::Converged;
};

/// Divides each row by its sum. Throws ZeroSum.
StochasticMatrix make_stochastic(const NonnegMatrix& a);

/// alpha P + (1 - alpha)/n * ones: positive, hence primitive. alpha in (0, 1).
StochasticMatrix damp(const StochasticMatrix& p, double alpha);

/// Left Perron vector of P via Algorithm B on P^T (row side), unit sum.
/// Throws RootNotOne when |root - 1| > 100 tol.
StationaryDistribution stationary(const StochasticMatrix& p, const SolverConfig& cfg = {});

/// Indices ordered by decreasing probability (ties by index).
std::vector<std::size_t> ranked_order(const std::vector<double>& u);

}  // namespace perronkit
