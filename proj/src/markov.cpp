#include "perronkit/markov.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "perronkit/errors.hpp"

namespace perronkit {

StochasticMatrix StochasticMatrix::verify(NonnegMatrix p) {
    const SumVector r = sums(p, Side::Row);
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (std::abs(r[i] - 1.0) > kRowSumSlack) throw NotStochastic(i);
    }
    return StochasticMatrix(std::move(p));
}

StochasticMatrix make_stochastic(const NonnegMatrix& a) {
    const SumVector r = sums(a, Side::Row);
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (!(r[i] > 0.0)) throw ZeroSum(i);
    }
    std::vector<double> values(a.values().begin(), a.values().end());
    for (std::size_t i = 0; i < a.order(); ++i) {
        const double s = r[i];
        if (a.storage() == Storage::Dense) {
            for (std::size_t j = 0; j < a.order(); ++j) values[i * a.order() + j] /= s;
        } else {
            for (std::size_t k = a.row_ptr()[i]; k < a.row_ptr()[i + 1]; ++k) values[k] /= s;
        }
    }
    return StochasticMatrix(a.with_values(std::move(values)));
}

StochasticMatrix damp(const StochasticMatrix& p, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("damping factor must lie in (0, 1)");
    const std::size_t n = p.order();
    const double teleport = (1.0 - alpha) / static_cast<double>(n);
    std::vector<double> values(n * n, teleport);
    for (std::size_t i = 0; i < n; ++i) {
        p.matrix().for_each_in_row(i, [&](std::size_t j, double v) { values[i * n + j] += alpha * v; });
    }
    return StochasticMatrix(NonnegMatrix::from_row_major(n, std::move(values)));
}

StationaryDistribution stationary(const StochasticMatrix& p, const SolverConfig& cfg) {
    SolverConfig row_cfg = cfg;
    // Row sums of P^T are the column sums of P; its column sums are all 1,
    // so Auto would pick the trivial right vector.
    row_cfg.side = SideChoice::Row;
    const NonnegMatrix pt = p.matrix().transpose();
    const PerronResult run = algorithm_b(pt, row_cfg);
    if (std::abs(run.root - 1.0) > 100.0 * cfg.tolerance) throw RootNotOne(run.root);

    StationaryDistribution out;
    out.u = *run.eigenvector;
    out.iterations = run.iterations;
    out.root = run.root;
    out.status = run.status;
    // u^T P = (P^T u)^T.
    const std::vector<double> up = multiply(pt, out.u);
    for (std::size_t i = 0; i < up.size(); ++i) out.residual = std::max(out.residual, std::abs(up[i] - out.u[i]));
    return out;
}

std::vector<std::size_t> ranked_order(const std::vector<double>& u) {
    std::vector<std::size_t> order(u.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return u[a] > u[b]; });
    return order;
}

}  // namespace perronkit
