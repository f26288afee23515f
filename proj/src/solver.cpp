#include "perronkit/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "perronkit/errors.hpp"
#include "perronkit/kernels.hpp"

namespace perronkit {

const char* to_string(StoppingRule rule) noexcept {
    return rule == StoppingRule::RangeError ? "range" : "delta";
}

const char* to_string(SideChoice side) noexcept {
    switch (side) {
        case SideChoice::Auto: return "auto";
        case SideChoice::Row: return "row";
        case SideChoice::Column: return "col";
    }
    return "auto";
}

const char* to_string(Status status) noexcept {
    switch (status) {
        case Status::Converged: return "converged";
        case Status::MaxIterations: return "max_iterations";
        case Status::Stagnated: return "stagnated";
    }
    return "converged";
}

void SolverConfig::validate() const {
    if (!(tolerance > 0.0)) throw DomainError("tolerance must be positive");
    if (max_iterations < 1) throw DomainError("max_iterations must be at least 1");
    if (stagnation_window < 1) throw DomainError("stagnation_window must be at least 1");
    if (!(stagnation_factor > 0.0 && stagnation_factor < 1.0)) {
        throw DomainError("stagnation_factor must lie in (0, 1)");
    }
}

ScalingVector::ScalingVector(std::size_t n) : values_(n, 1.0) {}

ScalingVector::ScalingVector(std::vector<double> values) : values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!(values_[i] > 0.0) || !std::isfinite(values_[i])) throw NonPositiveScale(i);
    }
}

void ScalingVector::absorb(std::span<const double> sums) {
    const double first = sums[0];
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] *= sums[i] / first;
}

bool ScalingVector::rebalance_if_extreme() {
    constexpr double kLow = 1e-150, kHigh = 1e150;
    const bool extreme = std::any_of(values_.begin(), values_.end(),
                                     [](double v) { return v < kLow || v > kHigh; });
    if (!extreme) return false;
    double log_sum = 0.0;
    for (double v : values_) log_sum += std::log(v);
    const double mean = std::exp(log_sum / static_cast<double>(values_.size()));
    for (double& v : values_) v /= mean;
    return true;
}

std::vector<double> ScalingVector::reciprocal() const {
    std::vector<double> r(values_.size());
    std::transform(values_.begin(), values_.end(), r.begin(), [](double v) { return 1.0 / v; });
    return r;
}

std::vector<double> ScalingVector::unit_sum() const {
    const double total = std::accumulate(values_.begin(), values_.end(), 0.0);
    std::vector<double> u(values_.size());
    std::transform(values_.begin(), values_.end(), u.begin(), [&](double v) { return v / total; });
    return u;
}

Side choose_side(const NonnegMatrix& a) {
    const double row = range_error(sums(a, Side::Row));
    const double col = range_error(sums(a, Side::Column));
    return col < row ? Side::Column : Side::Row;
}

double range_error(std::span<const double> s) {
    if (s.empty()) return 0.0;
    const auto [lo, hi] = std::minmax_element(s.begin(), s.end());
    return *hi - *lo;
}

double range_error(const SumVector& s) { return range_error(std::span<const double>(s.values)); }

DeltaGains delta_error(const ConvergenceHistory& h) {
    if (h.size() < 2) throw InsufficientHistory();
    const std::size_t t = h.size() - 1;
    return {h.rmin[t] - h.rmin[t - 1], h.rmax[t - 1] - h.rmax[t]};
}

bool detect_stagnation(const ConvergenceHistory& h, const SolverConfig& cfg) {
    if (h.size() < cfg.stagnation_window + 1) return false;
    const std::size_t t = h.size() - 1;
    const double now = h.range(t);
    if (now <= cfg.tolerance) return false;
    return now > cfg.stagnation_factor * h.range(t - cfg.stagnation_window);
}

std::size_t estimate_iterations(double alpha, double c) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0, 1)");
    if (!(c > 0.0 && c < 1.0)) throw DomainError("contraction must lie in (0, 1)");
    const double q = std::log(alpha) / std::log(c);
    const double nearest = std::round(q);
    if (std::abs(q - nearest) <= 1e-9 * std::max(1.0, q)) return static_cast<std::size_t>(nearest);
    return static_cast<std::size_t>(std::ceil(q));
}

double mean_contraction(const ConvergenceHistory& h, double root) {
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(root));
    double log_sum = 0.0;
    std::size_t count = 0;
    for (std::size_t t = 1; t < h.size(); ++t) {
        const double prev = h.rmax[t - 1] - root;
        const double cur = h.rmax[t] - root;
        if (prev <= floor || cur <= floor) continue;
        log_sum += std::log(cur / prev);
        ++count;
    }
    if (count == 0) throw InsufficientHistory();
    return std::exp(log_sum / static_cast<double>(count));
}

NonnegMatrix recover_X(std::span<const double> y) {
    const ScalingVector checked(std::vector<double>(y.begin(), y.end()));
    const std::size_t n = y.size();
    std::vector<double> x(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) x[i * n + j] = y[j] / y[i];
    }
    return NonnegMatrix::from_row_major(n, std::move(x));
}

namespace {

enum class Variant { InPlace, Accumulated };

Side resolve_side(SideChoice choice, const NonnegMatrix& a) {
    switch (choice) {
        case SideChoice::Row: return Side::Row;
        case SideChoice::Column: return Side::Column;
        case SideChoice::Auto: break;
    }
    return choose_side(a);
}

PerronResult solve(const NonnegMatrix& a, const SolverConfig& cfg, const IterationObserver& observer,
                   Variant variant) {
    cfg.validate();
    const Side side = resolve_side(cfg.side, a);
    // The column algorithm is the row algorithm on the transpose.
    const NonnegMatrix work = side == Side::Row ? a : a.transpose();
    const std::size_t n = work.order();
    const kernels::Pattern pattern = work.pattern();

    std::vector<double> values(work.values().begin(), work.values().end());
    std::vector<double> r(n);
    kernels::row_sums(pattern, values, r);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(r[i] > 0.0)) throw ZeroSum(i);
    }

    ConvergenceHistory history;
    auto record = [&](std::size_t t) {
        const auto [lo, hi] = std::minmax_element(r.begin(), r.end());
        history.push(*lo, *hi);
        if (observer) observer(t, r);
    };
    record(0);

    ScalingVector y(n);
    std::vector<double> x(n);
    std::size_t t = 0;
    Status status = Status::Converged;
    while (true) {
        if (history.range(t) <= cfg.tolerance) {
            status = Status::Converged;
            break;
        }
        if (cfg.stopping == StoppingRule::DeltaError && t >= 1) {
            const DeltaGains g = delta_error(history);
            if (g.min_gain <= cfg.tolerance && g.max_gain <= cfg.tolerance) {
                // Small gains with a wide range that no longer contracts is
                // the oscillation of an imprimitive matrix, not convergence.
                const bool contracting = history.range(t) <= cfg.stagnation_factor * history.range(t - 1);
                status = contracting ? Status::Converged : Status::Stagnated;
                break;
            }
        }
        if (detect_stagnation(history, cfg)) {
            status = Status::Stagnated;
            break;
        }
        if (t >= cfg.max_iterations) {
            status = Status::MaxIterations;
            break;
        }

        if (variant == Variant::InPlace) {
            for (std::size_t i = 0; i < n; ++i) x[i] = 1.0 / r[i];
            kernels::rank_one_scale(pattern, values, x, r, values);
        } else {
            y.absorb(r);
            y.rebalance_if_extreme();
            x = y.reciprocal();
            kernels::rank_one_scale(pattern, work.values(), x, y.values(), values);
        }
        kernels::row_sums(pattern, values, r);
        ++t;
        record(t);
    }

    NonnegMatrix balanced = work.with_values(std::move(values));
    if (side == Side::Column) balanced = balanced.transpose();

    PerronResult result{
        .root_lo = history.rmin.back(),
        .root_hi = history.rmax.back(),
        .root = 0.5 * (history.rmin.back() + history.rmax.back()),
        .eigenvector = std::nullopt,
        .scaling = std::nullopt,
        .balanced = std::move(balanced),
        .iterations = t,
        .side_used = side,
        .status = status,
        .history = std::move(history),
    };
    if (variant == Variant::Accumulated) {
        result.eigenvector = y.unit_sum();
        result.scaling = std::move(y);
    }
    return result;
}

}  // namespace

PerronResult algorithm_a(const NonnegMatrix& a, const SolverConfig& cfg,
                         const IterationObserver& observer) {
    return solve(a, cfg, observer, Variant::InPlace);
}

PerronResult algorithm_b(const NonnegMatrix& a, const SolverConfig& cfg,
                         const IterationObserver& observer) {
    return solve(a, cfg, observer, Variant::Accumulated);
}

}  // namespace perronkit
