#pragma once

// Perron root by repeated diagonal-similarity balancing.
//
// Each iteration replaces B by D_r^{-1} B D_r where r holds the current row
// sums. The diagonal and zero pattern never change, min(r) never decreases
// and max(r) never increases; for a primitive matrix both converge to the
// Perron root and the accumulated scaling converges to the Perron vector.
//
// Algorithm A updates the working matrix in place. Algorithm B keeps the
// accumulated scaling y (y[0] = 1) and rebuilds B = A o ((1/y) y^T) from the
// original entries every iteration, which also yields the eigenvector.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "perronkit/matrix.hpp"

namespace perronkit {

enum class StoppingRule { RangeError, DeltaError };
enum class SideChoice { Auto, Row, Column };
enum class Status { Converged, MaxIterations, Stagnated };

const char* to_string(StoppingRule rule) noexcept;
const char* to_string(SideChoice side) noexcept;
const char* to_string(Status status) noexcept;

struct SolverConfig {
    double tolerance = 1e-8;
    std::size_t max_iterations = 100000;
    StoppingRule stopping = StoppingRule::RangeError;
    SideChoice side = SideChoice::Auto;
    std::size_t stagnation_window = 20;
    double stagnation_factor = 0.999;

    /// Throws DomainError when a field is out of range.
    void validate() const;
};

/// Strictly positive scaling vector y; X = (1/y) y^T.
class ScalingVector {
public:
    explicit ScalingVector(std::size_t n);
    explicit ScalingVector(std::vector<double> values);

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    std::span<const double> values() const noexcept { return values_; }

    /// y <- y o (r / r_0). Keeps y[0] fixed.
    void absorb(std::span<const double> sums);

    /// Divides by the geometric mean when a component leaves [1e-150, 1e150].
    bool rebalance_if_extreme();

    std::vector<double> reciprocal() const;
    std::vector<double> unit_sum() const;

private:
    std::vector<double> values_;
};

/// Per-iteration extremes of the working sums; entry 0 is the input matrix.
struct ConvergenceHistory {
    std::vector<double> rmin;
    std::vector<double> rmax;

    std::size_t size() const noexcept { return rmin.size(); }
    double range(std::size_t t) const { return rmax[t] - rmin[t]; }
    void push(double lo, double hi) {
        rmin.push_back(lo);
        rmax.push_back(hi);
    }
};

struct PerronResult {
    double root_lo = 0.0;
    double root_hi = 0.0;
    double root = 0.0;
    /// Unit-sum Perron vector (Algorithm B only). For a Column run this is the
    /// left vector: y^T A = root y^T.
    std::optional<std::vector<double>> eigenvector;
    /// Accumulated scaling y with y[0] = 1 (Algorithm B only).
    std::optional<ScalingVector> scaling;
    /// Balanced matrix in the orientation of the input.
    NonnegMatrix balanced;
    std::size_t iterations = 0;
    Side side_used = Side::Row;
    Status status = Status::Converged;
    ConvergenceHistory history;
};

/// Called with the iteration number (0 = input) and the working sums.
using IterationObserver = std::function<void(std::size_t, std::span<const double>)>;

PerronResult algorithm_a(const NonnegMatrix& a, const SolverConfig& cfg = {},
                         const IterationObserver& observer = {});
PerronResult algorithm_b(const NonnegMatrix& a, const SolverConfig& cfg = {},
                         const IterationObserver& observer = {});

/// Side with the smaller initial sum range; ties go to Row.
Side choose_side(const NonnegMatrix& a);

double range_error(std::span<const double> sums);
double range_error(const SumVector& s);

struct DeltaGains {
    double min_gain = 0.0;  // rmin[t] - rmin[t-1]
    double max_gain = 0.0;  // rmax[t-1] - rmax[t]
};

/// Gains of the last step. Throws InsufficientHistory below two entries.
DeltaGains delta_error(const ConvergenceHistory& h);

/// True when the range stayed above tolerance and shrank by less than
/// `stagnation_factor` over the last `stagnation_window` steps. Histories
/// shorter than window + 1 never stagnate.
bool detect_stagnation(const ConvergenceHistory& h, const SolverConfig& cfg);

/// ceil(log(alpha) / log(c)) for 0 < alpha, c < 1.
std::size_t estimate_iterations(double alpha, double c);

/// Geometric mean of successive (rmax[t] - root) ratios, skipping steps
/// already at rounding level.
double mean_contraction(const ConvergenceHistory& h, double root);

/// Dense X with x_ij = y_j / y_i.
NonnegMatrix recover_X(std::span<const double> y);

}  // namespace perronkit
