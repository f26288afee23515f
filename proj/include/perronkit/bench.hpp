#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "perronkit/matrix.hpp"
#include "perronkit/solver.hpp"

namespace perronkit {

struct BenchCase {
    std::string label;
    NonnegMatrix matrix;
    /// |lambda_2 / lambda_1| when known analytically.
    std::optional<double> ratio;
};

/// One method's outcome on one case.
struct MethodRun {
    std::size_t iterations = 0;
    double root = 0.0;
    std::string status;  // solver status, "error: ..." on exceptions
    double wall_ms = 0.0;

    bool converged() const { return status == "converged"; }
};

struct BenchRecord {
    std::string label;
    std::size_t n = 0;
    std::optional<double> ratio;
    MethodRun algo_a;
    MethodRun algo_b;
    MethodRun power;
};

struct BenchConfig {
    SolverConfig solver;
    /// Cases run concurrently on this many OpenMP threads (1 = sequential).
    int jobs = 1;
};

/// T(n; 1, 3, 2) for each n, with the analytic ratio attached.
std::vector<BenchCase> tridiagonal_suite(const std::vector<std::size_t>& orders);

/// Tridiagonal family, an equal-row-sum matrix and random primitive matrices
/// (dense and a larger sparse one).
std::vector<BenchCase> default_suite();

/// Never throws for a failing case; the failure lands in the record status.
std::vector<BenchRecord> run_bench(const std::vector<BenchCase>& suite, const BenchConfig& cfg = {});

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

/// Spearman rank correlation (average ranks for ties).
double rank_correlation(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace perronkit
