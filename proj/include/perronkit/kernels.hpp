#pragma once

// Row-parallel kernels shared by every module.
//
// Two implementations are kept side by side: `serial` is the reference and
// `parallel` distributes rows over OpenMP threads. Within a row both sum in
// ascending column order, so results are bit-identical.

#include <cstddef>
#include <span>

namespace perronkit::kernels {

/// Sparsity structure. An empty `row_ptr` means dense row-major storage.
struct Pattern {
    std::size_t n = 0;
    std::span<const std::size_t> row_ptr;
    std::span<const std::size_t> col_idx;

    bool dense() const noexcept { return row_ptr.empty(); }
};

/// Below this many stored entries the dispatching kernels stay serial.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 15;

/// Reports whether the library was built with OpenMP.
bool openmp_enabled() noexcept;

namespace serial {

void row_sums(Pattern p, std::span<const double> values, std::span<double> out);

// out_ij = values_ij * x_i * y_j; the diagonal is copied verbatim when
// x_i*y_i rounds to one. `out` may alias `values`.
void rank_one_scale(Pattern p, std::span<const double> values, std::span<const double> x,
                    std::span<const double> y, std::span<double> out);

void matvec(Pattern p, std::span<const double> values, std::span<const double> v,
            std::span<double> out);

}  // namespace serial

namespace parallel {

void row_sums(Pattern p, std::span<const double> values, std::span<double> out);
void rank_one_scale(Pattern p, std::span<const double> values, std::span<const double> x,
                    std::span<const double> y, std::span<double> out);
void matvec(Pattern p, std::span<const double> values, std::span<const double> v,
            std::span<double> out);

}  // namespace parallel

// Dispatch on problem size.
void row_sums(Pattern p, std::span<const double> values, std::span<double> out);
void rank_one_scale(Pattern p, std::span<const double> values, std::span<const double> x,
                    std::span<const double> y, std::span<double> out);
void matvec(Pattern p, std::span<const double> values, std::span<const double> v,
            std::span<double> out);

/// True when x*y is within two ulps of one.
bool is_unit_product(double x, double y) noexcept;

}  // namespace perronkit::kernels
