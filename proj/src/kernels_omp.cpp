#include <cstdint>

#include "kernel_rows.hpp"
#include "perronkit/kernels.hpp"

namespace perronkit::kernels {

bool openmp_enabled() noexcept {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

namespace parallel {

// Signed loop counters for OpenMP; rows are independent so any schedule
// gives the serial result.

void row_sums(Pattern p, std::span<const double> values, std::span<double> out) {
    const auto n = static_cast<std::int64_t>(p.n);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = detail::row_sum(p, values, static_cast<std::size_t>(i));
    }
}

void rank_one_scale(Pattern p, std::span<const double> values, std::span<const double> x,
                    std::span<const double> y, std::span<double> out) {
    const auto n = static_cast<std::int64_t>(p.n);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        detail::scale_row(p, values, x, y, out, static_cast<std::size_t>(i));
    }
}

void matvec(Pattern p, std::span<const double> values, std::span<const double> v,
            std::span<double> out) {
    const auto n = static_cast<std::int64_t>(p.n);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = detail::row_dot(p, values, v, static_cast<std::size_t>(i));
    }
}

}  // namespace parallel
}  // namespace perronkit::kernels
