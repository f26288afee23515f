#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "perronkit/bounds.hpp"
#include "perronkit/errors.hpp"
#include "perronkit/power.hpp"
#include "perronkit/solver.hpp"

using namespace perronkit;

TEST(Frobenius, Examples) {
    const Interval r = frobenius_bounds(fixture::three_by_three(), Side::Row);
    EXPECT_EQ(r.lo, 3);
    EXPECT_EQ(r.hi, 7);
    const Interval c = frobenius_bounds(fixture::imprimitive(), Side::Column);
    EXPECT_EQ(c.lo, 3);
    EXPECT_EQ(c.hi, 3);
    const Interval id = frobenius_bounds(NonnegMatrix::identity(5), Side::Row);
    EXPECT_EQ(id.lo, 1);
    EXPECT_EQ(id.hi, 1);
}

TEST(Minc, ColumnIntervalOfThreeByThree) {
    const auto a = fixture::three_by_three();
    const Interval f = frobenius_bounds(a, Side::Column);
    const Interval m = minc_bounds(a, Side::Column);
    EXPECT_DOUBLE_EQ(f.width(), 2.5);
    EXPECT_GE(m.lo, f.lo);
    EXPECT_LE(m.hi, f.hi);
    EXPECT_TRUE(m.contains(fixture::kThreeByThreeRoot));
    EXPECT_LT(m.width(), f.width());
}

TEST(Minc, EqualRowSumsCollapse) {
    const auto a = NonnegMatrix::from_dense({{1, 2}, {2, 1}});
    const Interval m = minc_bounds(a, Side::Row);
    EXPECT_DOUBLE_EQ(m.lo, 3);
    EXPECT_DOUBLE_EQ(m.hi, 3);
}

TEST(Minc, ImprimitiveRowIntervalInsideFrobenius) {
    const auto a = fixture::imprimitive();
    const Interval f = frobenius_bounds(a, Side::Row);
    EXPECT_EQ(f.lo, 1);
    EXPECT_EQ(f.hi, 6);
    const Interval m = minc_bounds(a, Side::Row);
    EXPECT_GE(m.lo, f.lo);
    EXPECT_LE(m.hi, f.hi);
    EXPECT_TRUE(m.contains(3.0, 1e-12));
}

TEST(Minc, ZeroSumIsRejected) {
    const auto a = NonnegMatrix::from_dense({{1, 1}, {0, 0}});
    EXPECT_THROW(minc_bounds(a, Side::Row), ZeroSum);
    EXPECT_NO_THROW(minc_bounds(NonnegMatrix::from_dense({{1, 0}, {1, 1}}), Side::Row));
    try {
        minc_bounds(NonnegMatrix::from_dense({{1, 0}, {1, 0}}), Side::Column);
        FAIL();
    } catch (const ZeroSum& e) {
        EXPECT_EQ(e.index(), 1u);
    }
}

TEST(Bounds, NestingAndContainmentOnRandomMatrices) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + trial % 5;
        const auto a = NonnegMatrix::from_dense(fixture::random_primitive_rows(rng, n));
        const BoundsReport b = bounds_report(a);
        const double slack = 1e-12 * b.frobenius_row.hi;
        EXPECT_LE(b.frobenius_row.lo, b.minc_row.lo + slack);
        EXPECT_LE(b.minc_row.lo, b.minc_row.hi);
        EXPECT_LE(b.minc_row.hi, b.frobenius_row.hi + slack);
        EXPECT_LE(b.frobenius_col.lo, b.minc_col.lo + slack);
        EXPECT_LE(b.minc_col.lo, b.minc_col.hi);
        EXPECT_LE(b.minc_col.hi, b.frobenius_col.hi + slack);

        const PowerResult p = power_method(a, 1e-12, 200000);
        ASSERT_EQ(p.status, PowerStatus::Converged);
        for (const Interval& i : {b.frobenius_row, b.frobenius_col, b.minc_row, b.minc_col}) {
            EXPECT_TRUE(i.contains(p.eigenvalue, 1e-9)) << trial;
        }
    }
}

TEST(Perron2x2, Examples) {
    const Perron2x2 p = perron_2x2(fixture::two_by_two());
    EXPECT_NEAR(p.root, 4.0, 1e-12);
    EXPECT_NEAR(p.x, 1.0 / std::sqrt(3.0), 1e-12);
    EXPECT_DOUBLE_EQ(perron_2x2(NonnegMatrix::from_dense({{0, 1}, {1, 0}})).root, 1.0);
    EXPECT_DOUBLE_EQ(perron_2x2(NonnegMatrix::from_dense({{2, 1}, {1, 2}})).root, 3.0);
}

TEST(Perron2x2, BalancesBothRows) {
    const auto a = NonnegMatrix::from_dense({{1.5, 0.25}, {4, 0.5}});
    const Perron2x2 p = perron_2x2(a);
    const double r1 = a(0, 0) + a(0, 1) * p.x;
    const double r2 = a(1, 0) / p.x + a(1, 1);
    EXPECT_NEAR(r1, p.root, 1e-12);
    EXPECT_NEAR(r2, p.root, 1e-12);
}

TEST(Perron2x2, RejectsZeroOffDiagonalAndOtherOrders) {
    EXPECT_THROW(perron_2x2(NonnegMatrix::from_dense({{1, 0}, {1, 1}})), NotApplicable);
    EXPECT_THROW(perron_2x2(NonnegMatrix::from_dense({{1, 1}, {0, 1}})), NotApplicable);
    EXPECT_THROW(perron_2x2(fixture::three_by_three()), NotApplicable);
}

TEST(Perron2x2, MatchesSolverAndCharacteristicRoot) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.01, 10.0);
    for (int trial = 0; trial < 100; ++trial) {
        const double a11 = u(rng), a12 = u(rng), a21 = u(rng), a22 = u(rng);
        const auto a = NonnegMatrix::from_dense({{a11, a12}, {a21, a22}});
        const Perron2x2 p = perron_2x2(a);
        SolverConfig cfg;
        cfg.tolerance = 1e-12;
        const PerronResult r = algorithm_b(a, cfg);
        ASSERT_EQ(r.status, Status::Converged);
        EXPECT_NEAR(p.root, r.root, 1e-10 * std::max(1.0, p.root));
        // Larger root of t^2 - (a11 + a22) t + (a11 a22 - a12 a21).
        const double tr = a11 + a22, det = a11 * a22 - a12 * a21;
        const double larger = 0.5 * (tr + std::sqrt(tr * tr - 4 * det));
        EXPECT_NEAR(p.root, larger, 1e-12 * std::max(1.0, larger));
    }
}
