#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "perronkit/matrix.hpp"

namespace fixture {

// Perron root 5.739952; row/column sum ranges 4 and 2.5.
inline perronkit::NonnegMatrix three_by_three() {
    return perronkit::NonnegMatrix::from_dense({{2, 1, 0}, {0.5, 3, 2}, {1, 2, 4}});
}

// Irreducible, imprimitive: eigenvalues 3, -3, 0; column sums all 3.
inline perronkit::NonnegMatrix imprimitive() {
    return perronkit::NonnegMatrix::from_dense({{0, 1, 0}, {3, 0, 3}, {0, 2, 0}});
}

// Balances to [[3,1],[3,1]] in one step; Perron root 4.
inline perronkit::NonnegMatrix two_by_two() {
    const double s = std::sqrt(3.0);
    return perronkit::NonnegMatrix::from_dense({{3, s}, {s, 1}});
}

inline constexpr double kThreeByThreeRoot = 5.739952;

// Positive diagonal, a random Hamiltonian cycle, and random extra entries:
// irreducible with a positive diagonal, hence primitive.
inline std::vector<std::vector<double>> random_primitive_rows(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    const double fill = u(rng);
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        a[i][i] = 0.1 + u(rng);
        a[perm[i]][perm[(i + 1) % n]] = 0.1 + u(rng);
        for (std::size_t j = 0; j < n; ++j) {
            if (a[i][j] == 0.0 && u(rng) < fill) a[i][j] = 0.1 + u(rng);
        }
    }
    return a;
}

}  // namespace fixture
