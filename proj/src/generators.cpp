#include "perronkit/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "perronkit/errors.hpp"

namespace perronkit {

NonnegMatrix tridiagonal(std::size_t n, double c, double a, double b) {
    if (n < 2) throw DomainError("tridiagonal order must be at least 2");
    if (c < 0.0) throw NegativeEntry(1, 0);
    if (a < 0.0) throw NegativeEntry(0, 0);
    if (b < 0.0) throw NegativeEntry(0, 1);
    std::vector<NonnegMatrix::Triplet> t;
    t.reserve(3 * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) t.push_back({i, i - 1, c});
        t.push_back({i, i, a});
        if (i + 1 < n) t.push_back({i, i + 1, b});
    }
    return NonnegMatrix::from_triplets(n, std::move(t));
}

std::vector<double> tridiagonal_eigs(std::size_t n, double c, double a, double b) {
    if (b * c < 0.0) throw DomainError("b*c must be nonnegative for a real spectrum");
    std::vector<double> eig(n);
    const double amp = 2.0 * std::sqrt(b * c);
    for (std::size_t k = 1; k <= n; ++k) {
        eig[k - 1] = a + amp * std::cos(static_cast<double>(k) * std::numbers::pi /
                                        static_cast<double>(n + 1));
    }
    return eig;
}

NonnegMatrix random_primitive(std::size_t n, double density, std::uint64_t seed, Storage storage) {
    if (n == 0) throw DomainError("order must be positive");
    density = std::clamp(density, 0.0, 1.0);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> value(0.1, 1.0);

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::size_t> successor(n);
    for (std::size_t k = 0; k < n; ++k) successor[perm[k]] = perm[(k + 1) % n];

    std::vector<NonnegMatrix::Triplet> t;
    std::vector<std::size_t> cols;
    std::bernoulli_distribution keep(density);
    std::uniform_int_distribution<std::size_t> any_col(0, n - 1);
    const bool sparse = static_cast<double>(n) * density < 0.25 * static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        cols.clear();
        cols.push_back(i);
        if (n > 1) cols.push_back(successor[i]);
        if (sparse) {
            // Expected n*density extra columns, drawn with rejection.
            std::binomial_distribution<std::size_t> count(n - 1, density);
            const std::size_t want = std::min(count(rng), n - cols.size());
            for (std::size_t added = 0; added < want;) {
                const std::size_t j = any_col(rng);
                if (std::find(cols.begin(), cols.end(), j) != cols.end()) continue;
                cols.push_back(j);
                ++added;
            }
        } else {
            for (std::size_t j = 0; j < n; ++j) {
                if (j != i && j != successor[i] && keep(rng)) cols.push_back(j);
            }
        }
        std::sort(cols.begin(), cols.end());
        for (std::size_t j : cols) t.push_back({i, j, value(rng)});
    }
    auto m = NonnegMatrix::from_triplets(n, std::move(t));
    return m.with_storage(storage);
}

NonnegMatrix cyclic_permutation(std::size_t n) {
    if (n == 0) throw DomainError("order must be positive");
    std::vector<NonnegMatrix::Triplet> t;
    for (std::size_t i = 0; i < n; ++i) t.push_back({i, (i + 1) % n, 1.0});
    return NonnegMatrix::from_triplets(n, std::move(t)).with_storage(Storage::Dense);
}

}  // namespace perronkit
