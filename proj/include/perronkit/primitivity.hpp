#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "perronkit/matrix.hpp"
#include "perronkit/solver.hpp"

namespace perronkit {

/// n x n boolean matrix, one bit row of 64-bit words per matrix row.
class BoolPattern {
public:
    explicit BoolPattern(std::size_t n);
    /// true where a_ij > 0.
    static BoolPattern of(const NonnegMatrix& a);
    static BoolPattern identity(std::size_t n);

    std::size_t order() const noexcept { return n_; }
    bool test(std::size_t i, std::size_t j) const noexcept {
        return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
    }
    void set(std::size_t i, std::size_t j) noexcept { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }

    bool all_true() const noexcept;
    BoolPattern operator|(const BoolPattern& other) const;
    /// Boolean semiring product: (this * other)_ij = OR_k this_ik AND other_kj.
    BoolPattern operator*(const BoolPattern& other) const;
    friend bool operator==(const BoolPattern&, const BoolPattern&) = default;

private:
    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

/// n^2 - 2n + 2.
std::size_t wielandt_bound(std::size_t n) noexcept;

/// (I + P)^(n-1) is all-true, by repeated squaring.
bool is_irreducible(const NonnegMatrix& a);

/// P^m all-true for some m <= n^2 - 2n + 2.
bool is_primitive(const NonnegMatrix& a);

enum class Agreement { Agree, Disagree, Inconclusive };

const char* to_string(Agreement a) noexcept;

struct StagnationCheck {
    Status solver_status = Status::Converged;
    bool primitive = false;
    Agreement agreement = Agreement::Inconclusive;
};

/// Compares the solver's stagnation verdict with the exact structural test.
/// Stagnated should coincide with "not primitive"; MaxIterations is inconclusive.
StagnationCheck stagnation_cross_check(const NonnegMatrix& a, const PerronResult& run);

}  // namespace perronkit
