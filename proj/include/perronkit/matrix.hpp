#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "perronkit/kernels.hpp"

namespace perronkit {

enum class Side { Row, Column };
enum class Storage { Dense, Csr };

const char* to_string(Side side) noexcept;

/// Per-row or per-column totals of a matrix.
struct SumVector {
    std::vector<double> values;
    Side side = Side::Row;

    std::size_t size() const noexcept { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
};

struct GerschgorinDisc {
    double center = 0.0;
    double radius = 0.0;
};

/// Square matrix with finite nonnegative entries, stored dense (row-major)
/// or as CSR with strictly increasing column indices and no stored zeros.
///
/// Instances are immutable; every factory validates its input.
class NonnegMatrix {
public:
    struct Triplet {
        std::size_t row;
        std::size_t col;
        double value;
    };

    static NonnegMatrix from_dense(const std::vector<std::vector<double>>& rows);
    static NonnegMatrix from_row_major(std::size_t n, std::vector<double> values);
    static NonnegMatrix from_csr(std::size_t n, std::vector<std::size_t> row_ptr,
                                 std::vector<std::size_t> col_idx, std::vector<double> values);
    /// Zeros are dropped; repeated (row, col) pairs raise DuplicateEntry.
    static NonnegMatrix from_triplets(std::size_t n, std::vector<Triplet> triplets);
    static NonnegMatrix identity(std::size_t n);

    std::size_t order() const noexcept { return n_; }
    Storage storage() const noexcept { return row_ptr_.empty() ? Storage::Dense : Storage::Csr; }
    std::size_t stored_entries() const noexcept { return values_.size(); }

    double operator()(std::size_t i, std::size_t j) const;
    std::vector<double> diagonal() const;

    kernels::Pattern pattern() const noexcept { return {n_, row_ptr_, col_idx_}; }
    std::span<const double> values() const noexcept { return values_; }
    std::span<const std::size_t> row_ptr() const noexcept { return row_ptr_; }
    std::span<const std::size_t> col_idx() const noexcept { return col_idx_; }

    /// Same structure, new values (validated, zeros kept in place for CSR).
    NonnegMatrix with_values(std::vector<double> values) const;

    NonnegMatrix transpose() const;
    NonnegMatrix with_storage(Storage storage) const;
    std::vector<std::vector<double>> to_rows() const;

    /// True when both matrices have positive entries in exactly the same places.
    bool same_zero_pattern(const NonnegMatrix& other) const;

    /// Visit every stored entry of row i as f(col, value), columns ascending.
    template <class F>
    void for_each_in_row(std::size_t i, F&& f) const {
        if (row_ptr_.empty()) {
            for (std::size_t j = 0; j < n_; ++j) f(j, values_[i * n_ + j]);
        } else {
            for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) f(col_idx_[k], values_[k]);
        }
    }

    friend bool operator==(const NonnegMatrix& a, const NonnegMatrix& b);

private:
    NonnegMatrix() = default;

    std::size_t n_ = 0;
    std::vector<std::size_t> row_ptr_;
    std::vector<std::size_t> col_idx_;
    std::vector<double> values_;
};

SumVector sums(const NonnegMatrix& a, Side side);

/// b_ij = a_ij * x_i * y_j. Requires x, y strictly positive.
NonnegMatrix rank_one_hadamard(const NonnegMatrix& a, std::span<const double> x,
                               std::span<const double> y);

/// D^{-1} A D, i.e. b_ij = a_ij * d_j / d_i.
NonnegMatrix diag_similarity(const NonnegMatrix& a, std::span<const double> d);

/// Row discs by default; Side::Column gives the discs of A^T.
std::vector<GerschgorinDisc> gerschgorin(const NonnegMatrix& a, Side side = Side::Row);

/// y = A v.
std::vector<double> multiply(const NonnegMatrix& a, std::span<const double> v);

}  // namespace perronkit
