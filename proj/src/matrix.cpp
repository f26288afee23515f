#include "perronkit/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "perronkit/errors.hpp"

namespace perronkit {

namespace {

void check_entry(double v, std::size_t i, std::size_t j) {
    if (!std::isfinite(v)) throw NonFiniteEntry(i, j);
    if (v < 0.0) throw NegativeEntry(i, j);
}

void check_scale(std::span<const double> s, std::size_t n) {
    if (s.size() != n) throw DomainError("scaling vector length does not match matrix order");
    for (std::size_t i = 0; i < n; ++i) {
        if (!(s[i] > 0.0) || !std::isfinite(s[i])) throw NonPositiveScale(i);
    }
}

}  // namespace

const char* to_string(Side side) noexcept { return side == Side::Row ? "row" : "col"; }

NonnegMatrix NonnegMatrix::from_dense(const std::vector<std::vector<double>>& rows) {
    const std::size_t n = rows.size();
    if (n == 0) throw NotSquare(0, 0);
    for (const auto& r : rows) {
        if (r.size() != rows.front().size()) throw DomainError("rows have different lengths");
    }
    if (rows.front().size() != n) throw NotSquare(n, rows.front().size());
    std::vector<double> values;
    values.reserve(n * n);
    for (const auto& r : rows) values.insert(values.end(), r.begin(), r.end());
    return from_row_major(n, std::move(values));
}

NonnegMatrix NonnegMatrix::from_row_major(std::size_t n, std::vector<double> values) {
    if (n == 0) throw NotSquare(0, 0);
    if (values.size() != n * n) throw NotSquare(n, values.size() / n);
    for (std::size_t k = 0; k < values.size(); ++k) {
        check_entry(values[k], k / n, k % n);
        if (values[k] == 0.0) values[k] = 0.0;  // drop the sign of -0.0
    }
    NonnegMatrix m;
    m.n_ = n;
    m.values_ = std::move(values);
    return m;
}

NonnegMatrix NonnegMatrix::from_csr(std::size_t n, std::vector<std::size_t> row_ptr,
                                    std::vector<std::size_t> col_idx, std::vector<double> values) {
    if (n == 0) throw NotSquare(0, 0);
    if (row_ptr.size() != n + 1 || row_ptr.front() != 0 || row_ptr.back() != col_idx.size() ||
        col_idx.size() != values.size()) {
        throw DomainError("inconsistent CSR arrays");
    }
    NonnegMatrix m;
    m.n_ = n;
    m.row_ptr_.reserve(n + 1);
    m.row_ptr_.push_back(0);
    m.col_idx_.reserve(col_idx.size());
    m.values_.reserve(values.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (row_ptr[i + 1] < row_ptr[i]) throw DomainError("CSR row offsets decrease");
        for (std::size_t k = row_ptr[i]; k < row_ptr[i + 1]; ++k) {
            const std::size_t j = col_idx[k];
            if (j >= n) throw DomainError("CSR column index out of range");
            if (k > row_ptr[i] && j <= col_idx[k - 1]) {
                if (j == col_idx[k - 1]) throw DuplicateEntry(i, j);
                throw DomainError("CSR column indices not increasing");
            }
            check_entry(values[k], i, j);
            if (values[k] == 0.0) continue;
            m.col_idx_.push_back(j);
            m.values_.push_back(values[k]);
        }
        m.row_ptr_.push_back(m.values_.size());
    }
    return m;
}

NonnegMatrix NonnegMatrix::from_triplets(std::size_t n, std::vector<Triplet> triplets) {
    if (n == 0) throw NotSquare(0, 0);
    for (const auto& t : triplets) {
        if (t.row >= n || t.col >= n) throw DomainError("triplet index out of range");
    }
    std::stable_sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    std::vector<std::size_t> row_ptr(n + 1, 0);
    std::vector<std::size_t> col_idx;
    std::vector<double> values;
    col_idx.reserve(triplets.size());
    values.reserve(triplets.size());
    for (std::size_t k = 0; k < triplets.size(); ++k) {
        const auto& t = triplets[k];
        if (k > 0 && triplets[k - 1].row == t.row && triplets[k - 1].col == t.col) {
            throw DuplicateEntry(t.row, t.col);
        }
        ++row_ptr[t.row + 1];
        col_idx.push_back(t.col);
        values.push_back(t.value);
    }
    for (std::size_t i = 0; i < n; ++i) row_ptr[i + 1] += row_ptr[i];
    return from_csr(n, std::move(row_ptr), std::move(col_idx), std::move(values));
}

NonnegMatrix NonnegMatrix::identity(std::size_t n) {
    std::vector<double> values(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) values[i * n + i] = 1.0;
    return from_row_major(n, std::move(values));
}

double NonnegMatrix::operator()(std::size_t i, std::size_t j) const {
    if (row_ptr_.empty()) return values_[i * n_ + j];
    const auto first = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[i]);
    const auto last = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[i + 1]);
    const auto it = std::lower_bound(first, last, j);
    if (it == last || *it != j) return 0.0;
    return values_[static_cast<std::size_t>(it - col_idx_.begin())];
}

std::vector<double> NonnegMatrix::diagonal() const {
    std::vector<double> d(n_);
    for (std::size_t i = 0; i < n_; ++i) d[i] = (*this)(i, i);
    return d;
}

NonnegMatrix NonnegMatrix::with_values(std::vector<double> values) const {
    if (values.size() != values_.size()) throw DomainError("value count does not match structure");
    if (row_ptr_.empty()) return from_row_major(n_, std::move(values));
    return from_csr(n_, row_ptr_, col_idx_, std::move(values));
}

NonnegMatrix NonnegMatrix::transpose() const {
    if (row_ptr_.empty()) {
        std::vector<double> t(n_ * n_);
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) t[j * n_ + i] = values_[i * n_ + j];
        }
        NonnegMatrix m;
        m.n_ = n_;
        m.values_ = std::move(t);
        return m;
    }
    NonnegMatrix m;
    m.n_ = n_;
    m.row_ptr_.assign(n_ + 1, 0);
    for (std::size_t j : col_idx_) ++m.row_ptr_[j + 1];
    for (std::size_t i = 0; i < n_; ++i) m.row_ptr_[i + 1] += m.row_ptr_[i];
    m.col_idx_.resize(values_.size());
    m.values_.resize(values_.size());
    std::vector<std::size_t> next(m.row_ptr_.begin(), m.row_ptr_.end() - 1);
    // Rows visited in ascending order keep the transposed columns sorted.
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) {
            const std::size_t dst = next[col_idx_[k]]++;
            m.col_idx_[dst] = i;
            m.values_[dst] = values_[k];
        }
    }
    return m;
}

NonnegMatrix NonnegMatrix::with_storage(Storage storage) const {
    if (storage == this->storage()) return *this;
    if (storage == Storage::Dense) {
        std::vector<double> d(n_ * n_, 0.0);
        for (std::size_t i = 0; i < n_; ++i) {
            for_each_in_row(i, [&](std::size_t j, double v) { d[i * n_ + j] = v; });
        }
        NonnegMatrix m;
        m.n_ = n_;
        m.values_ = std::move(d);
        return m;
    }
    NonnegMatrix m;
    m.n_ = n_;
    m.row_ptr_.push_back(0);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            const double v = values_[i * n_ + j];
            if (v != 0.0) {
                m.col_idx_.push_back(j);
                m.values_.push_back(v);
            }
        }
        m.row_ptr_.push_back(m.values_.size());
    }
    return m;
}

std::vector<std::vector<double>> NonnegMatrix::to_rows() const {
    std::vector<std::vector<double>> rows(n_, std::vector<double>(n_, 0.0));
    for (std::size_t i = 0; i < n_; ++i) {
        for_each_in_row(i, [&](std::size_t j, double v) { rows[i][j] = v; });
    }
    return rows;
}

bool NonnegMatrix::same_zero_pattern(const NonnegMatrix& other) const {
    if (n_ != other.n_) return false;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (((*this)(i, j) > 0.0) != (other(i, j) > 0.0)) return false;
        }
    }
    return true;
}

bool operator==(const NonnegMatrix& a, const NonnegMatrix& b) {
    return a.n_ == b.n_ && a.row_ptr_ == b.row_ptr_ && a.col_idx_ == b.col_idx_ &&
           a.values_ == b.values_;
}

SumVector sums(const NonnegMatrix& a, Side side) {
    const std::size_t n = a.order();
    SumVector s{std::vector<double>(n, 0.0), side};
    if (side == Side::Row) {
        kernels::row_sums(a.pattern(), a.values(), s.values);
        return s;
    }
    // Column totals accumulate rows in ascending order for both storages.
    for (std::size_t i = 0; i < n; ++i) {
        a.for_each_in_row(i, [&](std::size_t j, double v) {
            if (v != 0.0) s.values[j] += v;
        });
    }
    return s;
}

NonnegMatrix rank_one_hadamard(const NonnegMatrix& a, std::span<const double> x,
                               std::span<const double> y) {
    check_scale(x, a.order());
    check_scale(y, a.order());
    std::vector<double> out(a.stored_entries());
    kernels::rank_one_scale(a.pattern(), a.values(), x, y, out);
    return a.with_values(std::move(out));
}

NonnegMatrix diag_similarity(const NonnegMatrix& a, std::span<const double> d) {
    check_scale(d, a.order());
    std::vector<double> inv(d.size());
    std::transform(d.begin(), d.end(), inv.begin(), [](double v) { return 1.0 / v; });
    return rank_one_hadamard(a, inv, d);
}

std::vector<GerschgorinDisc> gerschgorin(const NonnegMatrix& a, Side side) {
    const SumVector s = sums(a, side);
    const std::vector<double> diag = a.diagonal();
    std::vector<GerschgorinDisc> discs(a.order());
    for (std::size_t i = 0; i < discs.size(); ++i) {
        discs[i].center = diag[i];
        discs[i].radius = std::max(0.0, s[i] - diag[i]);
    }
    return discs;
}

std::vector<double> multiply(const NonnegMatrix& a, std::span<const double> v) {
    if (v.size() != a.order()) throw DomainError("vector length does not match matrix order");
    std::vector<double> out(a.order());
    kernels::matvec(a.pattern(), a.values(), v, out);
    return out;
}

}  // namespace perronkit
