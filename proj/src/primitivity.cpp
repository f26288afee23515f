#include "perronkit/primitivity.hpp"

#include <algorithm>

namespace perronkit {

BoolPattern::BoolPattern(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

BoolPattern BoolPattern::of(const NonnegMatrix& a) {
    BoolPattern p(a.order());
    for (std::size_t i = 0; i < a.order(); ++i) {
        a.for_each_in_row(i, [&](std::size_t j, double v) {
            if (v > 0.0) p.set(i, j);
        });
    }
    return p;
}

BoolPattern BoolPattern::identity(std::size_t n) {
    BoolPattern p(n);
    for (std::size_t i = 0; i < n; ++i) p.set(i, i);
    return p;
}

bool BoolPattern::all_true() const noexcept {
    const std::size_t tail = n_ % 64;
    const std::uint64_t last_mask = tail == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << tail) - 1;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t w = 0; w < words_; ++w) {
            const std::uint64_t mask = w + 1 == words_ ? last_mask : ~std::uint64_t{0};
            if ((bits_[i * words_ + w] & mask) != mask) return false;
        }
    }
    return true;
}

BoolPattern BoolPattern::operator|(const BoolPattern& other) const {
    BoolPattern out(*this);
    for (std::size_t k = 0; k < bits_.size(); ++k) out.bits_[k] |= other.bits_[k];
    return out;
}

BoolPattern BoolPattern::operator*(const BoolPattern& other) const {
    // Row i of the product is the OR of the rows of `other` selected by row i.
    BoolPattern out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        std::uint64_t* dst = &out.bits_[i * words_];
        for (std::size_t k = 0; k < n_; ++k) {
            if (!test(i, k)) continue;
            const std::uint64_t* src = &other.bits_[k * words_];
            for (std::size_t w = 0; w < words_; ++w) dst[w] |= src[w];
        }
    }
    return out;
}

std::size_t wielandt_bound(std::size_t n) noexcept { return n * n - 2 * n + 2; }

bool is_irreducible(const NonnegMatrix& a) {
    const std::size_t n = a.order();
    if (n == 1) return true;
    BoolPattern m = BoolPattern::of(a) | BoolPattern::identity(n);
    // (I+P)^k only grows with k, so squaring past n-1 is harmless.
    for (std::size_t power = 1; power < n - 1; power *= 2) m = m * m;
    return m.all_true();
}

bool is_primitive(const NonnegMatrix& a) {
    const std::size_t n = a.order();
    const BoolPattern p = BoolPattern::of(a);
    if (n == 1) return p.test(0, 0);
    // A zero row or column persists in every power.
    for (std::size_t i = 0; i < n; ++i) {
        bool row = false, col = false;
        for (std::size_t j = 0; j < n && !(row && col); ++j) {
            row = row || p.test(i, j);
            col = col || p.test(j, i);
        }
        if (!row || !col) return false;
    }

    // All-true is absorbing here: P^m all-true implies P^(m+1) all-true
    // because P has no zero column.
    const std::size_t bound = wielandt_bound(n);
    BoolPattern sq = p;
    std::size_t power = 1;
    if (sq.all_true()) return true;
    while (power * 2 <= bound) {
        sq = sq * sq;
        power *= 2;
        if (sq.all_true()) return true;
    }
    if (power == bound) return false;
    // Exact P^bound by binary exponentiation.
    BoolPattern result = BoolPattern::identity(n);
    BoolPattern base = p;
    for (std::size_t e = bound; e > 0; e >>= 1) {
        if (e & 1U) result = result * base;
        if (e > 1) base = base * base;
    }
    return result.all_true();
}

const char* to_string(Agreement a) noexcept {
    switch (a) {
        case Agreement::Agree: return "agree";
        case Agreement::Disagree: return "disagree";
        case Agreement::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

StagnationCheck stagnation_cross_check(const NonnegMatrix& a, const PerronResult& run) {
    StagnationCheck check;
    check.solver_status = run.status;
    check.primitive = is_primitive(a);
    if (run.status == Status::MaxIterations) {
        check.agreement = Agreement::Inconclusive;
    } else {
        const bool stagnated = run.status == Status::Stagnated;
        check.agreement = stagnated != check.primitive ? Agreement::Agree : Agreement::Disagree;
    }
    return check;
}

}  // namespace perronkit
