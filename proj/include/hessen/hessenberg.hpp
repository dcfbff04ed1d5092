#pragma once

#include "hessen/error.hpp"
#include "hessen/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hessen {

/// Number of stored (non-trivial) entries in row `row` (1-based) of an
/// order-`order` lower Hessenberg matrix: min(row + 1, order).
constexpr std::size_t stored_row_length(std::size_t order, std::size_t row) noexcept {
    return std::min(row + 1, order);
}

/// Total stored entries: n(n+3)/2 - 1.
constexpr std::size_t stored_entry_count(std::size_t order) noexcept {
    return order == 0 ? 0 : order * (order + 3) / 2 - 1;
}

/// Lower Hessenberg matrix H_n holding only the entries h(i,j) with j <= i+1.
/// All public indices are 1-based; entries above the superdiagonal are
/// structural zeros and have no storage.
template <FieldScalar S>
class HessenbergMatrix {
public:
    using scalar_type = S;

    /// Row-major list of the non-trivial entries, row i contributing
    /// min(i+1, n) values.
    static HessenbergMatrix from_entries(std::size_t order, std::vector<S> entries) {
        if (order < 1) {
            throw Error(ErrorCode::InvalidOrder, "matrix order must be at least 1");
        }
        const std::size_t expected = stored_entry_count(order);
        if (entries.size() != expected) {
            throw Error(ErrorCode::WrongEntryCount,
                        "order " + std::to_string(order) + " needs " + std::to_string(expected)
                            + " entries, got " + std::to_string(entries.size()));
        }
        return HessenbergMatrix(order, std::move(entries));
    }

    static HessenbergMatrix from_rows(const std::vector<std::vector<S>>& rows) {
        const std::size_t order = rows.size();
        if (order < 1) {
            throw Error(ErrorCode::InvalidOrder, "matrix order must be at least 1");
        }
        std::vector<S> entries;
        entries.reserve(stored_entry_count(order));
        for (std::size_t i = 1; i <= order; ++i) {
            const auto& row = rows[i - 1];
            if (row.size() != stored_row_length(order, i)) {
                throw Error(ErrorCode::WrongEntryCount,
                            "row " + std::to_string(i) + " must hold " + std::to_string(stored_row_length(order, i))
                                + " entries, got " + std::to_string(row.size()));
            }
            entries.insert(entries.end(), row.begin(), row.end());
        }
        return HessenbergMatrix(order, std::move(entries));
    }

    /// Fills every stored position (i, j), j <= min(i+1, n), from `entry(i, j)`.
    template <typename F>
    static HessenbergMatrix generate(std::size_t order, F&& entry) {
        if (order < 1) {
            throw Error(ErrorCode::InvalidOrder, "matrix order must be at least 1");
        }
        std::vector<S> entries;
        entries.reserve(stored_entry_count(order));
        for (std::size_t i = 1; i <= order; ++i) {
            for (std::size_t j = 1; j <= stored_row_length(order, i); ++j) {
                entries.push_back(S(entry(i, j)));
            }
        }
        return HessenbergMatrix(order, std::move(entries));
    }

    static HessenbergMatrix identity(std::size_t order) {
        return generate(order, [](std::size_t i, std::size_t j) { return S(i == j ? 1L : 0L); });
    }

    [[nodiscard]] std::size_t order() const noexcept { return order_; }

    /// Stored entries of row i (1-based): h(i,1) .. h(i, min(i+1, n)).
    [[nodiscard]] std::span<const S> row(std::size_t i) const {
        check_row(i);
        return {entries_.data() + row_offset(i), stored_row_length(order_, i)};
    }

    [[nodiscard]] static constexpr bool is_structural_zero(std::size_t i, std::size_t j) noexcept {
        return j > i + 1;
    }

    /// h(i,j), returning zero for structural zeros.
    [[nodiscard]] S entry(std::size_t i, std::size_t j) const {
        check_row(i);
        if (j < 1 || j > order_) {
            throw Error(ErrorCode::IndexOutOfRange, "column index out of range");
        }
        if (is_structural_zero(i, j)) return S(0L);
        return entries_[row_offset(i) + j - 1];
    }

    /// Reference to a stored h(i,j); j must satisfy j <= min(i+1, n).
    [[nodiscard]] const S& stored(std::size_t i, std::size_t j) const {
        check_row(i);
        if (j < 1 || j > stored_row_length(order_, i)) {
            throw Error(ErrorCode::IndexOutOfRange, "not a stored Hessenberg position");
        }
        return entries_[row_offset(i) + j - 1];
    }

    [[nodiscard]] std::span<const S> raw_entries() const noexcept { return entries_; }

    friend bool operator==(const HessenbergMatrix&, const HessenbergMatrix&) = default;

private:
    HessenbergMatrix(std::size_t order, std::vector<S> entries)
    : order_(order), entries_(std::move(entries)) {}

    // rows 1..i-1 store 2..i entries for i <= n
    static constexpr std::size_t row_offset(std::size_t i) noexcept { return (i - 1) * (i + 2) / 2; }

    void check_row(std::size_t i) const {
        if (i < 1 || i > order_) {
            throw Error(ErrorCode::IndexOutOfRange, "row index out of range");
        }
    }

    std::size_t order_ = 0;
    std::vector<S> entries_;
};

/// Read-only c-notation of a Hessenberg matrix: c(i,j) = h(i,j) for j <= i,
/// c(i,i+1) = -h(i,i+1), and c(0,0) = 1.
template <FieldScalar S>
class SignedFactorView {
public:
    explicit SignedFactorView(const HessenbergMatrix<S>& matrix) : matrix_(&matrix) {}

    [[nodiscard]] std::size_t order() const noexcept { return matrix_->order(); }

    [[nodiscard]] S c(std::size_t i, std::size_t j) const {
        if (i == 0 && j == 0) return S(1L);
        if (j == i + 1) return -matrix_->stored(i, j);
        return matrix_->entry(i, j);
    }

    /// Rebuilds the h-matrix from the c-entries alone.
    [[nodiscard]] HessenbergMatrix<S> reconstruct() const {
        return HessenbergMatrix<S>::generate(order(), [this](std::size_t i, std::size_t j) {
            return j == i + 1 ? S(-c(i, j)) : c(i, j);
        });
    }

private:
    const HessenbergMatrix<S>* matrix_;
};

template <FieldScalar S>
HessenbergMatrix<S> make_matrix(std::size_t order, std::vector<S> entries) {
    return HessenbergMatrix<S>::from_entries(order, std::move(entries));
}

/// det(H_0), det(H_1), ..., det(H_n) for the chain of leading submatrices,
/// by the Hessenbergian recurrence in O(n^2) scalar operations.
template <FieldScalar S>
std::vector<S> prefix_determinants(const HessenbergMatrix<S>& matrix) {
    const std::size_t n = matrix.order();
    std::vector<S> det(n + 1, S(0L));
    det[0] = S(1L);
    det[1] = matrix.stored(1, 1);
    for (std::size_t row = 2; row <= n; ++row) {
        const auto h = matrix.row(row);
        S value = h[row - 1] * det[row - 1];
        // chain = prod_{i=k}^{row-1} (-h(i,i+1)), extended one superdiagonal entry per step
        S chain(1L);
        for (std::size_t k = row - 1; k >= 1; --k) {
            chain *= -matrix.stored(k, k + 1);
            if (!is_zero(h[k - 1])) {
                value += h[k - 1] * chain * det[k - 1];
            }
        }
        det[row] = std::move(value);
    }
    return det;
}

template <FieldScalar S>
S det_recurrence(const HessenbergMatrix<S>& matrix) {
    return std::move(prefix_determinants(matrix).back());
}

inline constexpr std::size_t kDefaultOracleCap = 10;

/// Leibniz expansion over all of S_n, used as an independent oracle.
/// Entries equal to zero (structural or stored) prune the permutation prefix,
/// which contributes exactly zero to the sum.
template <FieldScalar S>
S det_leibniz(const HessenbergMatrix<S>& matrix, std::size_t oracle_cap = kDefaultOracleCap) {
    const std::size_t n = matrix.order();
    if (n > oracle_cap) {
        throw Error(ErrorCode::OrderTooLargeForOracle,
                    "order " + std::to_string(n) + " exceeds Leibniz oracle cap " + std::to_string(oracle_cap));
    }
    std::vector<S> dense(n * n, S(0L));
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) dense[(i - 1) * n + (j - 1)] = matrix.entry(i, j);
    }

    std::vector<bool> used(n, false);
    std::vector<S> partial(n + 1, S(1L));
    Accumulator<S> sum;

    // depth-first over rows; inversions counts pairs (earlier row, larger column)
    auto visit = [&](auto& self, std::size_t row, std::size_t inversions) -> void {
        if (row == n) {
            sum.add(inversions % 2 == 0 ? partial[n] : S(-partial[n]));
            return;
        }
        std::size_t larger_used = 0;
        for (std::size_t col = n; col-- > 0;) {
            if (used[col]) {
                ++larger_used;
                continue;
            }
            const S& a = dense[row * n + col];
            if (is_zero(a)) continue;
            used[col] = true;
            partial[row + 1] = partial[row] * a;
            self(self, row + 1, inversions + larger_used);
            used[col] = false;
        }
    };
    visit(visit, 0, 0);
    return sum.total();
}

} // namespace hessen
