#pragma once

// Correspondence between integers m in [0, 2^{n-1}), binary arrays ending
// in 1, and the non-trivial signed elementary products (SEPs) of an order-n
// lower Hessenberg determinant.

#include "hessen/error.hpp"

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <utility>
#include <vector>

namespace hessen {

/// Largest order whose SEP index fits in 64 bits.
inline constexpr std::size_t kMaxCodecOrder = 64;

/// Binary array (r_1, ..., r_n) with r_n = 1.
class BitArray {
public:
    /// Throws NotInRangeSet unless every bit is 0/1 and the last one is 1.
    explicit BitArray(std::vector<std::uint8_t> bits);

    [[nodiscard]] std::size_t order() const noexcept { return bits_.size(); }
    [[nodiscard]] std::span<const std::uint8_t> bits() const noexcept { return bits_; }
    /// 1-based access.
    [[nodiscard]] std::uint8_t operator[](std::size_t i) const { return bits_.at(i - 1); }

    /// The n bits read as a base-2 integer, r_1 most significant.
    [[nodiscard]] std::uint64_t as_integer() const;

    friend bool operator==(const BitArray&, const BitArray&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

struct SepIndex {
    std::size_t order = 1;
    std::uint64_t m = 0;

    friend bool operator==(const SepIndex&, const SepIndex&) = default;
};

/// Validates 0 <= m < 2^{order-1} and 1 <= order <= 64.
SepIndex make_sep_index(std::size_t order, std::int64_t m);
SepIndex make_sep_index(std::size_t order, std::uint64_t m);

/// Column taken in each row (1-based) plus the sign of the product.
struct SepFactors {
    std::vector<std::size_t> columns;
    int sign = 1;

    [[nodiscard]] std::size_t order() const noexcept { return columns.size(); }

    friend bool operator==(const SepFactors&, const SepFactors&) = default;
};

/// 2^{n-1}.
std::uint64_t sep_count(std::size_t order);

BitArray tau(const SepIndex& index);
BitArray tau(std::size_t order, std::int64_t m);

SepFactors decode_columns(const BitArray& bits);
/// Same, for raw bits; throws NotInRangeSet when the array is not in the range set.
SepFactors decode_columns(std::span<const std::uint8_t> bits);

/// Inverse of decode_columns; throws InvalidSep on non-permutations, on
/// columns beyond the superdiagonal, or on a sign that breaks the sign law.
BitArray encode_sep(const SepFactors& factors);

/// Calls visit(row, column, non_standard) for rows 1..n of the m-th SEP,
/// without allocating. A zero bit takes the superdiagonal entry; a one bit
/// takes column row - k, where k counts the zero bits run immediately before.
template <typename Visit>
void for_each_factor(const SepIndex& index, Visit&& visit) {
    const std::size_t n = index.order;
    std::size_t zeros_run = 0;
    for (std::size_t row = 1; row <= n; ++row) {
        const bool bit = row == n || ((index.m >> (n - 1 - row)) & 1U) != 0;
        if (bit) {
            visit(row, row - zeros_run, false);
            zeros_run = 0;
        } else {
            visit(row, row + 1, true);
            ++zeros_run;
        }
    }
}

/// Lazy ascending stream of (index, factors) for m in [first, last).
class SepRange {
public:
    class iterator {
    public:
        using value_type = std::pair<SepIndex, SepFactors>;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        iterator() = default;
        iterator(std::size_t order, std::uint64_t m) : order_(order), m_(m) {}

        [[nodiscard]] value_type operator*() const;
        iterator& operator++() {
            ++m_;
            return *this;
        }
        iterator operator++(int) {
            auto copy = *this;
            ++m_;
            return copy;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.m_ == b.m_; }

    private:
        std::size_t order_ = 1;
        std::uint64_t m_ = 0;
    };

    SepRange(std::size_t order, std::uint64_t first, std::uint64_t last)
    : order_(order), first_(first), last_(last) {}

    [[nodiscard]] iterator begin() const { return {order_, first_}; }
    [[nodiscard]] iterator end() const { return {order_, last_}; }
    [[nodiscard]] std::uint64_t size() const noexcept { return last_ - first_; }

private:
    std::size_t order_;
    std::uint64_t first_;
    std::uint64_t last_;
};

SepRange enumerate_seps(std::size_t order);
/// Sub-range [first, last) of the enumeration, for partitioned consumers.
SepRange enumerate_seps(std::size_t order, std::uint64_t first, std::uint64_t last);

} // namespace hessen
