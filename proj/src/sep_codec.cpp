#include "hessen/sep_codec.hpp"

#include <string>

namespace hessen {

namespace {

void check_order(std::size_t order) {
    if (order < 1 || order > kMaxCodecOrder) {
        throw Error(ErrorCode::InvalidOrder,
                    "SEP order must be in [1, 64], got " + std::to_string(order));
    }
}

} // namespace

BitArray::BitArray(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    if (bits_.empty()) {
        throw Error(ErrorCode::NotInRangeSet, "empty bit array");
    }
    for (auto b : bits_) {
        if (b > 1) throw Error(ErrorCode::NotInRangeSet, "bit values must be 0 or 1");
    }
    if (bits_.back() != 1) {
        throw Error(ErrorCode::NotInRangeSet, "last bit must be 1");
    }
}

std::uint64_t BitArray::as_integer() const {
    if (bits_.size() > 64) {
        throw Error(ErrorCode::IndexOutOfRange, "bit array longer than 64 bits");
    }
    std::uint64_t value = 0;
    for (auto b : bits_) value = (value << 1) | b;
    return value;
}

std::uint64_t sep_count(std::size_t order) {
    check_order(order);
    return std::uint64_t{1} << (order - 1);
}

SepIndex make_sep_index(std::size_t order, std::uint64_t m) {
    if (m >= sep_count(order)) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "index " + std::to_string(m) + " outside [0, 2^" + std::to_string(order - 1) + ")");
    }
    return {order, m};
}

SepIndex make_sep_index(std::size_t order, std::int64_t m) {
    if (m < 0) {
        throw Error(ErrorCode::IndexOutOfRange, "negative SEP index " + std::to_string(m));
    }
    return make_sep_index(order, static_cast<std::uint64_t>(m));
}

BitArray tau(const SepIndex& index) {
    const auto checked = make_sep_index(index.order, index.m);
    std::vector<std::uint8_t> bits(checked.order, 1);
    for (std::size_t i = 1; i < checked.order; ++i) {
        bits[i - 1] = static_cast<std::uint8_t>((checked.m >> (checked.order - 1 - i)) & 1U);
    }
    return BitArray(std::move(bits));
}

BitArray tau(std::size_t order, std::int64_t m) {
    return tau(make_sep_index(order, m));
}

SepFactors decode_columns(const BitArray& bits) {
    const std::size_t n = bits.order();
    SepFactors out;
    out.columns.resize(n);
    std::size_t zeros_run = 0;
    std::size_t zeros_total = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        if (bits[i] == 0) {
            out.columns[i - 1] = i + 1;
            ++zeros_run;
            ++zeros_total;
        } else {
            out.columns[i - 1] = i - zeros_run;
            zeros_run = 0;
        }
    }
    out.sign = zeros_total % 2 == 0 ? 1 : -1;
    return out;
}

SepFactors decode_columns(std::span<const std::uint8_t> bits) {
    return decode_columns(BitArray({bits.begin(), bits.end()}));
}

BitArray encode_sep(const SepFactors& factors) {
    const std::size_t n = factors.order();
    if (n == 0) throw Error(ErrorCode::InvalidSep, "empty column sequence");
    std::vector<bool> seen(n + 1, false);
    std::vector<std::uint8_t> bits(n);
    std::size_t non_standard = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        const std::size_t col = factors.columns[i - 1];
        if (col < 1 || col > n || seen[col]) {
            throw Error(ErrorCode::InvalidSep, "columns are not a permutation of 1..n");
        }
        if (col > i + 1) {
            throw Error(ErrorCode::InvalidSep,
                        "row " + std::to_string(i) + " uses structural zero column " + std::to_string(col));
        }
        seen[col] = true;
        if (col == i + 1) {
            bits[i - 1] = 0;
            ++non_standard;
        } else {
            bits[i - 1] = 1;
        }
    }
    const int expected_sign = non_standard % 2 == 0 ? 1 : -1;
    if (factors.sign != expected_sign) {
        throw Error(ErrorCode::InvalidSep, "sign does not match the count of superdiagonal factors");
    }
    // a permutation with pi_i <= i+1 cannot end on the superdiagonal, so bits.back() == 1
    return BitArray(std::move(bits));
}

SepRange::iterator::value_type SepRange::iterator::operator*() const {
    const SepIndex index{order_, m_};
    return {index, decode_columns(tau(index))};
}

SepRange enumerate_seps(std::size_t order) {
    return {order, 0, sep_count(order)};
}

SepRange enumerate_seps(std::size_t order, std::uint64_t first, std::uint64_t last) {
    const auto count = sep_count(order);
    if (first > last || last > count) {
        throw Error(ErrorCode::IndexOutOfRange, "enumeration bounds outside [0, 2^{n-1}]");
    }
    return {order, first, last};
}

} // namespace hessen
