#pragma once

#include "hessen/hessenberg.hpp"
#include "hessen/sep_codec.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace hessen {

inline constexpr std::size_t kDefaultClosedFormCap = 28;
inline constexpr std::size_t kMaxExpansionOrder = 16;

struct ClosedFormOptions {
    std::size_t cap = kDefaultClosedFormCap;
    /// Number of contiguous m-chunks; 1 sums sequentially in ascending m.
    unsigned partitions = 1;
    /// Run chunks on separate threads (otherwise chunks are summed in turn).
    bool parallel = false;
};

/// Product value of the m-th non-trivial SEP: prod_i c(i, pi_i), so the sign
/// enters through the negated superdiagonal factors.
template <FieldScalar S>
S chi(const HessenbergMatrix<S>& matrix, const SepIndex& index) {
    if (index.order != matrix.order()) {
        throw Error(ErrorCode::IndexOutOfRange, "SEP index order does not match matrix order");
    }
    const auto checked = make_sep_index(matrix.order(), index.m);
    S product(1L);
    bool negate = false;
    bool zero = false;
    for_each_factor(checked, [&](std::size_t row, std::size_t col, bool non_standard) {
        if (zero) return;
        const S& h = matrix.stored(row, col);
        if (is_zero(h)) {
            zero = true;
            return;
        }
        product *= h;
        negate ^= non_standard;
    });
    if (zero) return S(0L);
    return negate ? S(-product) : product;
}

template <FieldScalar S>
S chi(const HessenbergMatrix<S>& matrix, std::uint64_t m) {
    return chi(matrix, SepIndex{matrix.order(), m});
}

namespace detail {

template <FieldScalar S>
Accumulator<S> sum_chi_range(const HessenbergMatrix<S>& matrix, std::uint64_t first, std::uint64_t last) {
    Accumulator<S> acc;
    for (std::uint64_t m = first; m < last; ++m) {
        acc.add(chi(matrix, SepIndex{matrix.order(), m}));
    }
    return acc;
}

inline std::vector<std::pair<std::uint64_t, std::uint64_t>> split_range(std::uint64_t count, unsigned parts) {
    parts = std::max(1U, parts);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> chunks;
    const std::uint64_t base = count / parts;
    const std::uint64_t extra = count % parts;
    std::uint64_t first = 0;
    for (unsigned p = 0; p < parts; ++p) {
        const std::uint64_t len = base + (p < extra ? 1 : 0);
        chunks.emplace_back(first, first + len);
        first += len;
    }
    return chunks;
}

} // namespace detail

/// det(H_n) as the sum of chi(m) over m = 0 .. 2^{n-1}-1.
template <FieldScalar S>
S det_closed_form(const HessenbergMatrix<S>& matrix, const ClosedFormOptions& options = {}) {
    const std::size_t n = matrix.order();
    if (n > options.cap || n > kMaxCodecOrder) {
        throw Error(ErrorCode::OrderTooLargeForClosedForm,
                    "order " + std::to_string(n) + " exceeds closed-form cap " + std::to_string(options.cap));
    }
    const std::uint64_t count = sep_count(n);
    if (options.partitions <= 1) {
        return detail::sum_chi_range(matrix, 0, count).total();
    }

    const auto chunks = detail::split_range(count, options.partitions);
    std::vector<Accumulator<S>> partial(chunks.size());
    if (options.parallel) {
        std::vector<std::jthread> workers;
        workers.reserve(chunks.size());
        for (std::size_t c = 0; c < chunks.size(); ++c) {
            workers.emplace_back([&, c] { partial[c] = detail::sum_chi_range(matrix, chunks[c].first, chunks[c].second); });
        }
    } else {
        for (std::size_t c = 0; c < chunks.size(); ++c) {
            partial[c] = detail::sum_chi_range(matrix, chunks[c].first, chunks[c].second);
        }
    }
    Accumulator<S> total;
    for (const auto& p : partial) total.add(p);
    return total.total();
}

/// One signed term of the symbolic expansion; factors are 1-based (row, column).
struct SymbolicTerm {
    int sign = 1;
    std::vector<std::pair<std::size_t, std::size_t>> factors;

    friend bool operator==(const SymbolicTerm&, const SymbolicTerm&) = default;
};

/// Signed product of h entries for SEP m, e.g. m=0, n=2 gives -h(1,2)h(2,1).
SymbolicTerm symbolic_term(const SepIndex& index);

/// All 2^{n-1} terms in ascending m. Throws OrderTooLargeForExpansion for n > 16.
std::vector<SymbolicTerm> expand_symbolic(std::size_t order);

/// "+h(1,1)h(2,2)" style rendering.
std::string render(const SymbolicTerm& term);

} // namespace hessen
