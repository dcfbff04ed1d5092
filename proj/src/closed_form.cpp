#include "hessen/closed_form.hpp"

#include <sstream>

namespace hessen {

SymbolicTerm symbolic_term(const SepIndex& index) {
    const auto checked = make_sep_index(index.order, index.m);
    SymbolicTerm term;
    term.factors.reserve(checked.order);
    bool negate = false;
    for_each_factor(checked, [&](std::size_t row, std::size_t col, bool non_standard) {
        term.factors.emplace_back(row, col);
        negate ^= non_standard;
    });
    term.sign = negate ? -1 : 1;
    return term;
}

std::vector<SymbolicTerm> expand_symbolic(std::size_t order) {
    if (order > kMaxExpansionOrder) {
        throw Error(ErrorCode::OrderTooLargeForExpansion,
                    "order " + std::to_string(order) + " exceeds expansion cap " + std::to_string(kMaxExpansionOrder));
    }
    const auto count = sep_count(order);
    std::vector<SymbolicTerm> terms;
    terms.reserve(count);
    for (std::uint64_t m = 0; m < count; ++m) terms.push_back(symbolic_term({order, m}));
    return terms;
}

std::string render(const SymbolicTerm& term) {
    std::ostringstream os;
    os << (term.sign < 0 ? '-' : '+');
    for (const auto& [row, col] : term.factors) os << "h(" << row << ',' << col << ')';
    return os.str();
}

} // namespace hessen
