#include "hessen/ldevc.hpp"

namespace hessen {

std::string_view to_string(EquationClass::Kind kind) noexcept {
    switch (kind) {
    case EquationClass::Kind::AscendingOrder: return "ascending";
    case EquationClass::Kind::NOrder: return "n-order";
    case EquationClass::Kind::UnboundedOrder: return "unbounded";
    }
    return "unknown";
}

std::string_view to_string(GeneralMethod method) noexcept {
    switch (method) {
    case GeneralMethod::RatioRecurrence: return "ratio-recurrence";
    case GeneralMethod::RatioClosed: return "ratio-closed";
    case GeneralMethod::ReducedRecurrence: return "reduced-recurrence";
    case GeneralMethod::ReducedClosed: return "reduced-closed";
    }
    return "unknown";
}

} // namespace hessen
