#include "hessen/cli.hpp"
#include "hessen/io.hpp"
#include "hessen/sep_codec.hpp"

#include <sstream>

namespace hessen::cli {

using io::json;

Backend parse_backend(std::string_view name) {
    if (name == "exact") return Backend::Exact;
    if (name == "float") return Backend::Float;
    throw Error(ErrorCode::InvalidParams, "unknown backend \"" + std::string(name) + "\" (exact|float)");
}

std::string_view to_string(Backend backend) noexcept {
    return backend == Backend::Exact ? "exact" : "float";
}

void RunConfig::validate() const {
    if (closed_form_cap == 0) throw Error(ErrorCode::InvalidParams, "closed-form cap must be positive");
    if (oracle_cap == 0) throw Error(ErrorCode::InvalidParams, "oracle cap must be positive");
    if (threads == 0) throw Error(ErrorCode::InvalidParams, "thread count must be positive");
}

ClosedFormOptions RunConfig::closed_form_options() const {
    return {closed_form_cap, threads, threads > 1};
}

DetMethod parse_det_method(std::string_view name) {
    if (name == "recurrence") return DetMethod::Recurrence;
    if (name == "closed") return DetMethod::ClosedForm;
    if (name == "leibniz") return DetMethod::Leibniz;
    throw Error(ErrorCode::InvalidParams, "unknown method \"" + std::string(name) + "\" (recurrence|closed|leibniz)");
}

std::string_view to_string(DetMethod method) noexcept {
    switch (method) {
    case DetMethod::Recurrence: return "recurrence";
    case DetMethod::ClosedForm: return "closed";
    case DetMethod::Leibniz: return "leibniz";
    }
    return "unknown";
}

SolveMethod parse_solve_method(std::string_view name) {
    if (name == "ratio-recurrence") return SolveMethod::RatioRecurrence;
    if (name == "ratio-closed") return SolveMethod::RatioClosed;
    if (name == "reduced-recurrence") return SolveMethod::ReducedRecurrence;
    if (name == "reduced-closed") return SolveMethod::ReducedClosed;
    if (name == "forward") return SolveMethod::Forward;
    throw Error(ErrorCode::InvalidParams, "unknown solve method \"" + std::string(name) + "\"");
}

namespace {

std::string_view to_string(SolveMethod method) noexcept {
    switch (method) {
    case SolveMethod::RatioRecurrence: return "ratio-recurrence";
    case SolveMethod::RatioClosed: return "ratio-closed";
    case SolveMethod::ReducedRecurrence: return "reduced-recurrence";
    case SolveMethod::ReducedClosed: return "reduced-closed";
    case SolveMethod::Forward: return "forward";
    }
    return "unknown";
}

template <FieldScalar S>
S determinant_of(const HessenbergMatrix<S>& matrix, DetMethod method, const RunConfig& config) {
    switch (method) {
    case DetMethod::Recurrence: return det_recurrence(matrix);
    case DetMethod::ClosedForm: return det_closed_form(matrix, config.closed_form_options());
    case DetMethod::Leibniz: return det_leibniz(matrix, config.oracle_cap);
    }
    throw Error(ErrorCode::InvalidParams, "unknown determinant method");
}

template <FieldScalar S>
std::string det_as(std::string_view matrix_text, DetMethod method, const RunConfig& config) {
    const auto matrix = io::matrix_from_json<S>(io::parse_document(matrix_text));
    const S value = determinant_of(matrix, method, config);
    const json doc{{"backend", ScalarTraits<S>::backend},
                   {"method", to_string(method)},
                   {"order", matrix.order()},
                   {"value", io::to_json(value)}};
    return doc.dump() + "\n";
}

template <FieldScalar S>
json scalar_array(std::span<const S> values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(io::to_json(v));
    return out;
}

GeneralMethod general_method(SolveMethod method) {
    switch (method) {
    case SolveMethod::RatioRecurrence: return GeneralMethod::RatioRecurrence;
    case SolveMethod::RatioClosed: return GeneralMethod::RatioClosed;
    case SolveMethod::ReducedRecurrence: return GeneralMethod::ReducedRecurrence;
    case SolveMethod::ReducedClosed: return GeneralMethod::ReducedClosed;
    case SolveMethod::Forward: break;
    }
    throw Error(ErrorCode::InvalidParams, "forward is not a Hessenbergian method");
}

template <FieldScalar S>
std::string solve_as(std::string_view spec_text, std::string_view init_text, SolveMethod method,
                     bool with_bundle, const RunConfig& config) {
    const auto spec = io::spec_from_json<S>(io::parse_document(spec_text));
    const auto init = io::parse_scalar_list<S>(init_text);
    const std::span<const S> init_view(init);

    std::vector<S> y;
    if (method == SolveMethod::Forward) {
        y = solve_forward(spec, init_view);
    } else {
        const auto options = config.closed_form_options();
        y.reserve(spec.horizon() + 1);
        for (std::size_t n = 0; n <= spec.horizon(); ++n) {
            y.push_back(general_solution(spec, n, init_view, general_method(method), options));
        }
    }

    const auto kind = classify(spec);
    json doc{{"backend", ScalarTraits<S>::backend},
             {"method", to_string(method)},
             {"class", to_string(kind.kind)},
             {"N", spec.index_n()},
             {"horizon", spec.horizon()},
             {"y", scalar_array<S>(y)}};
    if (with_bundle) {
        const auto bundle = solve_bundle(spec, init_view);
        json fundamentals = json::array();
        for (const auto& seq : bundle.fundamentals) fundamentals.push_back(scalar_array<S>(seq));
        doc["fundamentals"] = std::move(fundamentals);
        doc["particulars"] = scalar_array<S>(bundle.particulars);
    }
    return doc.dump() + "\n";
}

} // namespace

std::string cmd_det(std::string_view matrix_text, DetMethod method, const RunConfig& config) {
    config.validate();
    if (config.backend == Backend::Exact) return det_as<ComplexRational>(matrix_text, method, config);
    return det_as<ComplexDouble>(matrix_text, method, config);
}

std::string cmd_expand(std::size_t order, std::optional<std::uint64_t> limit) {
    if (order > kMaxExpansionOrder) {
        throw Error(ErrorCode::OrderTooLargeForExpansion,
                    "order " + std::to_string(order) + " exceeds expansion cap " + std::to_string(kMaxExpansionOrder));
    }
    const auto count = sep_count(order);
    const auto shown = limit ? std::min(*limit, count) : count;
    std::ostringstream os;
    for (std::uint64_t m = 0; m < shown; ++m) os << render(symbolic_term({order, m})) << '\n';
    return os.str();
}

std::string cmd_sep(std::size_t order, std::int64_t index) {
    const auto bits = tau(order, index);
    const auto factors = decode_columns(bits);
    json doc{{"bits", json(std::vector<int>(bits.bits().begin(), bits.bits().end()))},
             {"columns", json(factors.columns)},
             {"sign", factors.sign}};
    return doc.dump() + "\n";
}

std::string cmd_solve(std::string_view spec_text, std::string_view init_text, SolveMethod method,
                      bool with_bundle, const RunConfig& config) {
    config.validate();
    if (config.backend == Backend::Exact) {
        return solve_as<ComplexRational>(spec_text, init_text, method, with_bundle, config);
    }
    return solve_as<ComplexDouble>(spec_text, init_text, method, with_bundle, config);
}

} // namespace hessen::cli
