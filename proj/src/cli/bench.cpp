#include "hessen/cli.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace hessen::cli {

namespace {

volatile double g_sink = 0.0;

std::uint64_t time_once(const HessenbergMatrix<ComplexDouble>& matrix, DetMethod method, const RunConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    ComplexDouble value;
    switch (method) {
    case DetMethod::Recurrence: value = det_recurrence(matrix); break;
    case DetMethod::ClosedForm: value = det_closed_form(matrix, config.closed_form_options()); break;
    case DetMethod::Leibniz: value = det_leibniz(matrix, config.oracle_cap); break;
    }
    const auto stop = std::chrono::steady_clock::now();
    g_sink = g_sink + value.real();
    return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
}

void check_caps(std::size_t order, DetMethod method, const RunConfig& config) {
    if (method == DetMethod::ClosedForm && order > config.closed_form_cap) {
        throw Error(ErrorCode::OrderTooLargeForClosedForm, "order " + std::to_string(order)
                                                               + " exceeds closed-form cap "
                                                               + std::to_string(config.closed_form_cap));
    }
    if (method == DetMethod::Leibniz && order > config.oracle_cap) {
        throw Error(ErrorCode::OrderTooLargeForOracle,
                    "order " + std::to_string(order) + " exceeds Leibniz oracle cap " + std::to_string(config.oracle_cap));
    }
}

} // namespace

std::vector<BenchRow> run_bench(const std::vector<std::size_t>& orders, const std::vector<DetMethod>& methods,
                                std::size_t repetitions, const RunConfig& config) {
    config.validate();
    if (repetitions == 0) throw Error(ErrorCode::InvalidParams, "repetitions must be positive");
    if (orders.empty() || methods.empty()) throw Error(ErrorCode::InvalidParams, "need at least one order and method");
    for (auto order : orders) {
        if (order < 1) throw Error(ErrorCode::InvalidOrder, "bench orders must be at least 1");
        for (auto method : methods) check_caps(order, method, config);
    }

    std::mt19937_64 rng(config.seed);
    std::vector<BenchRow> rows;
    for (auto order : orders) {
        const auto matrix = random_unit_square_matrix(order, rng);
        for (auto method : methods) {
            std::vector<std::uint64_t> samples;
            samples.reserve(repetitions);
            for (std::size_t r = 0; r < repetitions; ++r) samples.push_back(time_once(matrix, method, config));
            std::sort(samples.begin(), samples.end());
            const std::size_t mid = samples.size() / 2;
            const std::uint64_t median =
                samples.size() % 2 == 1 ? samples[mid] : (samples[mid - 1] + samples[mid]) / 2;
            rows.push_back({order, std::string(to_string(method)), median});
        }
    }
    return rows;
}

std::string to_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream os;
    os << "order,method,median_ns\n";
    for (const auto& row : rows) os << row.order << ',' << row.method << ',' << row.median_ns << '\n';
    return os.str();
}

} // namespace hessen::cli
