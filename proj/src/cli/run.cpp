#include "hessen/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace hessen::cli {

int exit_code_for(const Error& error) noexcept {
    if (error.is_cap_violation()) return 3;
    switch (error.code()) {
    case ErrorCode::DivisionByZero:
    case ErrorCode::InvariantViolated:
        return 1;
    default:
        return 2;
    }
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot read \"" + path + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void emit(const std::string& text, const RunConfig& config, std::ostream& out) {
    if (config.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(config.out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw Error(ErrorCode::InvalidParams, "cannot write \"" + config.out_path + "\"");
    file << text;
}

std::string one_line(std::string message) {
    for (auto& c : message) {
        if (c == '\n' || c == '\r') c = ' ';
    }
    return message;
}

template <typename T>
std::vector<T> split_list(const std::string& text, T (*convert)(const std::string&)) {
    std::vector<T> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(convert(item));
    }
    return out;
}

std::size_t to_size(const std::string& text) {
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
        if (!text.empty() && text.front() == '-') throw std::invalid_argument("negative");
        value = std::stoull(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size()) throw Error(ErrorCode::InvalidParams, "bad order \"" + text + "\"");
    return static_cast<std::size_t>(value);
}

DetMethod to_det_method(const std::string& text) {
    return parse_det_method(text);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"hessen: Hessenberg determinants and linear difference equations"};
    app.require_subcommand(1);

    RunConfig config;
    std::string backend = "exact";
    app.add_option("--backend", backend, "Scalar backend: exact (complex rationals) or float (complex double)")
        ->check(CLI::IsMember({"exact", "float"}));
    app.add_option("--seed", config.seed, "Seed for generators and benchmarks");
    app.add_option("--out", config.out_path, "Write output to this file instead of stdout");
    app.add_option("--closed-cap", config.closed_form_cap, "Largest order accepted by the closed form");
    app.add_option("--oracle-cap", config.oracle_cap, "Largest order accepted by the Leibniz oracle");
    app.add_option("--threads", config.threads, "Partitions for the closed-form sum (>1 runs in parallel)");

    std::string matrix_path;
    std::string det_method = "recurrence";
    auto* det = app.add_subcommand("det", "Determinant of a lower Hessenberg matrix file");
    det->fallthrough();
    det->add_option("matrix", matrix_path, "Matrix JSON file")->required();
    det->add_option("--method", det_method, "recurrence|closed|leibniz")
        ->check(CLI::IsMember({"recurrence", "closed", "leibniz"}));

    std::size_t expand_order = 0;
    std::uint64_t expand_limit = 0;
    auto* expand = app.add_subcommand("expand", "Signed symbolic expansion, one term per line");
    expand->fallthrough();
    expand->add_option("--order", expand_order, "Matrix order")->required();
    auto* limit_opt = expand->add_option("--limit", expand_limit, "Print at most this many terms");

    std::size_t sep_order = 0;
    std::int64_t sep_index = 0;
    auto* sep = app.add_subcommand("sep", "Bits, columns and sign of one signed elementary product");
    sep->fallthrough();
    sep->add_option("--order", sep_order, "Matrix order")->required();
    sep->add_option("--index", sep_index, "Index m in [0, 2^(n-1))")->required();

    std::string spec_path;
    std::string init_text;
    std::string solve_method = "ratio-recurrence";
    bool with_bundle = false;
    auto* solve = app.add_subcommand("solve", "Solve a difference equation spec");
    solve->fallthrough();
    solve->add_option("spec", spec_path, "Spec JSON file")->required();
    solve->add_option("--init", init_text, "Initial values y(-N),...,y(-1), comma separated");
    solve->add_option("--method", solve_method, "ratio-recurrence|ratio-closed|reduced-recurrence|reduced-closed|forward")
        ->check(CLI::IsMember({"ratio-recurrence", "ratio-closed", "reduced-recurrence", "reduced-closed", "forward"}));
    solve->add_flag("--bundle", with_bundle, "Also print fundamental and particular solutions");

    GenParams gen_params;
    std::string family = "random";
    auto* gen = app.add_subcommand("gen", "Generate a difference equation spec");
    gen->fallthrough();
    gen->add_option("--family", family, "constant|periodic|random")
        ->check(CLI::IsMember({"constant", "periodic", "random"}));
    gen->add_option("--N", gen_params.index_n, "Index N");
    gen->add_option("--horizon", gen_params.horizon, "Last row n_max");
    gen->add_option("--alpha", gen_params.alpha, "Constant first-order family: y(n) = alpha y(n-1)");
    gen->add_option("--coeffs", gen_params.coeffs, "Constant family band a(n,n..n+N), comma separated");
    gen->add_option("--forcing", gen_params.forcing, "Constant family forcing value");
    gen->add_option("--period", gen_params.period, "Periodic family period");

    std::string bench_orders;
    std::string bench_methods = "recurrence,closed";
    std::size_t bench_reps = 5;
    auto* bench = app.add_subcommand("bench", "Time determinant methods; CSV order,method,median_ns");
    bench->fallthrough();
    bench->add_option("--orders", bench_orders, "Comma-separated matrix orders")->required();
    bench->add_option("--methods", bench_methods, "Comma-separated methods");
    bench->add_option("--reps", bench_reps, "Repetitions per cell");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << one_line(e.what()) << '\n';
        return 2;
    }

    try {
        config.backend = parse_backend(backend);
        config.validate();
        if (det->parsed()) {
            emit(cmd_det(read_file(matrix_path), parse_det_method(det_method), config), config, out);
        } else if (expand->parsed()) {
            emit(cmd_expand(expand_order, limit_opt->count() > 0 ? std::optional(expand_limit) : std::nullopt),
                 config, out);
        } else if (sep->parsed()) {
            emit(cmd_sep(sep_order, sep_index), config, out);
        } else if (solve->parsed()) {
            emit(cmd_solve(read_file(spec_path), init_text, parse_solve_method(solve_method), with_bundle, config),
                 config, out);
        } else if (gen->parsed()) {
            gen_params.family = parse_family(family);
            emit(cmd_gen(gen_params, config), config, out);
        } else if (bench->parsed()) {
            const auto orders = split_list<std::size_t>(bench_orders, &to_size);
            const auto methods = split_list<DetMethod>(bench_methods, &to_det_method);
            emit(to_csv(run_bench(orders, methods, bench_reps, config)), config, out);
        }
    } catch (const Error& e) {
        err << "error: " << one_line(e.what()) << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        err << "error: " << one_line(e.what()) << '\n';
        return 1;
    }
    return 0;
}

} // namespace hessen::cli
