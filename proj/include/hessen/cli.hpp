#pragma once

#include "hessen/closed_form.hpp"
#include "hessen/hessenberg.hpp"
#include "hessen/ldevc.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace hessen::cli {

enum class Backend { Exact, Float };

Backend parse_backend(std::string_view name);
std::string_view to_string(Backend backend) noexcept;

struct RunConfig {
    Backend backend = Backend::Exact;
    std::size_t closed_form_cap = kDefaultClosedFormCap;
    std::size_t oracle_cap = kDefaultOracleCap;
    std::uint64_t seed = 1;
    std::string out_path;
    unsigned threads = 1;

    /// Throws InvalidParams when a cap or the thread count is zero.
    void validate() const;
    [[nodiscard]] ClosedFormOptions closed_form_options() const;
};

/// Runs the command line `args` (without the program name). Returns the
/// process exit code: 0 success, 2 input/argument errors, 3 cap violations,
/// 1 anything else. Errors print one line prefixed "error:" to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Exit code for a library error.
int exit_code_for(const Error& error) noexcept;

// --- subcommands, callable directly ------------------------------------

enum class DetMethod { Recurrence, ClosedForm, Leibniz };
DetMethod parse_det_method(std::string_view name);

/// JSON text of {"backend", "method", "order", "value"} for the matrix file contents.
std::string cmd_det(std::string_view matrix_text, DetMethod method, const RunConfig& config);

/// One rendered term per line, at most `limit` lines when given.
std::string cmd_expand(std::size_t order, std::optional<std::uint64_t> limit);

/// {"bits":[...],"columns":[...],"sign":s}
std::string cmd_sep(std::size_t order, std::int64_t index);

enum class SolveMethod { RatioRecurrence, RatioClosed, ReducedRecurrence, ReducedClosed, Forward };
SolveMethod parse_solve_method(std::string_view name);

std::string cmd_solve(std::string_view spec_text, std::string_view init_text, SolveMethod method,
                      bool with_bundle, const RunConfig& config);

// --- coefficient generators --------------------------------------------

enum class Family { Constant, Periodic, Random };
Family parse_family(std::string_view name);

struct GenParams {
    Family family = Family::Random;
    std::size_t index_n = 1;
    std::size_t horizon = 10;
    /// Constant family: a(n, n+k) = coeffs[k] for k = 0..N, zero below.
    std::string coeffs;
    /// Constant family, N = 1 shorthand for coeffs = (-alpha, 1).
    std::string alpha;
    /// Constant family forcing value (default 0).
    std::string forcing;
    /// Periodic family: a(n+p, i+p) = a(n, i) and g(n+p) = g(n).
    std::size_t period = 2;
};

/// Builds the spec for `params`; random draws come from a mt19937_64 seeded
/// with config.seed, so output is byte-identical for a fixed seed.
template <FieldScalar S>
LdevcSpec<S> generate_spec(const GenParams& params, std::uint64_t seed);

std::string cmd_gen(const GenParams& params, const RunConfig& config);

// --- benchmark -------------------------------------------------------------

struct BenchRow {
    std::size_t order = 0;
    std::string method;
    std::uint64_t median_ns = 0;
};

/// Times each method on one seeded random float matrix per order, entries
/// uniform in the complex unit square; `repetitions` runs per cell.
std::vector<BenchRow> run_bench(const std::vector<std::size_t>& orders, const std::vector<DetMethod>& methods,
                                std::size_t repetitions, const RunConfig& config);

std::string to_csv(const std::vector<BenchRow>& rows);

/// Seeded float matrix with entries uniform in [0,1) x [0,1).
HessenbergMatrix<ComplexDouble> random_unit_square_matrix(std::size_t order, std::mt19937_64& rng);

std::string_view to_string(DetMethod method) noexcept;

} // namespace hessen::cli
