#pragma once

// Regular-order linear difference equations with variable coefficients,
//
//   a(n,0) y(-N) + a(n,1) y(1-N) + ... + a(n,N+n) y(n) = g(n),   n >= 0,
//
// solved through lower Hessenberg solution matrices whose determinants give
// the fundamental, particular and general solutions.

#include "hessen/closed_form.hpp"
#include "hessen/hessenberg.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hessen {

template <FieldScalar S>
class LdevcSpec {
public:
    /// coeffs[n] holds a(n,0..N+n); forcing holds g(0..horizon). The horizon
    /// is coeffs.size() - 1. Throws WrongShape or IrregularOrder.
    static LdevcSpec create(std::size_t index_n, std::vector<std::vector<S>> coeffs, std::vector<S> forcing) {
        if (coeffs.empty()) {
            throw Error(ErrorCode::WrongShape, "equation needs at least one row (horizon >= 0)");
        }
        if (forcing.size() != coeffs.size()) {
            throw Error(ErrorCode::WrongShape, "forcing has " + std::to_string(forcing.size())
                                                   + " values, expected " + std::to_string(coeffs.size()));
        }
        for (std::size_t n = 0; n < coeffs.size(); ++n) {
            if (coeffs[n].size() != index_n + n + 1) {
                throw Error(ErrorCode::WrongShape, "row " + std::to_string(n) + " must hold "
                                                       + std::to_string(index_n + n + 1) + " coefficients, got "
                                                       + std::to_string(coeffs[n].size()));
            }
        }
        LdevcSpec spec(index_n, std::move(coeffs), std::move(forcing));
        spec.check_regular();
        return spec;
    }

    [[nodiscard]] std::size_t index_n() const noexcept { return index_n_; }
    [[nodiscard]] std::size_t horizon() const noexcept { return coeffs_.size() - 1; }

    /// a(n,i), 0 <= i <= N+n.
    [[nodiscard]] const S& a(std::size_t n, std::size_t i) const { return coeffs_.at(n).at(i); }
    [[nodiscard]] const S& g(std::size_t n) const { return forcing_.at(n); }
    /// a(n,N+n), the coefficient of the newest unknown.
    [[nodiscard]] const S& leading(std::size_t n) const { return coeffs_.at(n).back(); }

    [[nodiscard]] std::span<const S> row(std::size_t n) const { return coeffs_.at(n); }
    [[nodiscard]] std::span<const S> forcing() const noexcept { return forcing_; }

    void check_regular() const {
        for (std::size_t n = 0; n < coeffs_.size(); ++n) {
            if (is_zero(coeffs_[n].back())) {
                throw Error(ErrorCode::IrregularOrder,
                            "a(" + std::to_string(n) + "," + std::to_string(index_n_ + n) + ") is zero");
            }
        }
    }

    friend bool operator==(const LdevcSpec&, const LdevcSpec&) = default;

private:
    LdevcSpec(std::size_t index_n, std::vector<std::vector<S>> coeffs, std::vector<S> forcing)
    : index_n_(index_n), coeffs_(std::move(coeffs)), forcing_(std::move(forcing)) {}

    std::size_t index_n_ = 0;
    std::vector<std::vector<S>> coeffs_;
    std::vector<S> forcing_;
};

struct EquationClass {
    enum class Kind { AscendingOrder, NOrder, UnboundedOrder };
    Kind kind = Kind::UnboundedOrder;
    std::size_t index_n = 0;

    friend bool operator==(const EquationClass&, const EquationClass&) = default;
};

std::string_view to_string(EquationClass::Kind kind) noexcept;

/// y(-N), ..., y(-1); init[k] is y(k-N).
template <FieldScalar S>
using InitialConditions = std::vector<S>;

template <FieldScalar S>
EquationClass classify(const LdevcSpec<S>& spec) {
    spec.check_regular();
    const std::size_t big_n = spec.index_n();
    if (big_n == 0) return {EquationClass::Kind::UnboundedOrder, 0};
    bool lower_zero = true;
    bool some_diagonal = false;
    for (std::size_t n = 0; n <= spec.horizon() && lower_zero; ++n) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!is_zero(spec.a(n, i))) {
                lower_zero = false;
                break;
            }
        }
        if (!is_zero(spec.a(n, n))) some_diagonal = true;
    }
    if (lower_zero && some_diagonal) return {EquationClass::Kind::NOrder, big_n};
    return {EquationClass::Kind::AscendingOrder, big_n};
}

/// a(0,N) a(1,N+1) ... a(n,N+n).
template <FieldScalar S>
S leading_product(const LdevcSpec<S>& spec, std::size_t n) {
    S product(1L);
    for (std::size_t k = 0; k <= n; ++k) product *= spec.leading(k);
    return product;
}

namespace detail {

template <FieldScalar S>
void check_row_index(const LdevcSpec<S>& spec, std::size_t n) {
    if (n > spec.horizon()) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "row " + std::to_string(n) + " beyond horizon " + std::to_string(spec.horizon()));
    }
}

template <FieldScalar S>
void check_init(const LdevcSpec<S>& spec, std::span<const S> init) {
    if (init.size() != spec.index_n()) {
        throw Error(ErrorCode::WrongInitLength, "expected " + std::to_string(spec.index_n())
                                                    + " initial values, got " + std::to_string(init.size()));
    }
}

/// (n+1)x(n+1) matrix: column 1 from first(r), column j >= 2 holds a(r, N+j-2)
/// for 0-based rows r >= j-2.
template <FieldScalar S, typename First>
HessenbergMatrix<S> solution_matrix(const LdevcSpec<S>& spec, std::size_t n, First&& first) {
    check_row_index(spec, n);
    const std::size_t big_n = spec.index_n();
    return HessenbergMatrix<S>::generate(n + 1, [&](std::size_t i, std::size_t j) -> S {
        if (j == 1) return first(i - 1);
        return spec.a(i - 1, big_n + j - 2);
    });
}

/// g(r) - sum_{k<N} a(r,k) y(k-N)
template <FieldScalar S>
S general_first_column(const LdevcSpec<S>& spec, std::size_t r, std::span<const S> init) {
    S value = spec.g(r);
    for (std::size_t k = 0; k < init.size(); ++k) value -= spec.a(r, k) * init[k];
    return value;
}

template <FieldScalar S>
bool agrees(const S& a, const S& b, double scale) {
    if constexpr (ScalarTraits<S>::exact) {
        (void)scale;
        return a == b;
    } else {
        return ScalarTraits<S>::magnitude(a - b) <= 1e-8 * (1.0 + scale);
    }
}

} // namespace detail

enum class DeterminantMethod { Recurrence, ClosedForm };

template <FieldScalar S>
S determinant(const HessenbergMatrix<S>& matrix, DeterminantMethod method, const ClosedFormOptions& options = {}) {
    return method == DeterminantMethod::Recurrence ? det_recurrence(matrix) : det_closed_form(matrix, options);
}

/// Xi_n^(i): first column a(0..n, i), remaining columns a(., N), a(., N+1), ...
template <FieldScalar S>
HessenbergMatrix<S> fundamental_matrix(const LdevcSpec<S>& spec, std::size_t n, std::size_t i) {
    if (i >= spec.index_n()) {
        throw Error(ErrorCode::IndexOutOfRange, "fundamental index " + std::to_string(i) + " needs 0 <= i < N = "
                                                    + std::to_string(spec.index_n()));
    }
    return detail::solution_matrix(spec, n, [&](std::size_t r) { return spec.a(r, i); });
}

/// xi(n,i) = (-1)^{n+1} det(Xi_n^(i)) / prod_{k<=n} a(k,N+k)
template <FieldScalar S>
S fundamental_solution(const LdevcSpec<S>& spec, std::size_t n, std::size_t i,
                       DeterminantMethod method = DeterminantMethod::Recurrence,
                       const ClosedFormOptions& options = {}) {
    const auto xi = fundamental_matrix(spec, n, i);
    return sign_power<S>(n + 1) * determinant(xi, method, options) / leading_product(spec, n);
}

/// P_n: first column g(0..n).
template <FieldScalar S>
HessenbergMatrix<S> particular_matrix(const LdevcSpec<S>& spec, std::size_t n) {
    return detail::solution_matrix(spec, n, [&](std::size_t r) { return spec.g(r); });
}

/// p(n) = (-1)^n det(P_n) / prod_{k<=n} a(k,N+k)
template <FieldScalar S>
S particular_solution(const LdevcSpec<S>& spec, std::size_t n,
                      DeterminantMethod method = DeterminantMethod::Recurrence,
                      const ClosedFormOptions& options = {}) {
    return sign_power<S>(n) * determinant(particular_matrix(spec, n), method, options) / leading_product(spec, n);
}

/// G_n: first column g(r) - sum_k a(r,k) y(k-N).
template <FieldScalar S>
HessenbergMatrix<S> general_matrix(const LdevcSpec<S>& spec, std::size_t n, std::span<const S> init) {
    detail::check_init(spec, init);
    return detail::solution_matrix(spec, n, [&](std::size_t r) { return detail::general_first_column(spec, r, init); });
}

/// G_n with its first column multiplied by (-1)^n / prod_{k<=n} a(k,N+k), so
/// that its determinant is y(n) itself.
template <FieldScalar S>
HessenbergMatrix<S> reduced_general_matrix(const LdevcSpec<S>& spec, std::size_t n, std::span<const S> init) {
    detail::check_init(spec, init);
    const S scale = sign_power<S>(n) / leading_product(spec, n);
    return detail::solution_matrix(spec, n, [&](std::size_t r) {
        return S(detail::general_first_column(spec, r, init) * scale);
    });
}

enum class GeneralMethod { RatioRecurrence, RatioClosed, ReducedRecurrence, ReducedClosed };

std::string_view to_string(GeneralMethod method) noexcept;

template <FieldScalar S>
S general_solution(const LdevcSpec<S>& spec, std::size_t n, std::span<const S> init, GeneralMethod method,
                   const ClosedFormOptions& options = {}) {
    switch (method) {
    case GeneralMethod::RatioRecurrence:
        return sign_power<S>(n) * det_recurrence(general_matrix(spec, n, init)) / leading_product(spec, n);
    case GeneralMethod::RatioClosed:
        return sign_power<S>(n) * det_closed_form(general_matrix(spec, n, init), options) / leading_product(spec, n);
    case GeneralMethod::ReducedRecurrence:
        return det_recurrence(reduced_general_matrix(spec, n, init));
    case GeneralMethod::ReducedClosed:
        return det_closed_form(reduced_general_matrix(spec, n, init), options);
    }
    throw Error(ErrorCode::InvalidParams, "unknown general-solution method");
}

/// y(0..horizon) by direct substitution: each row solved for its newest unknown.
template <FieldScalar S>
std::vector<S> solve_forward(const LdevcSpec<S>& spec, std::span<const S> init) {
    detail::check_init(spec, init);
    const std::size_t big_n = spec.index_n();
    // y[k] holds y(k - N)
    std::vector<S> y(init.begin(), init.end());
    y.reserve(big_n + spec.horizon() + 1);
    for (std::size_t n = 0; n <= spec.horizon(); ++n) {
        S rhs = spec.g(n);
        for (std::size_t i = 0; i < big_n + n; ++i) rhs -= spec.a(n, i) * y[i];
        y.push_back(rhs / spec.leading(n));
    }
    return {y.begin() + static_cast<std::ptrdiff_t>(big_n), y.end()};
}

template <FieldScalar S>
struct SolutionBundle {
    /// fundamentals[i][n] = xi(n,i), one sequence per basis element i < N.
    std::vector<std::vector<S>> fundamentals;
    std::vector<S> particulars;
    std::vector<S> generals;

    [[nodiscard]] const S& xi(std::size_t n, std::size_t i) const { return fundamentals.at(i).at(n); }
};

/// Fundamental, particular and general solutions for rows 0..horizon. Each
/// family comes from the prefix determinants of its largest solution matrix,
/// since Xi_n, P_n and G_n are leading submatrices of Xi_{n+1}, P_{n+1} and
/// G_{n+1}. Throws InvariantViolated if y(n) != p(n) + sum_k xi(n,k) y(k-N).
template <FieldScalar S>
SolutionBundle<S> solve_bundle(const LdevcSpec<S>& spec, std::span<const S> init) {
    detail::check_init(spec, init);
    const std::size_t big_n = spec.index_n();
    const std::size_t horizon = spec.horizon();

    std::vector<S> inverse_leading(horizon + 1);
    {
        S product(1L);
        for (std::size_t n = 0; n <= horizon; ++n) {
            product *= spec.leading(n);
            inverse_leading[n] = S(1L) / product;
        }
    }
    auto ratio_sequence = [&](const HessenbergMatrix<S>& largest, std::size_t sign_shift) {
        const auto det = prefix_determinants(largest);
        std::vector<S> out(horizon + 1);
        for (std::size_t n = 0; n <= horizon; ++n) {
            out[n] = sign_power<S>(n + sign_shift) * det[n + 1] * inverse_leading[n];
        }
        return out;
    };

    SolutionBundle<S> bundle;
    bundle.fundamentals.reserve(big_n);
    for (std::size_t i = 0; i < big_n; ++i) {
        bundle.fundamentals.push_back(ratio_sequence(fundamental_matrix(spec, horizon, i), 1));
    }
    bundle.particulars = ratio_sequence(particular_matrix(spec, horizon), 0);
    bundle.generals = ratio_sequence(general_matrix(spec, horizon, init), 0);

    for (std::size_t n = 0; n <= horizon; ++n) {
        S combined = bundle.particulars[n];
        double scale = ScalarTraits<S>::magnitude(combined);
        for (std::size_t k = 0; k < big_n; ++k) {
            const S term = bundle.fundamentals[k][n] * init[k];
            scale += ScalarTraits<S>::magnitude(term);
            combined += term;
        }
        if (!detail::agrees(bundle.generals[n], combined, scale)) {
            throw Error(ErrorCode::InvariantViolated,
                        "general solution differs from particular + homogeneous part at n = " + std::to_string(n));
        }
    }
    return bundle;
}

} // namespace hessen
