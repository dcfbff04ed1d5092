#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace hessen {

/// Complex number whose real and imaginary parts are independent
/// arbitrary-precision rationals. Closed under + - * / without rounding.
class ComplexRational {
public:
    ComplexRational() = default;
    ComplexRational(long value) : re_(value), im_(0) {}  // NOLINT(google-explicit-constructor)
    ComplexRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    /// Builds re_num/re_den + (im_num/im_den) i; denominators must be nonzero.
    static ComplexRational from_parts(const mpz_class& re_num, const mpz_class& re_den,
                                      const mpz_class& im_num, const mpz_class& im_den);

    [[nodiscard]] const mpq_class& real() const noexcept { return re_; }
    [[nodiscard]] const mpq_class& imag() const noexcept { return im_; }

    [[nodiscard]] bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }

    ComplexRational& operator+=(const ComplexRational& rhs) {
        re_ += rhs.re_;
        im_ += rhs.im_;
        return *this;
    }
    ComplexRational& operator-=(const ComplexRational& rhs) {
        re_ -= rhs.re_;
        im_ -= rhs.im_;
        return *this;
    }
    ComplexRational& operator*=(const ComplexRational& rhs);
    ComplexRational& operator/=(const ComplexRational& rhs);

    friend ComplexRational operator+(ComplexRational lhs, const ComplexRational& rhs) { return lhs += rhs; }
    friend ComplexRational operator-(ComplexRational lhs, const ComplexRational& rhs) { return lhs -= rhs; }
    friend ComplexRational operator*(ComplexRational lhs, const ComplexRational& rhs) { return lhs *= rhs; }
    friend ComplexRational operator/(ComplexRational lhs, const ComplexRational& rhs) { return lhs /= rhs; }
    friend ComplexRational operator-(const ComplexRational& value) {
        return ComplexRational(mpq_class(-value.re_), mpq_class(-value.im_));
    }

    friend bool operator==(const ComplexRational& lhs, const ComplexRational& rhs) {
        return lhs.re_ == rhs.re_ && lhs.im_ == rhs.im_;
    }

    /// Nearest complex double (each part rounded independently).
    [[nodiscard]] std::complex<double> to_complex_double() const { return {re_.get_d(), im_.get_d()}; }

    /// Human-readable form, e.g. "3/4", "-2i", "1/2+5/3i".
    [[nodiscard]] std::string str() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const ComplexRational& value);

using ComplexDouble = std::complex<double>;

/// A commutative field element usable by every algorithm in the library.
template <typename S>
concept FieldScalar = std::regular<S> && requires(S a, const S& b, long k) {
    S(k);
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { a / b } -> std::convertible_to<S>;
    { -b } -> std::convertible_to<S>;
    a += b;
    a *= b;
};

template <typename S>
struct ScalarTraits;

template <>
struct ScalarTraits<ComplexRational> {
    static constexpr std::string_view backend = "exact";
    static constexpr bool exact = true;
    static bool is_zero(const ComplexRational& value) noexcept { return value.is_zero(); }
    static double magnitude(const ComplexRational& value) { return std::abs(value.to_complex_double()); }
};

template <>
struct ScalarTraits<ComplexDouble> {
    static constexpr std::string_view backend = "float";
    static constexpr bool exact = false;
    static bool is_zero(const ComplexDouble& value) noexcept { return value == ComplexDouble{}; }
    static double magnitude(const ComplexDouble& value) { return std::abs(value); }
};

template <typename S>
bool is_zero(const S& value) {
    return ScalarTraits<S>::is_zero(value);
}

/// (-1)^k as a scalar.
template <typename S>
S sign_power(std::size_t k) {
    return S(k % 2 == 0 ? 1L : -1L);
}

/// Running sum. Exact scalars add directly; complex doubles use Neumaier
/// compensation on each component.
template <typename S>
class Accumulator {
public:
    void add(const S& value) { sum_ += value; }
    void add(const Accumulator& other) { sum_ += other.sum_; }
    [[nodiscard]] S total() const { return sum_; }

private:
    S sum_{0L};
};

template <>
class Accumulator<ComplexDouble> {
public:
    void add(const ComplexDouble& value) {
        add_component(sum_re_, comp_re_, value.real());
        add_component(sum_im_, comp_im_, value.imag());
    }
    void add(const Accumulator& other) { add(other.total()); }
    [[nodiscard]] ComplexDouble total() const { return {sum_re_ + comp_re_, sum_im_ + comp_im_}; }

private:
    static void add_component(double& sum, double& comp, double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }

    double sum_re_ = 0.0;
    double comp_re_ = 0.0;
    double sum_im_ = 0.0;
    double comp_im_ = 0.0;
};

} // namespace hessen
