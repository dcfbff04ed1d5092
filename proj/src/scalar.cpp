#include "hessen/scalar.hpp"

#include "hessen/error.hpp"

#include <sstream>

namespace hessen {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::WrongEntryCount: return "WrongEntryCount";
    case ErrorCode::OrderTooLargeForOracle: return "OrderTooLargeForOracle";
    case ErrorCode::OrderTooLargeForClosedForm: return "OrderTooLargeForClosedForm";
    case ErrorCode::OrderTooLargeForExpansion: return "OrderTooLargeForExpansion";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotInRangeSet: return "NotInRangeSet";
    case ErrorCode::InvalidSep: return "InvalidSep";
    case ErrorCode::IrregularOrder: return "IrregularOrder";
    case ErrorCode::WrongShape: return "WrongShape";
    case ErrorCode::WrongInitLength: return "WrongInitLength";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvariantViolated: return "InvariantViolated";
    }
    return "Unknown";
}

ComplexRational ComplexRational::from_parts(const mpz_class& re_num, const mpz_class& re_den,
                                            const mpz_class& im_num, const mpz_class& im_den) {
    if (sgn(re_den) == 0 || sgn(im_den) == 0) {
        throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
    }
    return {mpq_class(re_num, re_den), mpq_class(im_num, im_den)};
}

ComplexRational& ComplexRational::operator*=(const ComplexRational& rhs) {
    // (a+bi)(c+di) = (ac-bd) + (ad+bc)i
    mpq_class re = re_ * rhs.re_ - im_ * rhs.im_;
    mpq_class im = re_ * rhs.im_ + im_ * rhs.re_;
    re_.swap(re);
    im_.swap(im);
    return *this;
}

ComplexRational& ComplexRational::operator/=(const ComplexRational& rhs) {
    if (rhs.is_zero()) {
        throw Error(ErrorCode::DivisionByZero, "division by exact zero");
    }
    if (sgn(rhs.im_) == 0) {
        re_ /= rhs.re_;
        im_ /= rhs.re_;
        return *this;
    }
    const mpq_class norm = rhs.re_ * rhs.re_ + rhs.im_ * rhs.im_;
    mpq_class re = (re_ * rhs.re_ + im_ * rhs.im_) / norm;
    mpq_class im = (im_ * rhs.re_ - re_ * rhs.im_) / norm;
    re_.swap(re);
    im_.swap(im);
    return *this;
}

std::string ComplexRational::str() const {
    std::ostringstream os;
    const bool has_re = sgn(re_) != 0;
    const bool has_im = sgn(im_) != 0;
    if (!has_im) {
        os << re_;
        return os.str();
    }
    if (has_re) {
        os << re_;
        if (sgn(im_) > 0) os << '+';
    }
    os << im_ << 'i';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const ComplexRational& value) {
    return os << value.str();
}

} // namespace hessen
