#include "hessen/io.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <optional>

namespace hessen::io {

namespace {

[[noreturn]] void parse_error(const std::string& message) {
    throw Error(ErrorCode::ParseError, message);
}

json integer_to_json(const mpz_class& value) {
    if (value.fits_slong_p()) return json(value.get_si());
    return json(value.get_str());
}

mpz_class integer_from_json(const json& value) {
    if (value.is_number_integer()) {
        if (value.is_number_unsigned()) return mpz_class(std::to_string(value.get<std::uint64_t>()));
        return mpz_class(value.get<long>());
    }
    if (value.is_string()) {
        mpz_class out;
        if (out.set_str(value.get<std::string>(), 10) != 0) {
            parse_error("not a decimal integer: \"" + value.get<std::string>() + "\"");
        }
        return out;
    }
    parse_error("exact scalar parts must be integers, got " + value.dump());
}

std::string_view trim(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    return text;
}

/// Splits "re(+|-)im i" into its real and imaginary texts; either may be absent.
struct ComplexText {
    std::string_view re;
    std::optional<std::string> im;
};

ComplexText split_complex(std::string_view text) {
    text = trim(text);
    if (text.empty()) parse_error("empty scalar");
    if (text.back() != 'i') return {text, std::nullopt};
    text.remove_suffix(1);
    std::size_t split = std::string_view::npos;
    for (std::size_t k = text.size(); k-- > 1;) {
        if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    std::string_view re = split == std::string_view::npos ? std::string_view{} : text.substr(0, split);
    std::string im(split == std::string_view::npos ? text : text.substr(split));
    if (im.empty() || im == "+") im = "1";
    if (im == "-") im = "-1";
    return {re, im};
}

mpq_class parse_exact_real(std::string_view text) {
    text = trim(text);
    if (text.empty()) parse_error("empty number");
    const auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        mpz_class num;
        mpz_class den;
        std::string num_text(trim(text.substr(0, slash)));
        std::string den_text(trim(text.substr(slash + 1)));
        if (!num_text.empty() && num_text.front() == '+') num_text.erase(0, 1);
        if (num_text.empty() || den_text.empty() || num.set_str(num_text, 10) != 0 || den.set_str(den_text, 10) != 0) {
            parse_error("bad rational \"" + std::string(text) + "\"");
        }
        if (sgn(den) == 0) parse_error("zero denominator in \"" + std::string(text) + "\"");
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }
    // decimal: [sign] digits [. digits] [e [sign] digits]
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') negative = text[pos++] == '-';
    std::string digits;
    std::size_t frac_len = 0;
    bool seen_point = false;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            if (seen_point) ++frac_len;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    long exponent = 0;
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
        const std::string exp_text(text.substr(pos + 1));
        std::size_t used = 0;
        try {
            exponent = std::stol(exp_text, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != exp_text.size()) parse_error("bad exponent in \"" + std::string(text) + "\"");
        pos = text.size();
    }
    if (digits.empty() || pos != text.size()) parse_error("bad number \"" + std::string(text) + "\"");
    mpz_class num(digits, 10);
    if (negative) num = -num;
    const long scale = exponent - static_cast<long>(frac_len);
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
    mpq_class q = scale >= 0 ? mpq_class(num * power) : mpq_class(num, power);
    q.canonicalize();
    return q;
}

double parse_float_real(std::string_view text) {
    text = trim(text);
    if (text.find('/') != std::string_view::npos) return parse_exact_real(text).get_d();
    const std::string owned(text);
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(owned, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != owned.size()) parse_error("bad number \"" + owned + "\"");
    return value;
}

} // namespace

void require(bool condition, const std::string& message) {
    if (!condition) parse_error(message);
}

std::size_t size_from_json(const json& object, const char* key) {
    require(object.contains(key), std::string("missing \"") + key + "\"");
    const auto& value = object[key];
    require(value.is_number_integer() && value.get<long long>() >= 0,
            std::string("\"") + key + "\" must be a non-negative integer");
    return value.get<std::size_t>();
}

json to_json(const ComplexRational& value) {
    return json::array({integer_to_json(value.real().get_num()), integer_to_json(value.real().get_den()),
                        integer_to_json(value.imag().get_num()), integer_to_json(value.imag().get_den())});
}

json to_json(const ComplexDouble& value) {
    return json::array({value.real(), value.imag()});
}

template <>
ComplexRational scalar_from_json<ComplexRational>(const json& value) {
    if (value.is_number_integer()) return {mpq_class(integer_from_json(value)), mpq_class(0)};
    if (!value.is_array() || value.size() != 4) {
        parse_error("exact scalar must be [re_num, re_den, im_num, im_den], got " + value.dump());
    }
    const auto re_den = integer_from_json(value[1]);
    const auto im_den = integer_from_json(value[3]);
    if (sgn(re_den) == 0 || sgn(im_den) == 0) parse_error("zero denominator in " + value.dump());
    return ComplexRational::from_parts(integer_from_json(value[0]), re_den, integer_from_json(value[2]), im_den);
}

template <>
ComplexDouble scalar_from_json<ComplexDouble>(const json& value) {
    if (value.is_number()) return {value.get<double>(), 0.0};
    if (value.is_array() && value.size() == 2 && value[0].is_number() && value[1].is_number()) {
        return {value[0].get<double>(), value[1].get<double>()};
    }
    if (value.is_array() && value.size() == 4) {
        return scalar_from_json<ComplexRational>(value).to_complex_double();
    }
    parse_error("float scalar must be [re, im], got " + value.dump());
}

template <>
ComplexRational parse_scalar_text<ComplexRational>(std::string_view text) {
    const auto parts = split_complex(text);
    mpq_class re = parts.re.empty() ? mpq_class(0) : parse_exact_real(parts.re);
    mpq_class im = parts.im ? parse_exact_real(*parts.im) : mpq_class(0);
    return {std::move(re), std::move(im)};
}

template <>
ComplexDouble parse_scalar_text<ComplexDouble>(std::string_view text) {
    const auto parts = split_complex(text);
    const double re = parts.re.empty() ? 0.0 : parse_float_real(parts.re);
    const double im = parts.im ? parse_float_real(*parts.im) : 0.0;
    return {re, im};
}

json parse_document(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        parse_error(std::string("invalid JSON: ") + e.what());
    }
}

} // namespace hessen::io
