#pragma once

// JSON encodings.
//
//   scalar (exact): [re_num, re_den, im_num, im_den]; integers, or decimal
//                   strings when a part does not fit in 64 bits
//   scalar (float): [re, im]
//   bare JSON integers are accepted as real scalars in both modes
//   matrix: {"order": n, "rows": [[h11, h12], [h21, h22, h23], ...]}
//   spec:   {"N": N, "horizon": H, "coeffs": [[a00..a0N], ...], "forcing": [g0, ...]}

#include "hessen/hessenberg.hpp"
#include "hessen/ldevc.hpp"
#include "hessen/scalar.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace hessen::io {

using json = nlohmann::json;

json to_json(const ComplexRational& value);
json to_json(const ComplexDouble& value);

template <FieldScalar S>
S scalar_from_json(const json& value);

template <>
ComplexRational scalar_from_json<ComplexRational>(const json& value);
template <>
ComplexDouble scalar_from_json<ComplexDouble>(const json& value);

/// Parses "3", "-2/5", "0.25", "1/2+3/4i", "-i", "2.5-1e-3i".
/// Decimals are converted exactly in the exact backend.
template <FieldScalar S>
S parse_scalar_text(std::string_view text);

template <>
ComplexRational parse_scalar_text<ComplexRational>(std::string_view text);
template <>
ComplexDouble parse_scalar_text<ComplexDouble>(std::string_view text);

/// Comma-separated list of scalar tokens; an empty string yields no values.
template <FieldScalar S>
std::vector<S> parse_scalar_list(std::string_view text) {
    std::vector<S> out;
    std::size_t start = 0;
    while (start <= text.size() && !text.empty()) {
        const auto comma = text.find(',', start);
        const auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        out.push_back(parse_scalar_text<S>(token));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

template <FieldScalar S>
json to_json(const HessenbergMatrix<S>& matrix) {
    json rows = json::array();
    for (std::size_t i = 1; i <= matrix.order(); ++i) {
        json row = json::array();
        for (const auto& h : matrix.row(i)) row.push_back(to_json(h));
        rows.push_back(std::move(row));
    }
    return json{{"order", matrix.order()}, {"rows", std::move(rows)}};
}

void require(bool condition, const std::string& message);

template <FieldScalar S>
std::vector<S> scalar_array_from_json(const json& value, const std::string& what) {
    require(value.is_array(), what + " must be an array");
    std::vector<S> out;
    out.reserve(value.size());
    for (const auto& item : value) out.push_back(scalar_from_json<S>(item));
    return out;
}

std::size_t size_from_json(const json& object, const char* key);

template <FieldScalar S>
HessenbergMatrix<S> matrix_from_json(const json& doc) {
    require(doc.is_object(), "matrix document must be an object");
    const std::size_t order = size_from_json(doc, "order");
    require(doc.contains("rows") && doc["rows"].is_array(), "matrix needs a \"rows\" array");
    const auto& rows_json = doc["rows"];
    require(rows_json.size() == order, "matrix has " + std::to_string(rows_json.size()) + " rows, order is "
                                           + std::to_string(order));
    std::vector<std::vector<S>> rows;
    rows.reserve(order);
    for (std::size_t i = 0; i < rows_json.size(); ++i) {
        rows.push_back(scalar_array_from_json<S>(rows_json[i], "row " + std::to_string(i + 1)));
    }
    return HessenbergMatrix<S>::from_rows(rows);
}

template <FieldScalar S>
json to_json(const LdevcSpec<S>& spec) {
    json coeffs = json::array();
    for (std::size_t n = 0; n <= spec.horizon(); ++n) {
        json row = json::array();
        for (const auto& a : spec.row(n)) row.push_back(to_json(a));
        coeffs.push_back(std::move(row));
    }
    json forcing = json::array();
    for (const auto& g : spec.forcing()) forcing.push_back(to_json(g));
    return json{{"N", spec.index_n()}, {"horizon", spec.horizon()}, {"coeffs", std::move(coeffs)},
                {"forcing", std::move(forcing)}};
}

template <FieldScalar S>
LdevcSpec<S> spec_from_json(const json& doc) {
    require(doc.is_object(), "spec document must be an object");
    const std::size_t index_n = size_from_json(doc, "N");
    require(doc.contains("coeffs") && doc["coeffs"].is_array(), "spec needs a \"coeffs\" array");
    std::vector<std::vector<S>> coeffs;
    for (std::size_t n = 0; n < doc["coeffs"].size(); ++n) {
        coeffs.push_back(scalar_array_from_json<S>(doc["coeffs"][n], "coeffs row " + std::to_string(n)));
    }
    require(doc.contains("forcing"), "spec needs a \"forcing\" array");
    auto forcing = scalar_array_from_json<S>(doc["forcing"], "forcing");
    if (doc.contains("horizon")) {
        const std::size_t horizon = size_from_json(doc, "horizon");
        require(horizon + 1 == coeffs.size(), "horizon " + std::to_string(horizon) + " does not match "
                                                  + std::to_string(coeffs.size()) + " coefficient rows");
    }
    return LdevcSpec<S>::create(index_n, std::move(coeffs), std::move(forcing));
}

/// Parses JSON text, mapping syntax errors to ParseError.
json parse_document(std::string_view text);

} // namespace hessen::io
