#include <doctest.h>

#include "hessen/io.hpp"
#include "support/test_support.hpp"

using namespace hessen;
using namespace hessen::testing;
using hessen::io::json;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::InvariantViolated;
}

} // namespace

TEST_CASE("exact scalar text") {
    using io::parse_scalar_text;
    CHECK(parse_scalar_text<Q>("3") == rational(3));
    CHECK(parse_scalar_text<Q>(" -2/5 ") == rational(-2, 5));
    CHECK(parse_scalar_text<Q>("0.25") == rational(1, 4));
    CHECK(parse_scalar_text<Q>("1.5e2") == rational(150));
    CHECK(parse_scalar_text<Q>("-12e-1") == rational(-6, 5));
    CHECK(parse_scalar_text<Q>("1/2+3/4i") == complex_rational(1, 2, 3, 4));
    CHECK(parse_scalar_text<Q>("-i") == complex_rational(0, 1, -1, 1));
    CHECK(parse_scalar_text<Q>("2i") == complex_rational(0, 1, 2, 1));
    CHECK(parse_scalar_text<Q>("1-i") == complex_rational(1, 1, -1, 1));
    CHECK(io::parse_scalar_list<Q>("1,-1/2,i") == std::vector<Q>{rational(1), rational(-1, 2), complex_rational(0, 1, 1, 1)});

    CHECK(code_of([] { (void)parse_scalar_text<Q>(""); }) == ErrorCode::ParseError);
    CHECK(code_of([] { (void)parse_scalar_text<Q>("1/0"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { (void)parse_scalar_text<Q>("abc"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { (void)parse_scalar_text<Q>("1..2"); }) == ErrorCode::ParseError);
}

TEST_CASE("float scalar text") {
    using io::parse_scalar_text;
    CHECK(parse_scalar_text<C>("2.5-1e-3i") == C(2.5, -1e-3));
    CHECK(parse_scalar_text<C>("1/4") == C(0.25));
    CHECK(parse_scalar_text<C>("-i") == C(0.0, -1.0));
    CHECK(code_of([] { (void)parse_scalar_text<C>("x"); }) == ErrorCode::ParseError);
}

TEST_CASE("scalar JSON") {
    CHECK(io::to_json(complex_rational(-3, 4, 1, 2)) == json::array({-3, 4, 1, 2}));
    CHECK(io::scalar_from_json<Q>(json::array({-3, 4, 1, 2})) == complex_rational(-3, 4, 1, 2));
    CHECK(io::scalar_from_json<Q>(json(7)) == rational(7));
    CHECK(io::scalar_from_json<Q>(json::array({2, 4, 0, 1})) == rational(1, 2));
    CHECK(io::scalar_from_json<C>(json::array({0.5, -1.0})) == C(0.5, -1.0));
    CHECK(io::scalar_from_json<C>(json::array({1, 2, 3, 4})) == C(0.5, 0.75));
    CHECK(io::scalar_from_json<C>(json(3)) == C(3.0));
    CHECK(code_of([] { (void)io::scalar_from_json<Q>(json::array({0.5, 1.0})); }) == ErrorCode::ParseError);
    CHECK(code_of([] { (void)io::scalar_from_json<Q>(json::array({1, 0, 0, 1})); }) == ErrorCode::ParseError);

    SUBCASE("parts beyond 64 bits travel as strings") {
        Q big = rational(1);
        for (int k = 0; k < 30; ++k) big *= rational(1000, 7);
        const json encoded = io::to_json(big);
        CHECK(encoded[0].is_string());
        CHECK(io::scalar_from_json<Q>(encoded) == big);
    }
}

TEST_CASE("matrix round trip") {
    std::mt19937_64 rng(3);
    const auto h = random_q_matrix(5, rng);
    CHECK(io::matrix_from_json<Q>(io::to_json(h)) == h);
    const auto hc = random_c_matrix(4, rng);
    CHECK(io::matrix_from_json<C>(io::to_json(hc)) == hc);

    const auto doc = io::parse_document(R"({"order": 2, "rows": [[1, 2], [3]]})");
    CHECK(code_of([&] { (void)io::matrix_from_json<Q>(doc); }) == ErrorCode::WrongEntryCount);
    CHECK(code_of([] { (void)io::matrix_from_json<Q>(io::parse_document(R"({"rows": []})")); }) == ErrorCode::ParseError);
    CHECK(code_of([] { (void)io::parse_document("{not json"); }) == ErrorCode::ParseError);
}

TEST_CASE("spec round trip") {
    std::mt19937_64 rng(4);
    const auto spec = random_q_spec(2, 5, rng);
    CHECK(io::spec_from_json<Q>(io::to_json(spec)) == spec);
    CHECK(code_of([] {
              (void)io::spec_from_json<Q>(io::parse_document(R"({"N":1,"horizon":3,"coeffs":[[1,1]],"forcing":[0]})"));
          })
          == ErrorCode::ParseError);
    CHECK(code_of([] {
              (void)io::spec_from_json<Q>(io::parse_document(R"({"N":1,"coeffs":[[1,0]],"forcing":[0]})"));
          })
          == ErrorCode::IrregularOrder);
}
