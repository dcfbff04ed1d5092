#include <doctest.h>

#include "hessen/closed_form.hpp"
#include "support/test_support.hpp"

#include <set>

using namespace hessen;
using namespace hessen::testing;

namespace {

using Factors = std::vector<std::pair<std::size_t, std::size_t>>;

SymbolicTerm term(int sign, Factors factors) {
    return {sign, std::move(factors)};
}

} // namespace

TEST_CASE("chi examples") {
    std::mt19937_64 rng(2);
    SUBCASE("n = 3, m = 2") {
        const auto h = random_q_matrix(3, rng);
        CHECK(chi(h, 2) == -(h.entry(1, 1) * h.entry(2, 3) * h.entry(3, 2)));
    }
    SUBCASE("n = 4, m = 7 is the diagonal") {
        const auto h = random_q_matrix(4, rng);
        CHECK(chi(h, 7) == h.entry(1, 1) * h.entry(2, 2) * h.entry(3, 3) * h.entry(4, 4));
    }
    SUBCASE("superdiagonal zero annihilates m = 0") {
        CHECK(chi(HessenbergMatrix<Q>::identity(2), 0) == Q(0L));
    }
    SUBCASE("index out of range") {
        const auto h = random_q_matrix(3, rng);
        CHECK_THROWS_AS((void)chi(h, 4), Error);
        CHECK_THROWS_AS((void)chi(h, SepIndex{2, 0}), Error);
    }
}

TEST_CASE("det_closed_form small orders") {
    std::mt19937_64 rng(17);
    const auto h = random_q_matrix(3, rng);
    auto e = [&](std::size_t i, std::size_t j) { return h.entry(i, j); };
    const Q expected = e(1, 2) * e(2, 3) * e(3, 1) - e(1, 2) * e(2, 1) * e(3, 3) - e(1, 1) * e(2, 3) * e(3, 2)
                     + e(1, 1) * e(2, 2) * e(3, 3);
    CHECK(det_closed_form(h) == expected);

    for (std::size_t n = 1; n <= 20; ++n) {
        CHECK(det_closed_form(HessenbergMatrix<C>::identity(n)) == C(1.0));
    }
    for (std::size_t n = 1; n <= 12; ++n) {
        CHECK(det_closed_form(HessenbergMatrix<Q>::identity(n)) == Q(1L));
    }
}

TEST_CASE("closed form cap") {
    CHECK_THROWS_AS((void)det_closed_form(HessenbergMatrix<C>::identity(29)), Error);
    try {
        (void)det_closed_form(HessenbergMatrix<C>::identity(5), ClosedFormOptions{4});
        FAIL("expected cap error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::OrderTooLargeForClosedForm);
    }
}

TEST_CASE("exact closed form equals recurrence and Leibniz") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(draw_int(rng, 0, 9));
        const auto h = random_q_matrix(n, rng);
        const Q closed = det_closed_form(h);
        REQUIRE(closed == det_recurrence(h));
        REQUIRE(closed == det_leibniz(h));
    }
}

TEST_CASE("float closed form agrees with the recurrence to 1e-9 relative") {
    std::mt19937_64 rng(1234);
    for (std::size_t n = 1; n <= 16; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            const auto h = random_c_matrix(n, rng);
            const C rec = det_recurrence(h);
            CHECK(std::abs(det_closed_form(h) - rec) <= 1e-9 * (1.0 + std::abs(rec)));
        }
    }
}

TEST_CASE("partitioned sums") {
    std::mt19937_64 rng(55);
    SUBCASE("exact: identical for every partitioning") {
        for (std::size_t n : {1U, 2U, 5U, 9U}) {
            const auto h = random_q_matrix(n, rng);
            const Q reference = det_closed_form(h);
            for (unsigned parts : {2U, 3U, 7U, 64U}) {
                CHECK(det_closed_form(h, {kDefaultClosedFormCap, parts, false}) == reference);
                CHECK(det_closed_form(h, {kDefaultClosedFormCap, parts, true}) == reference);
            }
        }
    }
    SUBCASE("float: within 1e-12 relative") {
        for (std::size_t n : {4U, 12U, 20U}) {
            const auto h = random_c_matrix(n, rng);
            const C reference = det_closed_form(h);
            for (unsigned parts : {2U, 5U, 16U}) {
                const C split = det_closed_form(h, {kDefaultClosedFormCap, parts, true});
                CHECK(std::abs(split - reference) <= 1e-12 * (1.0 + std::abs(reference)));
            }
        }
    }
}

TEST_CASE("expand_symbolic golden expansions") {
    CHECK(expand_symbolic(1) == std::vector{term(1, {{1, 1}})});
    CHECK(expand_symbolic(2) == std::vector{term(-1, {{1, 2}, {2, 1}}), term(1, {{1, 1}, {2, 2}})});
    CHECK(expand_symbolic(3) == std::vector{
                                    term(1, {{1, 2}, {2, 3}, {3, 1}}),
                                    term(-1, {{1, 2}, {2, 1}, {3, 3}}),
                                    term(-1, {{1, 1}, {2, 3}, {3, 2}}),
                                    term(1, {{1, 1}, {2, 2}, {3, 3}}),
                                });
    CHECK(expand_symbolic(4) == std::vector{
                                    term(-1, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}),
                                    term(1, {{1, 2}, {2, 3}, {3, 1}, {4, 4}}),
                                    term(1, {{1, 2}, {2, 1}, {3, 4}, {4, 3}}),
                                    term(-1, {{1, 2}, {2, 1}, {3, 3}, {4, 4}}),
                                    term(1, {{1, 1}, {2, 3}, {3, 4}, {4, 2}}),
                                    term(-1, {{1, 1}, {2, 3}, {3, 2}, {4, 4}}),
                                    term(-1, {{1, 1}, {2, 2}, {3, 4}, {4, 3}}),
                                    term(1, {{1, 1}, {2, 2}, {3, 3}, {4, 4}}),
                                });
    CHECK(render(expand_symbolic(2)[0]) == "-h(1,2)h(2,1)");
    CHECK(render(expand_symbolic(2)[1]) == "+h(1,1)h(2,2)");
}

TEST_CASE("expansion structure for n <= 16") {
    for (std::size_t n = 1; n <= 16; ++n) {
        const auto terms = expand_symbolic(n);
        REQUIRE(terms.size() == sep_count(n));
        for (const auto& t : terms) {
            std::vector<bool> used(n + 1, false);
            for (std::size_t r = 0; r < n; ++r) {
                const auto [row, col] = t.factors[r];
                REQUIRE(row == r + 1);
                REQUIRE(col <= row + 1);
                REQUIRE_FALSE(used[col]);
                used[col] = true;
            }
        }
    }
    CHECK_THROWS_AS((void)expand_symbolic(17), Error);
}

TEST_CASE("symbolic terms evaluate to chi") {
    std::mt19937_64 rng(71);
    const auto h = random_q_matrix(6, rng);
    const auto terms = expand_symbolic(6);
    for (std::uint64_t m = 0; m < terms.size(); ++m) {
        Q value(static_cast<long>(terms[m].sign));
        for (const auto& [row, col] : terms[m].factors) value *= h.entry(row, col);
        CHECK(value == chi(h, m));
    }
}
