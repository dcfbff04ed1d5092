#include <doctest.h>

#include "hessen/error.hpp"
#include "hessen/scalar.hpp"
#include "support/test_support.hpp"

using namespace hessen;
using namespace hessen::testing;

TEST_CASE("complex rational arithmetic is exact") {
    const Q a = complex_rational(1, 3, 2, 5);
    const Q b = complex_rational(-7, 2, 1, 9);

    // (1/3 + 2/5 i)(-7/2 + 1/9 i) = (-7/6 - 2/45) + (1/27 - 7/5) i
    CHECK(a * b == complex_rational(-109, 90, -184, 135));
    CHECK((a * b) / b == a);
    CHECK((a + b) - b == a);
    CHECK(a / a == Q(1L));
    CHECK(-(-a) == a);
}

TEST_CASE("division by a purely real value and by zero") {
    CHECK(complex_rational(3, 4, -1, 2) / rational(3) == complex_rational(1, 4, -1, 6));
    CHECK_THROWS_AS(rational(1) / Q(0L), Error);
}

TEST_CASE("identities and string form") {
    CHECK(Q(0L).is_zero());
    CHECK(Q(1L) * complex_rational(5, 7, 1, 1) == complex_rational(5, 7, 1, 1));
    CHECK(rational(3, 4).str() == "3/4");
    CHECK(complex_rational(1, 2, 5, 3).str() == "1/2+5/3i");
    CHECK(complex_rational(0, 1, -2, 1).str() == "-2i");
}

TEST_CASE("field axioms hold exactly on random samples") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Q x = random_q(rng);
        const Q y = random_q(rng);
        const Q z = random_q(rng, true);
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * y == y * x);
        CHECK((x / z) * z == x);
    }
}

TEST_CASE("compensated accumulation recovers cancelled low-order terms") {
    Accumulator<C> acc;
    acc.add(C(1e16, 0.0));
    for (int k = 0; k < 1000; ++k) acc.add(C(1.0, -1.0));
    acc.add(C(-1e16, 0.0));
    CHECK(acc.total().real() == doctest::Approx(1000.0));
    CHECK(acc.total().imag() == doctest::Approx(-1000.0));
}
