#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "floercalc/rational.hpp"
#include "floercalc/sampling.hpp"

using floercalc::Rational;
using floercalc::sawtooth;

TEST_CASE("construction reduces to lowest terms with positive denominator") {
    Rational r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 0), floercalc::range_error);
}

TEST_CASE("exact arithmetic and ordering") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 3) / Rational(2, 9) == Rational(3, 2));
    CHECK(Rational(1, 3) < Rational(34, 100));
    CHECK(Rational(1, 3) > Rational(33, 100));
    CHECK_THROWS_AS(Rational(1) / Rational(0), floercalc::range_error);
}

TEST_CASE("floor and ceil at negative and integer values") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(4, 2).floor() == 2);
    CHECK(Rational(4, 2).ceil() == 2);
    CHECK(Rational(5).is_integer());
    CHECK(!Rational(5, 3).is_integer());
}

TEST_CASE("string form is always num/den") {
    CHECK(Rational(1, 18).str() == "1/18");
    CHECK(Rational(-1, 18).str() == "-1/18");
    CHECK(Rational(3).str() == "3/1");
}

TEST_CASE("sawtooth on the definitional cases") {
    CHECK(sawtooth(Rational(0)) == Rational(0));
    CHECK(sawtooth(Rational(1, 2)) == Rational(0));
    CHECK(sawtooth(Rational(1, 4)) == Rational(-1, 4));
    CHECK(sawtooth(Rational(5, 4)) == Rational(-1, 4));
    CHECK(sawtooth(Rational(-3)) == Rational(0));
}

TEST_CASE("sawtooth is odd and 1-periodic") {
    floercalc::DeterministicRng rng(7);
    for (int i = 0; i < 500; ++i) {
        const Rational r(rng.uniform(-300, 300), rng.uniform(1, 40));
        CHECK(sawtooth(-r) == -sawtooth(r));
        CHECK(sawtooth(r + Rational(1)) == sawtooth(r));
        const Rational v = sawtooth(r);
        CHECK(v >= Rational(-1, 2));
        CHECK(v <= Rational(1, 2));
    }
}

TEST_CASE("sawtooth averaging identity sum_h (((h+x)/p)) = ((x))") {
    const Rational xs[] = {Rational(0), Rational(1, 2), Rational(1, 3)};
    for (long long p = 1; p <= 50; ++p)
        for (const Rational& x : xs) {
            Rational acc(0);
            for (long long h = 0; h < p; ++h)
                acc += sawtooth((Rational(h) + x) / Rational(p));
            CHECK(acc == sawtooth(x));
        }
}
