#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "floercalc/dedekind.hpp"
#include "testutil.hpp"

using floercalc::Rational;
using floercalc::dedekind_rademacher;
using floercalc::dedekind_sum;

TEST_CASE("dedekind sum anchors") {
    CHECK(dedekind_sum(1, 1) == Rational(0));
    CHECK(dedekind_sum(1, 3) == Rational(1, 18));
    CHECK(dedekind_sum(2, 3) == Rational(-1, 18));
    CHECK(dedekind_sum(1, 5) == Rational(1, 5));
    CHECK(dedekind_sum(6, 7) == Rational(-5, 14));
    CHECK_THROWS_AS(dedekind_sum(2, 4), floercalc::coprimality_error);
}

TEST_CASE("dedekind sum matches the sawtooth-definition oracle") {
    for (long long p = 1; p <= 40; ++p)
        for (long long q = 1; q < p; ++q) {
            if (std::gcd(q, p) != 1) continue;
            CHECK(dedekind_sum(q, p) == testutil::naive_dedekind_sum(q, p));
        }
}

TEST_CASE("dedekind sum periodicity and oddness in q") {
    for (long long p : {5, 7, 12, 13}) {
        for (long long q = 1; q < p; ++q) {
            if (std::gcd(q, p) != 1) continue;
            CHECK(dedekind_sum(q + p, p) == dedekind_sum(q, p));
            CHECK(dedekind_sum(-q, p) == -dedekind_sum(q, p));
        }
    }
}

TEST_CASE("dedekind reciprocity on a sample") {
    for (long long p = 1; p <= 60; ++p)
        for (long long q = 1; q <= 60; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const Rational lhs = dedekind_sum(p, q) + dedekind_sum(q, p);
            const Rational rhs =
                Rational(-1, 4) + (Rational(p, q) + Rational(q, p) +
                                   Rational(1, p * q)) / Rational(12);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("dedekind-rademacher reduces to the classical sum at integer shifts") {
    for (long long p : {2, 3, 5, 7, 9}) {
        for (long long q = 1; q < p; ++q) {
            if (std::gcd(q, p) != 1) continue;
            CHECK(dedekind_rademacher(q, p, Rational(0), Rational(0)) ==
                  dedekind_sum(q, p));
            CHECK(dedekind_rademacher(q, p, Rational(2), Rational(-1)) ==
                  dedekind_sum(q, p));
        }
    }
}

TEST_CASE("dedekind-rademacher frozen half-shift values") {
    const Rational half(1, 2);
    CHECK(dedekind_rademacher(1, 2, half, half) == Rational(-1, 8));
    CHECK(dedekind_rademacher(1, 3, half, half) == Rational(-1, 9));
    // values entering mu-bar of Sigma(2,3,5)
    CHECK(dedekind_rademacher(15, 2, half, half) == Rational(1, 8));
    CHECK(dedekind_rademacher(10, 3, half, half) == Rational(2, 9));
    CHECK(dedekind_rademacher(6, 5, half, half) == Rational(2, 5));
    CHECK_THROWS_AS(dedekind_rademacher(3, 6, half, half),
                    floercalc::coprimality_error);
}

TEST_CASE("half-shift sums depend on q mod 2p, not q mod p") {
    const Rational half(1, 2);
    CHECK(dedekind_rademacher(6, 5, half, half) !=
          dedekind_rademacher(1, 5, half, half));
    CHECK(dedekind_rademacher(6, 5, half, half) ==
          dedekind_rademacher(16, 5, half, half));
}

TEST_CASE("fourier cotangent identity (rg1)") {
    CHECK(floercalc::cot_sum_identity_check(1, 1, 1e-12));
    CHECK(floercalc::cot_sum_identity_check(1, 3, 1e-12));
    CHECK(floercalc::cot_sum_identity_check(2, 5, 1e-12));
    for (long long p = 1; p <= 49; p += 2)
        for (long long h = 1; h <= p; ++h) {
            if (std::gcd(h, p) != 1) continue;
            CHECK(floercalc::cot_sum_identity_check(h, p));
        }
    CHECK_THROWS_AS(floercalc::cot_sum_identity_check(1, 4),
                    floercalc::method_domain_error);
}

TEST_CASE("fourier cosecant identity (rg2)") {
    CHECK(floercalc::csc_sum_identity_check(1, 1, 1e-12));
    CHECK(floercalc::csc_sum_identity_check(1, 3, 1e-12));
    CHECK(floercalc::csc_sum_identity_check(3, 7, 1e-12));
    for (long long p = 1; p <= 49; p += 2)
        for (long long h = 1; h <= p; ++h) {
            if (std::gcd(h, p) != 1) continue;
            CHECK(floercalc::csc_sum_identity_check(h, p));
        }
    CHECK_THROWS_AS(floercalc::csc_sum_identity_check(1, 6),
                    floercalc::method_domain_error);
}

TEST_CASE("cotangent representation of the classical sum") {
    // s(b,a) = (1/4a) sum_l cot(pi l/a) cot(pi b l/a)
    for (long long a : {3, 5, 7, 11, 25}) {
        for (long long b = 1; b < a; ++b) {
            if (std::gcd(b, a) != 1) continue;
            const double lhs = dedekind_sum(b, a).to_double();
            const double rhs =
                floercalc::cot_cot_sum(a, b) / (4.0 * static_cast<double>(a));
            CHECK(std::abs(lhs - rhs) < 1e-9);
        }
    }
}
