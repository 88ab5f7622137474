#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "floercalc/torus_knot.hpp"

using namespace floercalc;

TEST_CASE("semigroup gaps") {
    CHECK(semigroup_gaps(2, 3) == std::vector<long long>{1});
    CHECK(semigroup_gaps(2, 5) == std::vector<long long>{1, 3});
    CHECK(semigroup_gaps(3, 4) == std::vector<long long>{1, 2, 5});
    CHECK(semigroup_gaps(3, 5) == std::vector<long long>{1, 2, 4, 7});
    CHECK(semigroup_gaps(1, 9).empty());
    CHECK_THROWS_AS(semigroup_gaps(2, 4), coprimality_error);
}

TEST_CASE("d by the semigroup route") {
    CHECK(d_semigroup(2, 3) == -2);
    CHECK(d_semigroup(3, 4) == -2);
    CHECK(d_semigroup(2, 7) == -4);
    CHECK(d_semigroup(1, 9) == 0);
}

TEST_CASE("d by the spectrum route, closed right endpoint") {
    // (2,3): the single spectrum point 5/6 equals the endpoint (pq+p+q-1)/2pq
    CHECK(d_spectrum(2, 3) == -2);
    CHECK(d_spectrum(2, 5) == -2);
    CHECK(d_spectrum(2, 7) == -4);
}

TEST_CASE("d by the theta characteristic route") {
    CHECK(d_theta(2, 3) == -2); // (0,0) attains equality 1/2 + 1/3 = 5/6
    CHECK(d_theta(3, 4) == -2);
    CHECK(d_theta(3, 5) == d_semigroup(3, 5));
}

TEST_CASE("alexander polynomial of torus knots") {
    CHECK(alexander_torus(2, 3) == std::vector<long long>{-1, 1});
    CHECK(alexander_torus(2, 5) == std::vector<long long>{1, -1, 1});
    CHECK(alexander_torus(1, 8) == std::vector<long long>{1});
    CHECK(alexander_torus(3, 4) == std::vector<long long>{1, 0, -1, 1});
}

TEST_CASE("d by the alexander route") {
    CHECK(d_alexander(2, 3) == -2);
    CHECK(d_alexander(2, 5) == -2);
    CHECK(d_alexander(1, 5) == 0);
}

TEST_CASE("arf mod 2 relation") {
    CHECK(arf_mod2_check(2, 3));
    CHECK(arf_mod2_check(3, 4));
    CHECK(arf_mod2_check(4, 5));
}

TEST_CASE("four-route agreement and structural properties, p < q <= 60") {
    for (long long p = 2; p <= 60; ++p)
        for (long long q = p + 1; q <= 60; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const auto r = assemble_torus_report(p, q); // cross-checks internally
            CHECK(r.d < 0);
            CHECK(r.d % 2 == 0);
            CHECK(static_cast<long long>(r.gaps.size()) == r.genus);
            CHECK(r.gaps.back() == p * q - p - q);
            CHECK(r.arf_consistent);
            long long at_one = r.alexander[0];
            for (size_t j = 1; j < r.alexander.size(); ++j)
                at_one += 2 * r.alexander[j];
            CHECK(at_one == 1); // Delta(1) = 1
        }
}

TEST_CASE("two-strand family: d(T(2,2k+1)) = -2 ceil(k/2)") {
    // gaps of <2, 2k+1> are the odd numbers below 2k; counting those at or
    // above the genus k gives ceil(k/2)
    for (long long k = 1; k <= 12; ++k)
        CHECK(d_semigroup(2, 2 * k + 1) == -2 * ((k + 1) / 2));
}

TEST_CASE("unknot conventions") {
    const auto r = assemble_torus_report(1, 5);
    CHECK(r.d == 0);
    CHECK(r.genus == 0);
    CHECK(r.gaps.empty());
    CHECK(r.alexander == std::vector<long long>{1});
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(assemble_torus_report(2, 4), coprimality_error);
    CHECK_THROWS_AS(assemble_torus_report(0, 5), range_error);
    CHECK_THROWS_AS(d_spectrum(1, 5), range_error);
}
