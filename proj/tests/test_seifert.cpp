#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "floercalc/sampling.hpp"
#include "floercalc/seifert.hpp"

using floercalc::normalize;
using floercalc::SeifertData;
using floercalc::splice_split;

TEST_CASE("normalize derives b_i, e0 for the anchors") {
    const SeifertData d = normalize({2, 3, 5});
    CHECK(d.a == 30);
    CHECK(d.b_list == std::vector<long long>{1, 2, 4});
    CHECK(d.e0 == 2); // 15*1 + 10*2 + 6*4 = 59 = -1 + 2*30

    const SeifertData e = normalize({2, 3, 7});
    CHECK(e.b_list == std::vector<long long>{1, 1, 1});
    CHECK(e.e0 == 1); // 21 + 14 + 6 = 41 = -1 + 42

    const SeifertData f = normalize({7, 3, 2});
    CHECK(f.a_list == std::vector<long long>{2, 3, 7}); // sorted canonical form
}

TEST_CASE("normalize rejects invalid data") {
    CHECK_THROWS_AS(normalize({2, 3}), floercalc::arity_error);
    CHECK_THROWS_AS(normalize({2, 3, 4}), floercalc::coprimality_error);
    CHECK_THROWS_AS(normalize({1, 3, 5}), floercalc::range_error);
    CHECK_THROWS_AS(normalize({2, 3, -5}), floercalc::range_error);
}

TEST_CASE("defining congruence holds on enumerated and random tuples") {
    auto check = [](const std::vector<long long>& t) {
        const SeifertData d = normalize(t);
        mpz_class sum = 0;
        for (int i = 0; i < d.n(); ++i) {
            const mpz_class ai(static_cast<long>(d.a_list[i]));
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), d.q_list[i].get_mpz_t(), ai.get_mpz_t());
            CHECK(g == 1); // gcd(q_i, a_i) = 1
            CHECK(mpz_class((static_cast<long>(d.b_list[i]) * d.q_list[i] + 1) % ai) == 0);
            sum += static_cast<long>(d.b_list[i]) * d.q_list[i];
        }
        CHECK(sum == -1 + static_cast<long>(d.e0) * d.a);
    };
    for (const auto& t : floercalc::coprime_tuples_up_to(3, 3000)) check(t);
    floercalc::DeterministicRng rng(11);
    for (int i = 0; i < 40; ++i) check(floercalc::random_coprime_tuple(rng, 4, 500000));
}

TEST_CASE("odd product: (1 + 2 m b_i)/a_i is an odd integer, a <= 1e5") {
    int tested = 0;
    for (const auto& t : floercalc::coprime_tuples_up_to(3, 100000)) {
        if (t[0] % 2 == 0 || t[1] % 2 == 0 || t[2] % 2 == 0) continue;
        const SeifertData d = normalize(t); // normalize() itself asserts the property
        REQUIRE(d.m.has_value());
        for (int i = 0; i < d.n(); ++i) {
            mpz_class v = (1 + 2 * (*d.m) * static_cast<long>(d.b_list[i]));
            v /= static_cast<long>(d.a_list[i]);
            CHECK(mpz_odd_p(v.get_mpz_t()));
        }
        ++tested;
    }
    CHECK(tested > 500);
}

TEST_CASE("m for Sigma(3,5,7)") {
    const SeifertData d = normalize({3, 5, 7});
    REQUIRE(d.m.has_value());
    CHECK(*d.m == -17);
    CHECK(d.b_list == std::vector<long long>{1, 4, 6});
    CHECK(d.e0 == 2);
}

TEST_CASE("even product has no m") {
    CHECK(!normalize({2, 3, 5}).m.has_value());
}

TEST_CASE("splice_split products") {
    const SeifertData d = normalize({2, 3, 5, 7});
    const auto [left, right] = splice_split(d, 2);
    CHECK(left.a_list == std::vector<long long>{2, 3, 35});
    CHECK(right.a_list == std::vector<long long>{5, 6, 7});

    const SeifertData e = normalize({2, 3, 5, 7, 11});
    const auto [l2, r2] = splice_split(e, 2);
    CHECK(l2.a_list == std::vector<long long>{2, 3, 385});
    CHECK(r2.a_list == std::vector<long long>{5, 6, 7, 11});

    CHECK_THROWS_AS(splice_split(normalize({2, 3, 5}), 2), floercalc::arity_error);
    CHECK_THROWS_AS(splice_split(d, 1), floercalc::arity_error);
    CHECK_THROWS_AS(splice_split(d, 3), floercalc::arity_error);
}

TEST_CASE("splice_split reports products beyond the machine word") {
    // three primes near 2^31: their product exceeds 2^63
    const SeifertData d =
        normalize({2, 3, 2147483647, 2147483629, 2147483587});
    CHECK_THROWS_AS(splice_split(d, 2), floercalc::overflow_error);
}
