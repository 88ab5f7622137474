#pragma once

// Brute-force oracles used to pin down expected values independently of the
// library's optimized paths.

#include <vector>

#include "floercalc/lattice.hpp"
#include "floercalc/rational.hpp"
#include "floercalc/seifert.hpp"

namespace testutil {

using floercalc::Rational;
using floercalc::SeifertData;

inline Rational link_threshold(const SeifertData& d, long long e) {
    Rational s(d.n() - 2);
    for (long long ai : d.a_list) s -= Rational(1, ai);
    return s / Rational(2) - Rational(e);
}

// |A_e| by plain nested enumeration over 0 <= x_i < a_i.
inline long long naive_count_A(long long e, const SeifertData& d) {
    const Rational t = link_threshold(d, e);
    const int n = d.n();
    std::vector<long long> x(n, 0);
    long long count = 0;
    for (;;) {
        Rational s(0);
        for (int i = 0; i < n; ++i) s += Rational(x[i], d.a_list[i]);
        if (s < t) ++count;
        int i = n - 1;
        while (i >= 0 && x[i] + 1 >= d.a_list[i]) x[i--] = 0;
        if (i < 0) break;
        ++x[i];
    }
    return count;
}

// |B_e| by enumeration with the safe per-coordinate bound ceil(a_i * t) + 1.
inline long long naive_count_B(long long e, const SeifertData& d) {
    const Rational t = link_threshold(d, e);
    if (t.sign() <= 0) return 0;
    const int n = d.n();
    std::vector<long long> cap(n);
    for (int i = 0; i < n; ++i)
        cap[i] = (t * Rational(d.a_list[i])).ceil().get_si() + 1;
    std::vector<long long> x(n, 0);
    long long count = 0;
    for (;;) {
        Rational s(0);
        for (int i = 0; i < n; ++i) s += Rational(x[i], d.a_list[i]);
        if (s < t) ++count;
        int i = n - 1;
        while (i >= 0 && x[i] + 1 >= cap[i]) x[i--] = 0;
        if (i < 0) break;
        ++x[i];
    }
    return count;
}

// Dedekind sum by the sawtooth definition on exact rationals.
inline Rational naive_dedekind_sum(long long q, long long p) {
    Rational acc(0);
    for (long long h = 1; h < p; ++h)
        acc += floercalc::sawtooth(Rational(h, p)) *
               floercalc::sawtooth(Rational(q * h, p));
    return acc;
}

// Tau windows from the full sorted spectrum.
inline floercalc::TauTriple naive_tau(long long p, long long q, long long r) {
    floercalc::TauTriple t;
    for (const Rational& s : floercalc::spectrum_points(p, q, r)) {
        if (s < Rational(1)) ++t.tau1;
        else if (s < Rational(2)) ++t.tau2;
        else ++t.tau3;
    }
    return t;
}

} // namespace testutil
