#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "floercalc/errors.hpp"
#include "floercalc/rational.hpp"
#include "floercalc/seifert.hpp"

namespace floercalc {

// Spectrum partition counts for n = 3: tau_k is the number of spectrum points
// in the open window (k-1, k). tau1 + tau2 + tau3 = (p-1)(q-1)(r-1) and
// tau1 = tau3 by the (k,l,m) -> (p-k,q-l,r-m) symmetry.
struct TauTriple {
    long long tau1 = 0;
    long long tau2 = 0;
    long long tau3 = 0;
};

// A weighted counting problem: integer tuples x with 0 <= x_i (< bounds[i]
// where bounded) and sum_i weights[i] * x_i </<= threshold.
struct CountSpec {
    std::vector<std::optional<long long>> bounds;
    std::vector<Rational> weights;
    Rational threshold;
    bool strict = true;
};

namespace detail {

// #{ x integer, x >= 0, x < t }
inline mpz_class count_nonneg_below(const Rational& t) {
    if (t.sign() <= 0) return 0;
    return t.is_integer() ? t.num() : t.ceil();
}

// #{ x integer, x >= 0, x <= t }
inline mpz_class count_nonneg_at_most(const Rational& t) {
    if (t.sign() < 0) return 0;
    return t.floor() + 1;
}

inline mpz_class count_rec(const CountSpec& spec, size_t i, const Rational& remaining) {
    const size_t n = spec.weights.size();
    if (i + 1 == n) {
        // closed form for the innermost coordinate: x * w </<= remaining
        const Rational limit = remaining / spec.weights[i];
        mpz_class cnt = spec.strict ? count_nonneg_below(limit)
                                    : count_nonneg_at_most(limit);
        if (spec.bounds[i]) {
            const mpz_class b = to_mpz(*spec.bounds[i]);
            if (cnt > b) cnt = b;
        }
        return cnt;
    }
    mpz_class total = 0;
    const Rational& w = spec.weights[i];
    Rational used(0);
    for (long long x = 0;; ++x) {
        if (spec.bounds[i] && x >= *spec.bounds[i]) break;
        const Rational rest = remaining - used;
        // prune: even x_i = ... = x_n = 0 fails once the budget is spent
        if (spec.strict ? (rest.sign() <= 0) : (rest.sign() < 0)) break;
        total += count_rec(spec, i + 1, rest);
        used += w;
    }
    return total;
}

} // namespace detail

// Exact number of solutions of a CountSpec. Coordinates are enumerated in the
// given order with exact-rational running sums and early pruning; the last
// coordinate is counted in closed form.
inline mpz_class count_points(const CountSpec& spec) {
    if (spec.weights.empty() || spec.weights.size() != spec.bounds.size())
        throw arity_error("count_points: inconsistent spec");
    for (const auto& w : spec.weights)
        if (w.sign() <= 0) throw range_error("count_points: weights must be positive");
    if (spec.strict ? (spec.threshold.sign() <= 0) : (spec.threshold.sign() < 0))
        return 0;
    return detail::count_rec(spec, 0, spec.threshold);
}

namespace detail {

inline Rational half_link_threshold(const SeifertData& d) {
    Rational s(d.n() - 2);
    for (long long ai : d.a_list) s -= Rational(1, ai);
    return s / Rational(2);
}

} // namespace detail

// |A_e|: tuples with 0 <= x_i < a_i and e + sum x_i/a_i < (n-2-sum 1/a_i)/2.
// Zero whenever e > floor((n-3)/2).
inline long long count_A(long long e, const SeifertData& d) {
    CountSpec spec;
    for (long long ai : d.a_list) {
        spec.bounds.push_back(ai);
        spec.weights.emplace_back(1, ai);
    }
    spec.threshold = detail::half_link_threshold(d) - Rational(e);
    spec.strict = true;
    const mpz_class c = count_points(spec);
    if (!c.fits_slong_p()) throw overflow_error("count_A: count exceeds 64 bits");
    return c.get_si();
}

// |B_e|: same inequality with no upper bounds on the coordinates.
inline long long count_B(long long e, const SeifertData& d) {
    CountSpec spec;
    for (long long ai : d.a_list) {
        spec.bounds.push_back(std::nullopt);
        spec.weights.emplace_back(1, ai);
    }
    spec.threshold = detail::half_link_threshold(d) - Rational(e);
    spec.strict = true;
    const mpz_class c = count_points(spec);
    if (!c.fits_slong_p()) throw overflow_error("count_B: count exceeds 64 bits");
    return c.get_si();
}

inline void require_spectrum_triple(long long p, long long q, long long r) {
    if (p < 2 || q < 2 || r < 2)
        throw range_error("spectrum: multiplicities must be >= 2");
    if (std::gcd(p, q) != 1 || std::gcd(p, r) != 1 || std::gcd(q, r) != 1)
        throw coprimality_error("spectrum: arguments are not pairwise coprime");
}

// #{ (k,l,m) : 0 < k < p, 0 < l < q, 0 < m < r, k/p + l/q + m/r </<= t }
inline long long spectrum_count_below(long long p, long long q, long long r,
                                      const Rational& t, bool strict = true) {
    require_spectrum_triple(p, q, r);
    long long total = 0;
    for (long long k = 1; k < p; ++k) {
        const Rational base_k = t - Rational(k, p);
        if (strict ? base_k.sign() <= 0 : base_k.sign() < 0) break;
        for (long long l = 1; l < q; ++l) {
            const Rational rest = base_k - Rational(l, q);
            if (strict ? rest.sign() <= 0 : rest.sign() < 0) break;
            // m/r </<= rest, 1 <= m <= r-1
            const Rational limit = rest * Rational(r);
            mpz_class cnt = strict ? detail::count_nonneg_below(limit)
                                   : detail::count_nonneg_at_most(limit);
            cnt -= 1; // drop m = 0
            if (cnt < 0) cnt = 0;
            const mpz_class cap(static_cast<long>(r - 1));
            if (cnt > cap) cnt = cap;
            total += cnt.get_si();
        }
    }
    return total;
}

// Exact partition of the spectrum into the unit windows (0,1), (1,2), (2,3),
// asserting on the way that no point lies on an integer boundary.
inline TauTriple tau_counts(long long p, long long q, long long r) {
    require_spectrum_triple(p, q, r);
    for (long long k = 1; k < p; ++k)
        for (long long l = 1; l < q; ++l) {
            const Rational base = Rational(k, p) + Rational(l, q);
            for (int z = 1; z <= 2; ++z) {
                const Rational m_at_boundary = (Rational(z) - base) * Rational(r);
                if (m_at_boundary.is_integer() && m_at_boundary.sign() > 0 &&
                    m_at_boundary.num() < static_cast<long>(r))
                    throw invariant_violation("tau_counts: integer spectrum point");
            }
        }
    const long long below1 = spectrum_count_below(p, q, r, Rational(1));
    const long long below2 = spectrum_count_below(p, q, r, Rational(2));
    const long long all = (p - 1) * (q - 1) * (r - 1);
    TauTriple t;
    t.tau1 = below1;
    t.tau2 = below2 - below1;
    t.tau3 = all - below2;
    if (t.tau1 != t.tau3)
        throw invariant_violation("tau_counts: spectrum symmetry tau1 = tau3 failed");
    return t;
}

// Milnor fiber signature tau1 - tau2 + tau3 (Brieskorn). Divisible by 8.
inline long long milnor_signature(long long p, long long q, long long r) {
    const TauTriple t = tau_counts(p, q, r);
    const long long sig = t.tau1 - t.tau2 + t.tau3;
    if (sig % 8 != 0)
        throw invariant_violation("milnor_signature: not divisible by 8");
    return sig;
}

// All (p-1)(q-1)(r-1) spectrum values k/p + l/q + m/r, sorted ascending.
inline std::vector<Rational> spectrum_points(long long p, long long q, long long r) {
    require_spectrum_triple(p, q, r);
    std::vector<Rational> pts;
    pts.reserve(static_cast<size_t>((p - 1) * (q - 1) * (r - 1)));
    for (long long k = 1; k < p; ++k)
        for (long long l = 1; l < q; ++l)
            for (long long m = 1; m < r; ++m)
                pts.push_back(Rational(k, p) + Rational(l, q) + Rational(m, r));
    std::sort(pts.begin(), pts.end());
    return pts;
}

inline mpz_class binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

// sum_{l=1}^{j} C(j-1, l-1) C(n, l) = C(n+j-1, n-1), j = p-k >= 1: the number
// of ways to distribute j units into the n coordinates.
inline bool composition_identity_holds(long long n, long long j) {
    if (j < 1) throw range_error("composition_identity_holds: need j >= 1");
    mpz_class lhs = 0;
    for (long long l = 1; l <= j; ++l) lhs += binomial(j - 1, l - 1) * binomial(n, l);
    return lhs == binomial(n + j - 1, n - 1);
}

// sum_{p=0}^{k} (-1)^p C(n+k-p+1, n+1) C(n, p) = k+1, the generating-function
// form of the alternating identity behind A = B.
inline bool alternating_identity_holds(long long n, long long k) {
    mpz_class lhs = 0;
    for (long long p = 0; p <= k; ++p) {
        const mpz_class term = binomial(n + k - p + 1, n + 1) * binomial(n, p);
        if (p % 2 == 0) lhs += term; else lhs -= term;
    }
    return lhs == static_cast<long>(k + 1);
}

// |B_{s-p}| = sum_{k=0}^{p} C(n+p-k-1, n-1) |A_{s-k}| for every p in 0..s.
inline bool b_reduction_identity_holds(const SeifertData& d) {
    const long long s = (d.n() - 3) / 2;
    for (long long p = 0; p <= s; ++p) {
        mpz_class rhs = 0;
        for (long long k = 0; k <= p; ++k)
            rhs += binomial(d.n() + p - k - 1, d.n() - 1) *
                   to_mpz(count_A(s - k, d));
        if (rhs != static_cast<long>(count_B(s - p, d))) return false;
    }
    return true;
}

} // namespace floercalc
