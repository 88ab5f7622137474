#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "floercalc/errors.hpp"
#include "floercalc/rational.hpp"

namespace floercalc {

namespace detail {

inline void require_torus_knot(long long p, long long q) {
    if (p < 1 || q < 1)
        throw range_error("torus knot: parameters must be positive");
    if (std::gcd(p, q) != 1)
        throw coprimality_error("torus knot: gcd(p,q) != 1");
}

} // namespace detail

inline long long torus_knot_genus(long long p, long long q) {
    detail::require_torus_knot(p, q);
    return (p - 1) * (q - 1) / 2;
}

// Gaps of the numerical semigroup <p, q>: non-negative integers not of the
// form ap + bq. Empty for p = 1 or q = 1; otherwise there are exactly
// (p-1)(q-1)/2 of them, the largest being pq - p - q.
inline std::vector<long long> semigroup_gaps(long long p, long long q) {
    detail::require_torus_knot(p, q);
    if (p == 1 || q == 1) return {};
    const long long frob = p * q - p - q;
    std::vector<char> member(static_cast<size_t>(frob) + 1, 0);
    member[0] = 1;
    for (long long g : {p, q})
        for (long long i = g; i <= frob; ++i)
            if (member[static_cast<size_t>(i - g)]) member[static_cast<size_t>(i)] = 1;
    std::vector<long long> gaps;
    for (long long i = 1; i <= frob; ++i)
        if (!member[static_cast<size_t>(i)]) gaps.push_back(i);
    if (static_cast<long long>(gaps.size()) != torus_knot_genus(p, q))
        throw invariant_violation("semigroup_gaps: gap count != genus");
    return gaps;
}

// d(T_{p,q}) = -2 #{ gaps >= genus }.
inline long long d_semigroup(long long p, long long q) {
    const long long g = torus_knot_genus(p, q);
    const auto gaps = semigroup_gaps(p, q);
    long long cnt = 0;
    for (long long s : gaps)
        if (s >= g) ++cnt;
    return -2 * cnt;
}

// d(T_{p,q}) = -2 #{ (0, (pq+p+q-1)/(2pq)] intersect Spec_f }. The right
// endpoint is included; for (2,3) the single spectrum point 5/6 lands exactly
// on it.
inline long long d_spectrum(long long p, long long q) {
    detail::require_torus_knot(p, q);
    if (p < 2 || q < 2)
        throw range_error("d_spectrum: needs p, q >= 2");
    const Rational endpoint(p * q + p + q - 1, 2 * p * q);
    long long cnt = 0;
    for (long long i = 1; i < p; ++i) {
        const Rational base(i, p);
        if (base > endpoint) continue;
        for (long long j = 1; j < q; ++j) {
            if (base + Rational(j, q) <= endpoint) ++cnt;
            else break;
        }
    }
    return -2 * cnt;
}

// h^0 of the canonical theta characteristic: lattice points (a,b) >= 0 with
// (a+1)/p + (b+1)/q <= (pq+p+q-1)/(2pq), counted exactly (non-strict).
inline long long theta_h0_count(long long p, long long q) {
    detail::require_torus_knot(p, q);
    if (p < 2 || q < 2)
        throw range_error("theta_h0_count: needs p, q >= 2");
    const Rational endpoint(p * q + p + q - 1, 2 * p * q);
    long long cnt = 0;
    for (long long a = 0;; ++a) {
        const Rational rest = endpoint - Rational(a + 1, p) - Rational(1, q);
        if (rest.sign() < 0) break;
        // b <= q * rest
        cnt += (rest * Rational(q)).floor().get_si() + 1;
    }
    return cnt;
}

inline long long d_theta(long long p, long long q) { return -2 * theta_h0_count(p, q); }

// Symmetric Alexander coefficients a_0, a_1, ..., a_g of T_{p,q}: exact
// integer division of (t^{pq}-1)(t-1) by (t^p-1)(t^q-1), recentered so that
// Delta(t) = a_0 + sum_j a_j (t^j + t^{-j}) with Delta(1) = 1.
inline std::vector<long long> alexander_torus(long long p, long long q) {
    detail::require_torus_knot(p, q);
    if (p == 1 || q == 1) return {1};

    auto divide_by_cyclo = [](std::vector<long long> poly, long long k) {
        // exact division by (t^k - 1)
        std::vector<long long> out(poly.size() - static_cast<size_t>(k), 0);
        for (long long i = static_cast<long long>(poly.size()) - 1; i >= k; --i) {
            const long long c = poly[static_cast<size_t>(i)];
            out[static_cast<size_t>(i - k)] = c;
            poly[static_cast<size_t>(i)] = 0;
            poly[static_cast<size_t>(i - k)] += c;
        }
        for (long long c : poly)
            if (c != 0) throw invariant_violation("alexander_torus: inexact division");
        return out;
    };

    // (t^{pq} - 1)(t - 1) = t^{pq+1} - t^{pq} - t + 1
    std::vector<long long> num(static_cast<size_t>(p * q + 2), 0);
    num[static_cast<size_t>(p * q + 1)] = 1;
    num[static_cast<size_t>(p * q)] = -1;
    num[1] = -1;
    num[0] = 1;
    auto quot = divide_by_cyclo(std::move(num), p);
    quot = divide_by_cyclo(std::move(quot), q);

    const long long g = torus_knot_genus(p, q);
    if (static_cast<long long>(quot.size()) != 2 * g + 1)
        throw invariant_violation("alexander_torus: wrong degree");
    long long at_one = 0;
    for (long long c : quot) at_one += c;
    if (at_one != 1)
        throw invariant_violation("alexander_torus: Delta(1) != 1");
    for (long long j = 0; j <= g; ++j)
        if (quot[static_cast<size_t>(g + j)] != quot[static_cast<size_t>(g - j)])
            throw invariant_violation("alexander_torus: coefficients not symmetric");
    return {quot.begin() + static_cast<long long>(g), quot.end()};
}

// d(T_{p,q}) = -2 sum_{j>=1} j a_j.
inline long long d_alexander(long long p, long long q) {
    const auto a = alexander_torus(p, q);
    long long s = 0;
    for (size_t j = 1; j < a.size(); ++j) s += static_cast<long long>(j) * a[j];
    return -2 * s;
}

// (1/2) Delta''(1) = sum_{j>=1} j^2 a_j.
inline long long half_second_derivative_at_one(long long p, long long q) {
    const auto a = alexander_torus(p, q);
    long long s = 0;
    for (size_t j = 1; j < a.size(); ++j)
        s += static_cast<long long>(j) * static_cast<long long>(j) * a[j];
    return s;
}

// -d/2 = h^0 = (1/2) Delta''(1) (mod 2): the Arf-invariant relation.
inline bool arf_mod2_check(long long p, long long q) {
    detail::require_torus_knot(p, q);
    if (p < 2 || q < 2)
        throw range_error("arf_mod2_check: needs p, q >= 2");
    const long long minus_half_d = -d_semigroup(p, q) / 2;
    const long long h0 = theta_h0_count(p, q);
    const long long dd = half_second_derivative_at_one(p, q);
    return ((minus_half_d - h0) % 2 == 0) && ((minus_half_d - dd) % 2 == 0);
}

// d(T_{p,q}) by all applicable routes, cross-checked.
struct TorusKnotReport {
    long long p = 0, q = 0;
    long long genus = 0;
    std::vector<long long> gaps;
    long long d = 0;
    std::map<std::string, long long> d_methods;
    std::vector<long long> alexander;
    long long h0_count = 0;
    bool arf_consistent = false;
};

inline TorusKnotReport assemble_torus_report(long long p, long long q) {
    detail::require_torus_knot(p, q);
    if (p > q) std::swap(p, q);
    TorusKnotReport r;
    r.p = p;
    r.q = q;
    r.genus = torus_knot_genus(p, q);
    r.gaps = semigroup_gaps(p, q);
    r.alexander = alexander_torus(p, q);
    r.d_methods["semigroup"] = d_semigroup(p, q);
    r.d_methods["alexander"] = d_alexander(p, q);
    if (p >= 2) {
        r.d_methods["spectrum"] = d_spectrum(p, q);
        r.d_methods["h0"] = d_theta(p, q);
        r.h0_count = theta_h0_count(p, q);
        r.arf_consistent = arf_mod2_check(p, q);
    } else {
        r.arf_consistent = true;
    }
    r.d = r.d_methods.at("semigroup");
    for (const auto& [name, value] : r.d_methods)
        if (value != r.d)
            throw invariant_violation("torus knot: route '" + name +
                                      "' disagrees for T(" + std::to_string(p) + "," +
                                      std::to_string(q) + ")");
    if (r.d > 0 || r.d % 2 != 0)
        throw invariant_violation("torus knot: d must be even and non-positive");
    if (p >= 2 && !r.gaps.empty() && r.gaps.back() != p * q - p - q)
        throw invariant_violation("torus knot: largest gap != Frobenius number");
    return r;
}

} // namespace floercalc
