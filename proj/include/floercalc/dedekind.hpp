#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>

#include "floercalc/errors.hpp"
#include "floercalc/rational.hpp"

namespace floercalc {

inline constexpr double kDefaultTrigTolerance = 1e-9;

namespace detail {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

inline long long mod_ll(long long v, long long m) {
    long long r = v % m;
    return r < 0 ? r + m : r;
}

inline void require_coprime(long long q, long long p, const char* where) {
    if (p < 1) throw range_error(std::string(where) + ": modulus must be positive");
    if (std::gcd(q < 0 ? -q : q, p) != 1)
        throw coprimality_error(std::string(where) + ": arguments are not coprime");
}

} // namespace detail

// Classical Dedekind sum s(q,p) = sum_{h mod p} ((h/p)) ((qh/p)), by direct
// summation. For 0 < h < p the sawtooth is (2h-p)/(2p), so the whole sum is
// an integer divided by 4p^2; we accumulate that integer.
inline Rational dedekind_sum(long long q, long long p) {
    detail::require_coprime(q, p, "dedekind_sum");
    const long long q0 = detail::mod_ll(q, p);
    mpz_class acc = 0;
    long long r = 0;
    for (long long h = 1; h < p; ++h) {
        r += q0;
        if (r >= p) r -= p;
        if (r == 0) continue;
        acc += static_cast<long>((2 * h - p) * (2 * r - p));
    }
    return Rational(acc, to_mpz(p) * to_mpz(p) * 4);
}

// Dedekind-Rademacher sum s(q,p;x,y) = sum_{h mod p} (((h+y)/p)) ((q(h+y)/p + x)).
// Reduces to the classical sum for integer x, y. Note: for non-integer y the
// value depends on q mod 2p, not merely q mod p.
inline Rational dedekind_rademacher(long long q, long long p,
                                    const Rational& x, const Rational& y) {
    detail::require_coprime(q, p, "dedekind_rademacher");
    const Rational pr(p);
    const Rational qr(q);
    Rational acc(0);
    for (long long h = 0; h < p; ++h) {
        const Rational t = (Rational(h) + y) / pr;
        const Rational lhs = sawtooth(t);
        if (lhs.is_zero()) continue;
        acc += lhs * sawtooth(qr * t + x);
    }
    return acc;
}

// sum_{l=1}^{a-1} cot(pi l / a) cot(pi b l / a); terms with b*l = 0 mod a
// cannot occur for gcd(b,a) = 1, 0 < l < a.
inline double cot_cot_sum(long long a, long long b) {
    double s = 0.0;
    for (long long l = 1; l < a; ++l) {
        const double u = detail::kPi * static_cast<double>(l) / static_cast<double>(a);
        const double v = detail::kPi * static_cast<double>(detail::mod_ll(b * l, a)) /
                         static_cast<double>(a);
        s += (std::cos(u) / std::sin(u)) * (std::cos(v) / std::sin(v));
    }
    return s;
}

// sum_{l=1}^{a-1} (-1)^l csc(pi l / a) cot(pi b l / a).
inline double csc_cot_sum_alternating(long long a, long long b) {
    double s = 0.0;
    for (long long l = 1; l < a; ++l) {
        const double u = detail::kPi * static_cast<double>(l) / static_cast<double>(a);
        const double v = detail::kPi * static_cast<double>(detail::mod_ll(b * l, a)) /
                         static_cast<double>(a);
        const double term = (1.0 / std::sin(u)) * (std::cos(v) / std::sin(v));
        s += (l % 2 == 0) ? term : -term;
    }
    return s;
}

namespace detail {

// Evaluates (i/2p) * sum_{n=1}^{p-1} c_n zeta^{hn} with zeta = exp(2 pi i / p)
// and checks it against an exact sawtooth value. The imaginary part must
// vanish to tolerance.
template <typename CoeffFn>
bool fourier_sum_matches(long long h, long long p, double tolerance,
                         const Rational& exact, CoeffFn coeff) {
    std::complex<double> sum(0.0, 0.0);
    for (long long n = 1; n < p; ++n) {
        const double ang = 2.0 * kPi * static_cast<double>(mod_ll(h * n, p)) /
                           static_cast<double>(p);
        sum += coeff(n) * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    const std::complex<double> value =
        std::complex<double>(0.0, 1.0 / (2.0 * static_cast<double>(p))) * sum;
    if (std::abs(value.imag()) >= tolerance) return false;
    return std::abs(value.real() - exact.to_double()) < tolerance;
}

} // namespace detail

// ((h/p)) = (i/2p) sum_{n=1}^{p-1} cot(pi n/p) zeta^{hn}, p odd, gcd(h,p)=1.
inline bool cot_sum_identity_check(long long h, long long p,
                                   double tolerance = kDefaultTrigTolerance) {
    if (p % 2 == 0) throw method_domain_error("cot_sum_identity_check: p must be odd");
    detail::require_coprime(h, p, "cot_sum_identity_check");
    const Rational exact = sawtooth(Rational(h, p));
    return detail::fourier_sum_matches(h, p, tolerance, exact, [&](long long n) {
        const double u = detail::kPi * static_cast<double>(n) / static_cast<double>(p);
        return std::cos(u) / std::sin(u);
    });
}

// ((h/p + 1/2)) = (i/2p) sum_{n=1}^{p-1} (-1)^n csc(pi n/p) zeta^{hn}.
inline bool csc_sum_identity_check(long long h, long long p,
                                   double tolerance = kDefaultTrigTolerance) {
    if (p % 2 == 0) throw method_domain_error("csc_sum_identity_check: p must be odd");
    detail::require_coprime(h, p, "csc_sum_identity_check");
    const Rational exact = sawtooth(Rational(h, p) + Rational(1, 2));
    return detail::fourier_sum_matches(h, p, tolerance, exact, [&](long long n) {
        const double u = detail::kPi * static_cast<double>(n) / static_cast<double>(p);
        const double c = 1.0 / std::sin(u);
        return (n % 2 == 0) ? c : -c;
    });
}

} // namespace floercalc
