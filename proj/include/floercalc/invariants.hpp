#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "floercalc/dedekind.hpp"
#include "floercalc/errors.hpp"
#include "floercalc/lattice.hpp"
#include "floercalc/plumbing.hpp"
#include "floercalc/rational.hpp"
#include "floercalc/seifert.hpp"

namespace floercalc {

enum class MuBarMethod { kPlumbing, kDedekind, kTrig };

inline const char* to_string(MuBarMethod m) {
    switch (m) {
        case MuBarMethod::kPlumbing: return "plumbing";
        case MuBarMethod::kDedekind: return "dedekind";
        case MuBarMethod::kTrig: return "trig";
    }
    return "?";
}

// b3 + b7 = 2 sum_{e=0}^{s} (e+1) |A_e|, s = floor((n-3)/2).
inline long long b3_plus_b7(const SeifertData& d) {
    const long long s = (d.n() - 3) / 2;
    long long total = 0;
    for (long long e = 0; e <= s; ++e) total += (e + 1) * count_A(e, d);
    return 2 * total;
}

// The alternating route through the unbounded counts:
// b3 + b7 = 2 sum_{e=0}^{s} (-1)^e C(n-2, e) |B_e|.
inline long long b3_plus_b7_alternating(const SeifertData& d) {
    const long long s = (d.n() - 3) / 2;
    mpz_class total = 0;
    for (long long e = 0; e <= s; ++e) {
        const mpz_class term =
            binomial(d.n() - 2, e) * to_mpz(count_B(e, d));
        if (e % 2 == 0) total += term; else total -= term;
    }
    total *= 2;
    if (!total.fits_slong_p())
        throw overflow_error("b3_plus_b7_alternating: count overflow");
    return total.get_si();
}

// Exact mu-bar through Dedekind and Dedekind-Rademacher sums:
//   mu_bar = [a odd] 1/(8a) - 1/8 - (1/2) sum_i s(q_i, a_i)
//            - sum_i s(q_i, a_i; 1/2, 1/2).
// The constant term 1/(8a) belongs to the odd-product case only; with it the
// even-product value fails integrality, without it the odd-product value does.
inline long long mu_bar_dedekind(const SeifertData& d) {
    Rational val = d.a_is_odd() ? Rational(mpz_class(1), 8 * d.a) : Rational(0);
    val -= Rational(1, 8);
    const Rational half(1, 2);
    for (int i = 0; i < d.n(); ++i) {
        const long long ai = d.a_list[i];
        const mpz_class q_mod = d.q_list[i] % to_mpz(2 * ai);
        const long long q2 = q_mod.get_si(); // q_i mod 2 a_i; enough for both sums
        val -= half * dedekind_sum(q2, ai);
        val -= dedekind_rademacher(q2, ai, half, half);
    }
    if (!val.is_integer())
        throw invariant_violation("mu_bar_dedekind: result is not an integer for " +
                                  d.str() + " (got " + val.str() + ")");
    return val.num().get_si();
}

// Floating-point mu-bar through the cotangent/cosecant sums; odd products
// only. The value is asserted to sit within 1e-6 of an integer.
inline long long mu_bar_trig(const SeifertData& d) {
    if (!d.a_is_odd())
        throw method_domain_error("mu_bar_trig: requires odd a_1...a_n");
    double val = 1.0 / (8.0 * d.a.get_d()) - 0.125;
    for (int i = 0; i < d.n(); ++i) {
        const long long ai = d.a_list[i];
        const long long bi = d.b_list[i];
        val += cot_cot_sum(ai, bi) / (8.0 * static_cast<double>(ai));
        val += csc_cot_sum_alternating(ai, bi) / (4.0 * static_cast<double>(ai));
    }
    const double nearest = std::round(val);
    if (std::abs(val - nearest) >= 1e-6)
        throw invariant_violation("mu_bar_trig: value " + std::to_string(val) +
                                  " is not within 1e-6 of an integer");
    return static_cast<long long>(nearest);
}

inline long long mu_bar(const SeifertData& d, MuBarMethod method) {
    switch (method) {
        case MuBarMethod::kPlumbing: return mu_bar_plumbing(d);
        case MuBarMethod::kDedekind: return mu_bar_dedekind(d);
        case MuBarMethod::kTrig: return mu_bar_trig(d);
    }
    throw arity_error("mu_bar: unknown method");
}

// lambda = mu_bar - (b3 + b7). For n = 3 the Brieskorn-signature route
// lambda = sign M / 8 must agree and is asserted.
inline long long casson(const SeifertData& d) {
    const long long lam = mu_bar_dedekind(d) - b3_plus_b7(d);
    if (d.n() == 3) {
        const long long sig =
            milnor_signature(d.a_list[0], d.a_list[1], d.a_list[2]);
        if (lam != sig / 8)
            throw invariant_violation("casson: mu-bar route " + std::to_string(lam) +
                                      " disagrees with signature route " +
                                      std::to_string(sig / 8) + " for " + d.str());
    }
    return lam;
}

struct FloerBetti {
    long long b1 = 0, b3 = 0, b5 = 0, b7 = 0;

    friend bool operator==(const FloerBetti&, const FloerBetti&) = default;
    FloerBetti operator+(const FloerBetti& o) const {
        return {b1 + o.b1, b3 + o.b3, b5 + o.b5, b7 + o.b7};
    }
};

// b1 = b5 = (-mu_bar - lambda)/2, b3 = b7 = (mu_bar - lambda)/2.
inline FloerBetti floer_betti(const SeifertData& d) {
    const long long mu = mu_bar_dedekind(d);
    const long long lam = casson(d);
    const long long odd_pair = -mu - lam;
    const long long even_pair = mu - lam;
    if (odd_pair < 0 || even_pair < 0 || odd_pair % 2 != 0 || even_pair % 2 != 0)
        throw invariant_violation("floer_betti: inconsistent (lambda, mu_bar) for " +
                                  d.str());
    return {odd_pair / 2, even_pair / 2, odd_pair / 2, even_pair / 2};
}

// #M = b3 + b7 (irreducible Seiberg-Witten monopole count).
inline long long sw_monopole_count(const SeifertData& d) { return b3_plus_b7(d); }

// chi of the half-canonical sheaf on the compactified Milnor fiber; the floor
// and ceiling versions coincide and both equal b3 + b7.
inline long long chi_half_canonical(const SeifertData& d) { return b3_plus_b7(d); }

// lambda = -#M + mu_bar.
inline bool lambda_sw_consistency(const SeifertData& d) {
    return casson(d) == -sw_monopole_count(d) + mu_bar_dedekind(d);
}

// Componentwise additivity of the Floer Betti numbers under the splice
// decomposition at position j.
inline bool additivity_check(const SeifertData& d, int j) {
    const auto [left, right] = splice_split(d, j);
    return floer_betti(d) == floer_betti(left) + floer_betti(right);
}

// The assembled invariant octet for one Seifert fibered homology sphere, with
// every route computed and cross-checked.
struct InvariantReport {
    SeifertData data;
    long long casson = 0;
    long long mu_bar = 0;
    MuBarMethod mu_bar_method = MuBarMethod::kDedekind;
    std::map<std::string, long long> mu_bar_methods;
    FloerBetti betti;
    long long sw_count = 0;
    long long chi_half_canonical = 0;
    long long b37_lattice_A = 0;
    long long b37_alternating_B = 0;
    std::optional<TauTriple> tau;
    std::optional<long long> milnor_sig;
};

inline InvariantReport assemble_report(const SeifertData& d,
                                       MuBarMethod reported = MuBarMethod::kDedekind) {
    InvariantReport r;
    r.data = d;
    r.b37_lattice_A = b3_plus_b7(d);
    r.b37_alternating_B = b3_plus_b7_alternating(d);
    if (r.b37_lattice_A != r.b37_alternating_B)
        throw invariant_violation("report: A-route and B-route for b3+b7 disagree on " +
                                  d.str());

    const long long mu_ded = mu_bar_dedekind(d);
    const long long mu_plb = mu_bar_plumbing(d);
    r.mu_bar_methods["dedekind"] = mu_ded;
    r.mu_bar_methods["plumbing"] = mu_plb;
    if (mu_ded != mu_plb)
        throw invariant_violation("report: dedekind and plumbing mu-bar disagree on " +
                                  d.str());
    if (d.a_is_odd()) {
        const long long mu_trig = mu_bar_trig(d);
        r.mu_bar_methods["trig"] = mu_trig;
        if (mu_trig != mu_ded)
            throw invariant_violation("report: trig mu-bar disagrees on " + d.str());
    }
    if (reported == MuBarMethod::kTrig && !d.a_is_odd())
        throw method_domain_error("report: trig mu-bar needs an odd product");
    r.mu_bar_method = reported;
    r.mu_bar = r.mu_bar_methods.at(to_string(reported));

    r.casson = casson(d);
    r.betti = floer_betti(d);
    r.sw_count = sw_monopole_count(d);
    r.chi_half_canonical = chi_half_canonical(d);

    // octet consistency
    const auto& b = r.betti;
    if (-(b.b1 + b.b3 + b.b5 + b.b7) != 2 * r.casson ||
        -b.b1 + b.b3 - b.b5 + b.b7 != 2 * r.mu_bar ||
        b.b3 + b.b7 != r.mu_bar - r.casson || b.b1 + b.b5 != -r.mu_bar - r.casson ||
        r.sw_count != b.b3 + b.b7 || r.chi_half_canonical != b.b3 + b.b7 ||
        r.b37_lattice_A != b.b3 + b.b7)
        throw invariant_violation("report: octet relations failed on " + d.str());

    if (d.n() == 3) {
        const long long p = d.a_list[0], q = d.a_list[1], rr = d.a_list[2];
        r.tau = tau_counts(p, q, rr);
        r.milnor_sig = milnor_signature(p, q, rr);
        const long long btotal = b.b1 + b.b3 + b.b5 + b.b7;
        if (4 * btotal != -(r.tau->tau1) + r.tau->tau2 - r.tau->tau3)
            throw invariant_violation("report: tau route for b-total failed on " +
                                      d.str());
        Rational bound = Rational(1) + Rational(1, p) + Rational(1, q) + Rational(1, rr);
        bound = bound / Rational(2);
        const long long ineq_count = spectrum_count_below(p, q, rr, bound, true);
        if (b.b3 + b.b7 != 2 * ineq_count)
            throw invariant_violation("report: spectrum-inequality route failed on " +
                                      d.str());
    }
    return r;
}

} // namespace floercalc
