#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "floercalc/errors.hpp"
#include "floercalc/rational.hpp"

namespace floercalc {

// Validated Seifert data for Sigma(a_1,...,a_n) together with the derived
// quantities every downstream formula consumes:
//   a      = a_1 ... a_n
//   q_i    = a / a_i
//   b_i    = canonical residue in [1, a_i) with b_i q_i = -1 (mod a_i)
//   e0     = (sum b_i q_i + 1) / a, so that sum b_i q_i = -1 + e0 a
//   m      = -(a/2)(n - 2 - sum 1/a_i), defined only when a is odd
struct SeifertData {
    std::vector<long long> a_list;
    mpz_class a;
    std::vector<mpz_class> q_list;
    std::vector<long long> b_list;
    long long e0 = 0;
    std::optional<mpz_class> m;

    int n() const { return static_cast<int>(a_list.size()); }
    bool a_is_odd() const { return mpz_odd_p(a.get_mpz_t()) != 0; }

    std::string str() const {
        std::string s = "Sigma(";
        for (size_t i = 0; i < a_list.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(a_list[i]);
        }
        return s + ")";
    }
};

// Validates and canonicalizes (a_1,...,a_n): n >= 3, every a_i >= 2, pairwise
// coprime; sorts ascending and derives q_i, b_i, e0 and (odd a) m. The §8
// parity condition that (1 + 2 m b_i)/a_i is an odd integer is checked, not
// assumed.
inline SeifertData normalize(std::vector<long long> a_list) {
    if (a_list.size() < 3)
        throw arity_error("seifert: need at least three multiplicities, got " +
                          std::to_string(a_list.size()));
    for (long long v : a_list)
        if (v < 2)
            throw range_error("seifert: multiplicities must be >= 2, got " +
                              std::to_string(v));
    std::sort(a_list.begin(), a_list.end());
    for (size_t i = 0; i < a_list.size(); ++i)
        for (size_t j = i + 1; j < a_list.size(); ++j)
            if (std::gcd(a_list[i], a_list[j]) != 1)
                throw coprimality_error(
                    "seifert: gcd(" + std::to_string(a_list[i]) + "," +
                    std::to_string(a_list[j]) + ") != 1");

    SeifertData d;
    d.a_list = std::move(a_list);
    const int n = d.n();

    d.a = 1;
    for (long long v : d.a_list) d.a *= to_mpz(v);

    mpz_class sum_bq = 0;
    for (int i = 0; i < n; ++i) {
        const mpz_class ai = to_mpz(d.a_list[i]);
        mpz_class qi = d.a / ai;
        mpz_class qi_mod = qi % ai;
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), qi_mod.get_mpz_t(), ai.get_mpz_t()) == 0)
            throw invariant_violation("seifert: q_i not invertible mod a_i");
        // b_i = -inv(q_i) mod a_i, least non-negative representative
        mpz_class bi = (ai - inv) % ai;
        sum_bq += bi * qi;
        d.q_list.push_back(std::move(qi));
        d.b_list.push_back(bi.get_si());
    }

    mpz_class e0_num = sum_bq + 1;
    if (!mpz_divisible_p(e0_num.get_mpz_t(), d.a.get_mpz_t()))
        throw invariant_violation("seifert: sum b_i q_i != -1 mod a");
    mpz_class e0 = e0_num / d.a;
    d.e0 = e0.get_si();

    if (d.a_is_odd()) {
        // m = -(a(n-2) - sum q_i) / 2
        mpz_class t = d.a * (n - 2);
        for (const auto& q : d.q_list) t -= q;
        if (!mpz_divisible_ui_p(t.get_mpz_t(), 2))
            throw invariant_violation("seifert: m is not an integer");
        d.m = -t / 2;
        for (int i = 0; i < n; ++i) {
            mpz_class num = 1 + 2 * (*d.m) * static_cast<long>(d.b_list[i]);
            const mpz_class ai = to_mpz(d.a_list[i]);
            if (!mpz_divisible_p(num.get_mpz_t(), ai.get_mpz_t()))
                throw invariant_violation("seifert: (1 + 2 m b_i)/a_i not an integer");
            mpz_class quot = num / ai;
            if (mpz_even_p(quot.get_mpz_t()))
                throw invariant_violation("seifert: (1 + 2 m b_i)/a_i is even");
        }
    }
    return d;
}

// Splice decomposition at position j (1-based, 2 <= j <= n-2):
//   Sigma(a_1,...,a_n) -> ( Sigma(a_1,...,a_j, p), Sigma(q, a_{j+1},...,a_n) )
// with q = a_1...a_j and p = a_{j+1}...a_n. Pairwise coprimality is inherited.
inline std::pair<SeifertData, SeifertData> splice_split(const SeifertData& data,
                                                        int j) {
    const int n = data.n();
    if (j < 2 || j > n - 2)
        throw arity_error("splice_split: need 2 <= j <= n-2, got j = " +
                          std::to_string(j) + " with n = " + std::to_string(n));

    mpz_class q = 1, p = 1;
    for (int i = 0; i < j; ++i) q *= to_mpz(data.a_list[i]);
    for (int i = j; i < n; ++i) p *= to_mpz(data.a_list[i]);
    if (!q.fits_slong_p() || !p.fits_slong_p())
        throw overflow_error("splice_split: product does not fit a machine word");

    std::vector<long long> left(data.a_list.begin(), data.a_list.begin() + j);
    left.push_back(p.get_si());
    std::vector<long long> right;
    right.push_back(q.get_si());
    right.insert(right.end(), data.a_list.begin() + j, data.a_list.end());
    return {normalize(std::move(left)), normalize(std::move(right))};
}

} // namespace floercalc
