#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace floercalc {

// Deterministic generator (splitmix64) so that seeded corpora are identical
// across platforms and standard-library implementations.
class DeterministicRng {
public:
    explicit DeterministicRng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [lo, hi] by rejection on the masked low bits
    long long uniform(long long lo, long long hi) {
        const uint64_t span = static_cast<uint64_t>(hi - lo + 1);
        uint64_t mask = span - 1;
        mask |= mask >> 1; mask |= mask >> 2; mask |= mask >> 4;
        mask |= mask >> 8; mask |= mask >> 16; mask |= mask >> 32;
        for (;;) {
            const uint64_t v = next() & mask;
            if (v < span) return lo + static_cast<long long>(v);
        }
    }

private:
    uint64_t state_;
};

inline bool pairwise_coprime(const std::vector<long long>& v) {
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            if (std::gcd(v[i], v[j]) != 1) return false;
    return true;
}

// One pairwise-coprime tuple of the given arity with product <= max_product,
// entries >= 2, drawn by rejection.
inline std::vector<long long> random_coprime_tuple(DeterministicRng& rng, int arity,
                                                   long long max_product) {
    for (;;) {
        std::vector<long long> v;
        long long prod = 1;
        bool ok = true;
        for (int i = 0; i < arity && ok; ++i) {
            const long long x = rng.uniform(2, 50);
            for (long long u : v)
                if (std::gcd(u, x) != 1) { ok = false; break; }
            if (!ok) break;
            v.push_back(x);
            prod *= x;
            if (prod > max_product) ok = false;
        }
        if (ok) return v;
    }
}

namespace detail {

inline void coprime_tuples_rec(int arity, long long max_product, long long min_value,
                               long long partial, std::vector<long long>& cur,
                               std::vector<std::vector<long long>>& out) {
    if (static_cast<int>(cur.size()) == arity) {
        out.push_back(cur);
        return;
    }
    const int remaining = arity - static_cast<int>(cur.size());
    for (long long v = min_value;; ++v) {
        // smallest possible completion: v, v+1, ..., v+remaining-1
        __int128 bound = partial;
        for (int i = 0; i < remaining; ++i) bound *= (v + i);
        if (bound > max_product) break;
        bool ok = true;
        for (long long u : cur)
            if (std::gcd(u, v) != 1) { ok = false; break; }
        if (!ok) continue;
        cur.push_back(v);
        coprime_tuples_rec(arity, max_product, v + 1, partial * v, cur, out);
        cur.pop_back();
    }
}

} // namespace detail

// All sorted pairwise-coprime tuples (entries >= 2, strictly increasing) of
// the given arity with product <= max_product, in lexicographic order.
inline std::vector<std::vector<long long>> coprime_tuples_up_to(int arity,
                                                                long long max_product) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> cur;
    detail::coprime_tuples_rec(arity, max_product, 2, 1, cur, out);
    return out;
}

} // namespace floercalc
