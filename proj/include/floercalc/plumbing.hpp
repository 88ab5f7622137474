#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "floercalc/errors.hpp"
#include "floercalc/rational.hpp"
#include "floercalc/seifert.hpp"

namespace floercalc {

// Weighted tree describing a plumbed 4-manifold. For the graphs built here
// vertex 0 is the central vertex and the arms are appended one after another,
// but the generic operations accept any weighted graph.
struct PlumbingGraph {
    std::vector<long long> weights;
    std::vector<std::pair<int, int>> edges;

    int size() const { return static_cast<int>(weights.size()); }
};

// Negative-regular (Hirzebruch-Jung) expansion a/b = c1 - 1/(c2 - 1/(...)),
// all c_j >= 2, for 0 < b < a.
inline std::vector<long long> hirzebruch_jung(long long a, long long b) {
    if (!(0 < b && b < a))
        throw range_error("hirzebruch_jung: need 0 < b < a");
    std::vector<long long> cs;
    while (b > 0) {
        const long long c = (a + b - 1) / b; // ceil(a/b)
        cs.push_back(c);
        const long long next_b = c * b - a;
        a = b;
        b = next_b;
    }
    return cs;
}

// Star-shaped plumbing bounding Sigma(a_1,...,a_n): central weight -e0, arm i
// carrying the HJ expansion of a_i/b_i with the c_1 end attached to the
// center. With sum b_i q_i = -1 + e0 a the intersection form is unimodular;
// the orientation is calibrated so that mu_bar(Sigma(2,3,5)) = -1 (the graph
// for (2,3,5) is E8 with all weights -2).
inline PlumbingGraph build_plumbing(const SeifertData& d) {
    PlumbingGraph g;
    g.weights.push_back(-d.e0);
    for (int i = 0; i < d.n(); ++i) {
        const auto arm = hirzebruch_jung(d.a_list[i], d.b_list[i]);
        int prev = 0;
        for (long long c : arm) {
            g.weights.push_back(-c);
            const int v = g.size() - 1;
            g.edges.emplace_back(prev, v);
            prev = v;
        }
    }
    return g;
}

using IntMatrix = std::vector<std::vector<long long>>;

// Intersection matrix: weights on the diagonal, 1 for each edge.
inline IntMatrix intersection_matrix(const PlumbingGraph& g) {
    const int n = g.size();
    IntMatrix m(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = g.weights[i];
    for (const auto& [u, v] : g.edges) {
        m[u][v] += 1;
        m[v][u] += 1;
    }
    return m;
}

struct FormDiagonalization {
    long long n_plus = 0;
    long long n_minus = 0;
    long long n_zero = 0;
    mpz_class det;

    long long signature() const { return n_plus - n_minus; }
};

// Exact congruence diagonalization of a symmetric matrix over the rationals.
// 1x1 pivots where the diagonal allows, hyperbolic 2x2 blocks otherwise; the
// transforms are unit-triangular so the determinant is the product of the
// block determinants.
inline FormDiagonalization diagonalize_symmetric_form(const IntMatrix& m0) {
    const int n = static_cast<int>(m0.size());
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(m0[i].size()) != n)
            throw arity_error("diagonalize_symmetric_form: matrix not square");
        for (int j = 0; j < n; ++j) {
            if (m0[i][j] != m0[j][i])
                throw arity_error("diagonalize_symmetric_form: matrix not symmetric");
            m[i][j] = Rational(m0[i][j]);
        }
    }

    FormDiagonalization out;
    Rational det(1);
    std::vector<int> act;
    for (int i = 0; i < n; ++i) act.push_back(i);

    while (!act.empty()) {
        int piv = -1;
        for (size_t t = 0; t < act.size(); ++t)
            if (!m[act[t]][act[t]].is_zero()) { piv = static_cast<int>(t); break; }

        if (piv >= 0) {
            const int k = act[piv];
            const Rational d = m[k][k];
            if (d.sign() > 0) ++out.n_plus; else ++out.n_minus;
            det *= d;
            act.erase(act.begin() + piv);
            // pivot row stays intact for the whole pass; k is inactive after it
            for (int i : act) {
                if (m[i][k].is_zero()) continue;
                const Rational f = m[i][k] / d;
                for (int j : act) m[i][j] -= f * m[k][j];
            }
            continue;
        }

        // all active diagonal entries are zero: find an off-diagonal pivot
        int ka = -1, kb = -1;
        for (size_t s = 0; s < act.size() && ka < 0; ++s)
            for (size_t t = s + 1; t < act.size(); ++t)
                if (!m[act[s]][act[t]].is_zero()) {
                    ka = static_cast<int>(s);
                    kb = static_cast<int>(t);
                    break;
                }
        if (ka < 0) {
            out.n_zero += static_cast<long long>(act.size());
            det = Rational(0);
            break;
        }
        const int u = act[ka], v = act[kb];
        const Rational c = m[u][v];
        ++out.n_plus;
        ++out.n_minus;
        det *= -(c * c);
        act.erase(act.begin() + kb);
        act.erase(act.begin() + ka);
        std::vector<Rational> col_u, col_v;
        for (int i : act) {
            col_u.push_back(m[i][u] / c);
            col_v.push_back(m[i][v] / c);
        }
        for (size_t s = 0; s < act.size(); ++s) {
            const int i = act[s];
            if (col_u[s].is_zero() && col_v[s].is_zero()) continue;
            // subtract the block component: [[0,c],[c,0]]^{-1} = [[0,1/c],[1/c,0]]
            for (int j : act) m[i][j] -= col_u[s] * m[v][j] + col_v[s] * m[u][j];
        }
    }

    if (!det.is_integer())
        throw invariant_violation("diagonalize_symmetric_form: non-integer determinant");
    out.det = det.num();
    return out;
}

inline long long signature(const IntMatrix& m) {
    return diagonalize_symmetric_form(m).signature();
}

namespace detail {

struct TreeTopology {
    std::vector<int> parent;   // -1 at root
    std::vector<int> order;    // BFS order from root 0
};

inline TreeTopology tree_topology(const PlumbingGraph& g) {
    const int n = g.size();
    if (static_cast<int>(g.edges.size()) != n - 1)
        throw arity_error("plumbing: graph is not a tree");
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    TreeTopology t;
    t.parent.assign(n, -2);
    t.parent[0] = -1;
    t.order.push_back(0);
    for (size_t i = 0; i < t.order.size(); ++i) {
        const int v = t.order[i];
        for (int u : adj[v])
            if (t.parent[u] == -2) {
                t.parent[u] = v;
                t.order.push_back(u);
            }
    }
    if (static_cast<int>(t.order.size()) != n)
        throw arity_error("plumbing: graph is not connected");
    return t;
}

// Leaf-first congruence diagonalization specialized to trees: eliminating a
// non-root vertex only touches its parent's diagonal. Returns nullopt when a
// zero pivot appears (the caller falls back to the dense routine).
inline std::optional<FormDiagonalization> tree_diagonalize(const PlumbingGraph& g) {
    const auto t = tree_topology(g);
    const int n = g.size();
    std::vector<Rational> diag(n);
    for (int i = 0; i < n; ++i) diag[i] = Rational(g.weights[i]);

    FormDiagonalization out;
    Rational det(1);
    for (int i = n - 1; i >= 1; --i) {
        const int v = t.order[i];
        const Rational d = diag[v];
        if (d.is_zero()) return std::nullopt;
        if (d.sign() > 0) ++out.n_plus; else ++out.n_minus;
        det *= d;
        diag[t.parent[v]] -= Rational(1) / d;
    }
    const Rational droot = diag[0];
    if (droot.is_zero()) {
        ++out.n_zero;
        det = Rational(0);
    } else {
        if (droot.sign() > 0) ++out.n_plus; else ++out.n_minus;
        det *= droot;
    }
    if (!det.is_integer())
        throw invariant_violation("tree_diagonalize: non-integer determinant");
    out.det = det.num();
    return out;
}

} // namespace detail

inline FormDiagonalization analyze_form(const PlumbingGraph& g) {
    if (static_cast<int>(g.edges.size()) == g.size() - 1)
        if (auto r = detail::tree_diagonalize(g)) return *r;
    return diagonalize_symmetric_form(intersection_matrix(g));
}

// Characteristic 0/1 vector: w . x = x . x (mod 2) for every basis vector x.
struct WuClass {
    std::vector<int> coordinates;
};

// Dense GF(2) Gaussian elimination for Q w = diag(Q) (mod 2). Unique
// solvability is equivalent to det(Q) being odd.
inline WuClass wu_class(const IntMatrix& m) {
    const int n = static_cast<int>(m.size());
    const int words = (n + 64) / 64; // one extra column for the RHS
    std::vector<std::vector<uint64_t>> rows(n, std::vector<uint64_t>(words, 0));
    auto set_bit = [&](int r, int c) { rows[r][c >> 6] ^= (uint64_t(1) << (c & 63)); };
    auto get_bit = [&](int r, int c) -> int {
        return static_cast<int>((rows[r][c >> 6] >> (c & 63)) & 1);
    };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (m[i][j] & 1) set_bit(i, j);
        if (m[i][i] & 1) set_bit(i, n);
    }

    std::vector<int> pivot_row(n, -1);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int sel = -1;
        for (int r = rank; r < n; ++r)
            if (get_bit(r, col)) { sel = r; break; }
        if (sel < 0) continue;
        std::swap(rows[sel], rows[rank]);
        for (int r = 0; r < n; ++r)
            if (r != rank && get_bit(r, col))
                for (int w = 0; w < words; ++w) rows[r][w] ^= rows[rank][w];
        pivot_row[col] = rank;
        ++rank;
    }
    if (rank < n)
        throw invariant_violation("wu_class: singular GF(2) system (non-unimodular form)");

    WuClass w;
    w.coordinates.assign(n, 0);
    for (int col = 0; col < n; ++col)
        w.coordinates[col] = get_bit(pivot_row[col], n);
    return w;
}

namespace detail {

// O(V) Wu class on a tree. Each vertex's equation is reduced to
// alpha w_v + [w_pending] + w_parent = gamma; children report either an
// affine rule w_c = s + w_parent, a known constant, or a forced value for
// the parent (leaving their own coordinate to be resolved by the parent's
// equation).
inline std::optional<WuClass> tree_wu_class(const PlumbingGraph& g) {
    const auto t = tree_topology(g);
    const int n = g.size();

    enum class Rule : uint8_t { kUnset, kConst, kAffineOfParent, kDeferred };
    std::vector<Rule> rule(n, Rule::kUnset);
    std::vector<int> base(n, 0);
    std::vector<int> dep(n, -1); // vertex whose value the deferred rule adds

    std::vector<int> alpha(n), gamma(n);
    std::vector<int> forced(n, -1);
    std::vector<int> pending(n, -1);
    for (int v = 0; v < n; ++v)
        alpha[v] = gamma[v] = static_cast<int>(g.weights[v] & 1);

    auto force = [&](int v, int val) -> bool {
        if (forced[v] >= 0 && forced[v] != val) return false;
        forced[v] = val;
        return true;
    };

    for (int i = n - 1; i >= 0; --i) {
        const int v = t.order[i];
        const int par = t.parent[v];
        if (forced[v] >= 0) {
            const int rest = gamma[v] ^ (alpha[v] & forced[v]);
            rule[v] = Rule::kConst;
            base[v] = forced[v];
            if (pending[v] >= 0) {
                // v's equation defines the pending child in terms of v's parent
                rule[pending[v]] = Rule::kDeferred;
                base[pending[v]] = rest;
                dep[pending[v]] = par;
            } else if (par >= 0) {
                if (!force(par, rest)) return std::nullopt; // inconsistent: singular
            } else if (rest != 0) {
                return std::nullopt;
            }
            if (par >= 0) gamma[par] ^= forced[v];
        } else if (alpha[v] == 1) {
            if (par < 0) {
                rule[v] = Rule::kConst;
                base[v] = gamma[v];
            } else {
                rule[v] = Rule::kAffineOfParent;
                base[v] = gamma[v];
                alpha[par] ^= 1;
                gamma[par] ^= gamma[v];
            }
        } else {
            // alpha = 0: the equation constrains the parent; w_v is resolved
            // later by the parent's equation
            if (par < 0) return std::nullopt; // free or inconsistent root
            if (!force(par, gamma[v])) return std::nullopt;
            if (pending[par] >= 0) return std::nullopt; // two unresolved children
            pending[par] = v;
        }
    }

    WuClass w;
    w.coordinates.assign(n, 0);
    for (int v : t.order) {
        switch (rule[v]) {
            case Rule::kConst:
                w.coordinates[v] = base[v];
                break;
            case Rule::kAffineOfParent:
                w.coordinates[v] = base[v] ^ w.coordinates[t.parent[v]];
                break;
            case Rule::kDeferred:
                w.coordinates[v] = base[v] ^ (dep[v] >= 0 ? w.coordinates[dep[v]] : 0);
                break;
            case Rule::kUnset:
                return std::nullopt;
        }
    }
    return w;
}

} // namespace detail

// w . x = x . x (mod 2) against every basis vector x.
inline bool is_characteristic(const PlumbingGraph& g, const WuClass& w) {
    const int n = g.size();
    std::vector<long long> dot(n, 0);
    for (int v = 0; v < n; ++v) dot[v] = g.weights[v] * w.coordinates[v];
    for (const auto& [u, v] : g.edges) {
        dot[u] += w.coordinates[v];
        dot[v] += w.coordinates[u];
    }
    for (int v = 0; v < n; ++v)
        if (((dot[v] - g.weights[v]) & 1) != 0) return false;
    return true;
}

inline WuClass wu_class(const PlumbingGraph& g) {
    std::optional<WuClass> w;
    if (static_cast<int>(g.edges.size()) == g.size() - 1)
        w = detail::tree_wu_class(g);
    if (!w || !is_characteristic(g, *w)) w = wu_class(intersection_matrix(g));
    if (!is_characteristic(g, *w))
        throw invariant_violation("wu_class: solution is not characteristic");
    return *w;
}

// w . w for a 0/1 class in the plumbing basis.
inline long long wu_self_intersection(const PlumbingGraph& g, const WuClass& w) {
    long long s = 0;
    for (int v = 0; v < g.size(); ++v)
        if (w.coordinates[v]) s += g.weights[v];
    for (const auto& [u, v] : g.edges)
        if (w.coordinates[u] && w.coordinates[v]) s += 2;
    return s;
}

// mu-bar via the plumbing route: (sign P - w.w)/8.
inline long long mu_bar_plumbing(const SeifertData& d) {
    const PlumbingGraph g = build_plumbing(d);
    const FormDiagonalization f = analyze_form(g);
    if (f.det != 1 && f.det != -1)
        throw invariant_violation("mu_bar_plumbing: plumbing form is not unimodular");
    const WuClass w = wu_class(g);
    const long long num = f.signature() - wu_self_intersection(g, w);
    if (num % 8 != 0)
        throw invariant_violation("mu_bar_plumbing: sign P - w.w not divisible by 8");
    return num / 8;
}

} // namespace floercalc
