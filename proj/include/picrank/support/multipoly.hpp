#pragma once

#include "picrank/support/poly.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace picrank {

// Sparse multivariate polynomials in up to 4 variables. Exponent tuples are
// compared lexicographically (the std::array order), which the square-root
// extraction below relies on.
using Mono = std::array<uint8_t, 4>;

template <class R>
struct MPoly {
    std::map<Mono, typename R::V> t;

    bool empty() const { return t.empty(); }
};

template <class R>
MPoly<R> mp_zero(const R&) {
    return {};
}

template <class R>
void mp_add_term(const R& ring, MPoly<R>& f, const Mono& m, const typename R::V& c) {
    if (ring.is_zero(c)) return;
    auto it = f.t.find(m);
    if (it == f.t.end()) {
        f.t.emplace(m, c);
    } else {
        it->second = ring.add(it->second, c);
        if (ring.is_zero(it->second)) f.t.erase(it);
    }
}

template <class R>
MPoly<R> mp_add(const R& ring, const MPoly<R>& a, const MPoly<R>& b) {
    MPoly<R> r = a;
    for (auto& [m, c] : b.t) mp_add_term(ring, r, m, c);
    return r;
}

template <class R>
MPoly<R> mp_neg(const R& ring, const MPoly<R>& a) {
    MPoly<R> r;
    for (auto& [m, c] : a.t) r.t.emplace(m, ring.neg(c));
    return r;
}

template <class R>
MPoly<R> mp_sub(const R& ring, const MPoly<R>& a, const MPoly<R>& b) {
    MPoly<R> r = a;
    for (auto& [m, c] : b.t) mp_add_term(ring, r, m, ring.neg(c));
    return r;
}

template <class R>
MPoly<R> mp_mul(const R& ring, const MPoly<R>& a, const MPoly<R>& b) {
    MPoly<R> r;
    for (auto& [ma, ca] : a.t)
        for (auto& [mb, cb] : b.t) {
            Mono m{uint8_t(ma[0] + mb[0]), uint8_t(ma[1] + mb[1]), uint8_t(ma[2] + mb[2]),
                   uint8_t(ma[3] + mb[3])};
            mp_add_term(ring, r, m, ring.mul(ca, cb));
        }
    return r;
}

template <class R>
MPoly<R> mp_scale(const R& ring, const MPoly<R>& a, const typename R::V& s) {
    MPoly<R> r;
    if (ring.is_zero(s)) return r;
    for (auto& [m, c] : a.t) {
        auto v = ring.mul(c, s);
        if (!ring.is_zero(v)) r.t.emplace(m, v);
    }
    return r;
}

template <class R>
MPoly<R> mp_pow(const R& ring, MPoly<R> a, unsigned e) {
    MPoly<R> r;
    mp_add_term(ring, r, Mono{0, 0, 0, 0}, ring.one());
    while (e) {
        if (e & 1) r = mp_mul(ring, r, a);
        a = mp_mul(ring, a, a);
        e >>= 1;
    }
    return r;
}

template <class R>
MPoly<R> mp_deriv(const R& ring, const MPoly<R>& a, int var) {
    MPoly<R> r;
    for (auto& [m, c] : a.t) {
        if (m[var] == 0) continue;
        Mono n = m;
        n[var] -= 1;
        typename R::V mult = ring.zero();
        for (int i = 0; i < m[var]; ++i) mult = ring.add(mult, ring.one());
        mp_add_term(ring, r, n, ring.mul(c, mult));
    }
    return r;
}

template <class R>
typename R::V mp_eval(const R& ring, const MPoly<R>& a, const std::array<typename R::V, 4>& x) {
    // precompute powers up to the maximum exponent per variable
    std::array<std::vector<typename R::V>, 4> pows;
    std::array<int, 4> maxe{0, 0, 0, 0};
    for (auto& [m, c] : a.t)
        for (int v = 0; v < 4; ++v) maxe[v] = std::max(maxe[v], int(m[v]));
    for (int v = 0; v < 4; ++v) {
        pows[v].resize(maxe[v] + 1, ring.one());
        for (int e = 1; e <= maxe[v]; ++e) pows[v][e] = ring.mul(pows[v][e - 1], x[v]);
    }
    typename R::V acc = ring.zero();
    for (auto& [m, c] : a.t) {
        typename R::V term = c;
        for (int v = 0; v < 4; ++v)
            if (m[v]) term = ring.mul(term, pows[v][m[v]]);
        acc = ring.add(acc, term);
    }
    return acc;
}

// Substitute x_i -> sum_j cols[j][i] * y_j  (cols: one array<V,4> per new
// variable). The result lives in the first cols.size() variables.
template <class R>
MPoly<R> mp_subst_linear(const R& ring, const MPoly<R>& a,
                         const std::vector<std::array<typename R::V, 4>>& cols) {
    size_t nv = cols.size();
    // linear forms for each original variable
    std::vector<MPoly<R>> lin(4);
    for (int v = 0; v < 4; ++v)
        for (size_t j = 0; j < nv; ++j) {
            Mono m{0, 0, 0, 0};
            m[j] = 1;
            mp_add_term(ring, lin[v], m, cols[j][v]);
        }
    MPoly<R> r;
    for (auto& [m, c] : a.t) {
        MPoly<R> term;
        mp_add_term(ring, term, Mono{0, 0, 0, 0}, c);
        for (int v = 0; v < 4; ++v)
            for (int e = 0; e < m[v]; ++e) term = mp_mul(ring, term, lin[v]);
        r = mp_add(ring, r, term);
    }
    return r;
}

template <class R>
int mp_total_degree(const MPoly<R>& a) {
    int d = -1;
    for (auto& [m, c] : a.t) d = std::max(d, int(m[0]) + m[1] + m[2] + m[3]);
    return d;
}

// Exact square root of a polynomial when one exists in the same coefficient
// field; returns nullopt otherwise. Works in any characteristic != 2. The
// ring must provide sqrt(V) -> optional<V>.
template <class R>
std::optional<MPoly<R>> mp_sqrt(const R& ring, const MPoly<R>& q) {
    if (q.empty()) return MPoly<R>{};
    // leading (lex-largest) monomial must be a square
    auto lead = q.t.rbegin();
    Mono lm = lead->first;
    if (lm[0] % 2 || lm[1] % 2 || lm[2] % 2 || lm[3] % 2) return std::nullopt;
    auto lc = ring.sqrt(lead->second);
    if (!lc) return std::nullopt;
    MPoly<R> c;
    Mono half{uint8_t(lm[0] / 2), uint8_t(lm[1] / 2), uint8_t(lm[2] / 2), uint8_t(lm[3] / 2)};
    mp_add_term(ring, c, half, *lc);
    typename R::V two = ring.add(ring.one(), ring.one());
    typename R::V lc2inv = ring.inv(ring.mul(two, *lc));
    for (int guard = 0; guard < 256; ++guard) {
        MPoly<R> rem = mp_sub(ring, q, mp_mul(ring, c, c));
        if (rem.empty()) return c;
        auto rl = rem.t.rbegin();
        Mono rm = rl->first;
        // next term tau satisfies 2*lead(c)*tau = lead(rem)
        Mono tau;
        bool ok = true;
        for (int v = 0; v < 4; ++v) {
            if (rm[v] < half[v]) {
                ok = false;
                break;
            }
            tau[v] = uint8_t(rm[v] - half[v]);
        }
        if (!ok) return std::nullopt;
        // tau must be lex-smaller than the leading monomial of c
        if (!(tau < half)) return std::nullopt;
        mp_add_term(ring, c, tau, ring.mul(rl->second, lc2inv));
    }
    return std::nullopt;
}

}  // namespace picrank
