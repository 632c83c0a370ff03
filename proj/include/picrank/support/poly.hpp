#pragma once

#include "picrank/support/bigint.hpp"

#include <optional>

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace picrank {

// Dense univariate polynomials as coefficient vectors, low degree first.
// Operations are free functions over a ring object R providing
//   V, zero(), one(), add, sub, mul, neg, is_zero, eq  (and inv for fields).

struct IntRing {
    using V = Int;
    V zero() const { return 0; }
    V one() const { return 1; }
    V add(const V& a, const V& b) const { return a + b; }
    V sub(const V& a, const V& b) const { return a - b; }
    V mul(const V& a, const V& b) const { return a * b; }
    V neg(const V& a) const { return -a; }
    bool is_zero(const V& a) const { return a == 0; }
    bool eq(const V& a, const V& b) const { return a == b; }
};

struct RatRing {
    using V = Rat;
    V zero() const { return 0; }
    V one() const { return 1; }
    V add(const V& a, const V& b) const { return a + b; }
    V sub(const V& a, const V& b) const { return a - b; }
    V mul(const V& a, const V& b) const { return a * b; }
    V neg(const V& a) const { return -a; }
    V inv(const V& a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return 1 / a;
    }
    bool is_zero(const V& a) const { return a == 0; }
    bool eq(const V& a, const V& b) const { return a == b; }
    std::optional<V> sqrt(const V& a) const {
        if (a < 0) return std::nullopt;
        Int num = boost::multiprecision::numerator(a);
        Int den = boost::multiprecision::denominator(a);
        if (!is_square(num) || !is_square(den)) return std::nullopt;
        return Rat(isqrt(num), isqrt(den));
    }
};

template <class R>
using PolyOf = std::vector<typename R::V>;

template <class R>
PolyOf<R> poly_trim(const R& ring, PolyOf<R> f) {
    while (!f.empty() && ring.is_zero(f.back())) f.pop_back();
    return f;
}

template <class R>
int poly_deg(const R& ring, const PolyOf<R>& f) {
    for (size_t i = f.size(); i-- > 0;)
        if (!ring.is_zero(f[i])) return int(i);
    return -1;
}

template <class R>
PolyOf<R> poly_add(const R& ring, const PolyOf<R>& a, const PolyOf<R>& b) {
    PolyOf<R> r(std::max(a.size(), b.size()), ring.zero());
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] = ring.add(r[i], a[i]);
        if (i < b.size()) r[i] = ring.add(r[i], b[i]);
    }
    return poly_trim(ring, std::move(r));
}

template <class R>
PolyOf<R> poly_sub(const R& ring, const PolyOf<R>& a, const PolyOf<R>& b) {
    PolyOf<R> r(std::max(a.size(), b.size()), ring.zero());
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] = ring.add(r[i], a[i]);
        if (i < b.size()) r[i] = ring.sub(r[i], b[i]);
    }
    return poly_trim(ring, std::move(r));
}

template <class R>
PolyOf<R> poly_mul(const R& ring, const PolyOf<R>& a, const PolyOf<R>& b) {
    if (a.empty() || b.empty()) return {};
    PolyOf<R> r(a.size() + b.size() - 1, ring.zero());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = ring.add(r[i + j], ring.mul(a[i], b[j]));
    return poly_trim(ring, std::move(r));
}

template <class R>
typename R::V poly_eval(const R& ring, const PolyOf<R>& f, const typename R::V& x) {
    typename R::V acc = ring.zero();
    for (size_t i = f.size(); i-- > 0;) acc = ring.add(ring.mul(acc, x), f[i]);
    return acc;
}

// Division by a *monic* divisor; exact over any commutative ring.
// Returns {quotient, remainder}.
template <class R>
std::pair<PolyOf<R>, PolyOf<R>> poly_divrem_monic(const R& ring, PolyOf<R> a,
                                                  const PolyOf<R>& b) {
    if (b.empty() || !ring.eq(b.back(), ring.one()))
        throw std::invalid_argument("poly_divrem_monic: divisor not monic");
    a = poly_trim(ring, std::move(a));
    if (a.size() < b.size()) return {{}, std::move(a)};
    PolyOf<R> q(a.size() - b.size() + 1, ring.zero());
    for (size_t shift = q.size(); shift-- > 0;) {
        typename R::V c = a[shift + b.size() - 1];
        if (ring.is_zero(c)) continue;
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = ring.sub(a[shift + i], ring.mul(c, b[i]));
    }
    return {poly_trim(ring, std::move(q)), poly_trim(ring, std::move(a))};
}

}  // namespace picrank
