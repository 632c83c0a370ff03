#pragma once

#include "picrank/support/bigint.hpp"
#include "picrank/support/factor.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace picrank {

// Element a + b*sqrt(d) of a real or imaginary quadratic field Q(sqrt(d)),
// d squarefree. Rational values are canonicalized to b = 0, d = 0.
struct QuadExt {
    Rat a, b;
    Int d;

    QuadExt() : a(0), b(0), d(0) {}
    QuadExt(Rat ra) : a(std::move(ra)), b(0), d(0) {}  // NOLINT(google-explicit-constructor)
    QuadExt(Rat ra, Rat rb, Int dd) : a(std::move(ra)), b(std::move(rb)), d(std::move(dd)) {
        if (b == 0) d = 0;
        if (b != 0 && (d == 0 || d == 1)) throw std::invalid_argument("QuadExt: bad radicand");
    }

    bool is_rational() const { return b == 0; }
    bool is_zero() const { return a == 0 && b == 0; }
    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a == y.a && x.b == y.b && x.d == y.d;
    }
};

inline Int quad_common_d(const QuadExt& x, const QuadExt& y) {
    if (x.d == 0) return y.d;
    if (y.d == 0 || x.d == y.d) return x.d;
    throw std::invalid_argument("QuadExt: mixing distinct quadratic fields");
}

inline QuadExt quad_add(const QuadExt& x, const QuadExt& y) {
    Int d = quad_common_d(x, y);
    Rat b = x.b + y.b;
    return b == 0 ? QuadExt(x.a + y.a) : QuadExt(x.a + y.a, b, d);
}

inline QuadExt quad_sub(const QuadExt& x, const QuadExt& y) {
    Int d = quad_common_d(x, y);
    Rat b = x.b - y.b;
    return b == 0 ? QuadExt(x.a - y.a) : QuadExt(x.a - y.a, b, d);
}

inline QuadExt quad_neg(const QuadExt& x) {
    return x.b == 0 ? QuadExt(-x.a) : QuadExt(-x.a, -x.b, x.d);
}

inline QuadExt quad_mul(const QuadExt& x, const QuadExt& y) {
    Int d = quad_common_d(x, y);
    Rat a = x.a * y.a + x.b * y.b * Rat(d);
    Rat b = x.a * y.b + x.b * y.a;
    return b == 0 ? QuadExt(a) : QuadExt(a, b, d);
}

inline QuadExt quad_conj(const QuadExt& x) {
    return x.b == 0 ? x : QuadExt(x.a, -x.b, x.d);
}

inline Rat quad_norm(const QuadExt& x) { return x.a * x.a - x.b * x.b * Rat(x.d); }

inline QuadExt quad_inv(const QuadExt& x) {
    if (x.is_zero()) throw std::domain_error("QuadExt: inverse of zero");
    Rat n = quad_norm(x);
    if (n == 0) throw std::domain_error("QuadExt: zero norm");  // cannot happen for squarefree d
    return quad_mul(QuadExt(1 / n), quad_conj(x));
}

inline QuadExt quad_div(const QuadExt& x, const QuadExt& y) { return quad_mul(x, quad_inv(y)); }

// Principal square root of a rational: sqrt(D) = (m/den) * sqrt(d) with d squarefree.
inline QuadExt quad_sqrt_of_rat(const Rat& D) {
    if (D == 0) return QuadExt(Rat(0));
    Int num = boost::multiprecision::numerator(D);
    Int den = boost::multiprecision::denominator(D);
    Int n = num * den;  // sqrt(D) = sqrt(n)/den
    Int sign = n < 0 ? -1 : 1;
    n = boost::multiprecision::abs(n);
    Int sq = 1, sf = 1;
    for (auto& [pr, e] : factor(n)) {
        sq *= pow_int(pr, uint64_t(e / 2));
        if (e & 1) sf *= pr;
    }
    Int d = sign * sf;
    Rat m(sq, den);
    if (d == 1) return QuadExt(m);
    return QuadExt(Rat(0), m, d);
}

// Square root within Q(sqrt(d)) when it exists.
inline std::optional<QuadExt> quad_sqrt_in_field(const QuadExt& x) {
    if (x.is_zero()) return QuadExt(Rat(0));
    if (x.b == 0) {
        QuadExt r = quad_sqrt_of_rat(x.a);
        if (r.d == 0 || r.d == x.d || x.d == 0) return r;
        return std::nullopt;
    }
    // (u + v sqrt(d))^2 = u^2 + d v^2 + 2uv sqrt(d)
    Rat n = quad_norm(x);  // a^2 - d b^2 must be a rational square s^2
    if (!is_square(n)) return std::nullopt;
    QuadExt s = quad_sqrt_of_rat(n);
    for (int sgn : {1, -1}) {
        Rat u2 = (x.a + Rat(sgn) * s.a) / 2;
        if (u2 == 0) continue;
        if (!is_square(u2)) continue;
        QuadExt u = quad_sqrt_of_rat(u2);
        Rat v = x.b / (2 * u.a);
        return QuadExt(u.a, v, x.d);
    }
    return std::nullopt;
}

// Field object for Q(sqrt(d)); d == 0 degenerates to plain Q.
struct QuadRing {
    Int d;
    using V = QuadExt;
    V zero() const { return QuadExt(Rat(0)); }
    V one() const { return QuadExt(Rat(1)); }
    V add(const V& a, const V& b) const { return quad_add(a, b); }
    V sub(const V& a, const V& b) const { return quad_sub(a, b); }
    V mul(const V& a, const V& b) const { return quad_mul(a, b); }
    V neg(const V& a) const { return quad_neg(a); }
    V inv(const V& a) const { return quad_inv(a); }
    bool is_zero(const V& a) const { return a.is_zero(); }
    bool eq(const V& a, const V& b) const { return a == b; }
    std::optional<V> sqrt(const V& a) const {
        if (a.b == 0) {
            auto r = quad_sqrt_of_rat(a.a);
            if (r.d == 0 || r.d == d) return r;
            return std::nullopt;
        }
        return quad_sqrt_in_field(a);
    }
};

// Zero-testing arithmetic in the compositum of several quadratic fields.
// A surface-wide context fixes one embedding choice for every radical, which
// keeps all tests mutually coherent. Values are component vectors over the
// monomials prod_{i in mask} sqrt(basis_i) of an independent radical basis.
class AlgebraContext {
public:
    struct MQ {
        std::vector<Rat> comp;  // index = subset mask; missing entries are 0
    };

    // representation of sqrt(d): pair (mask, multiplier)
    std::pair<uint32_t, Rat> resolve(const Int& d) {
        if (d == 0 || d == 1) throw std::invalid_argument("resolve: bad radicand");
        for (size_t i = 0; i < reprs_.size(); ++i)
            if (known_[i] == d) return reprs_[i];
        // try to express sqrt(d) over the existing basis
        for (uint32_t mask = 0; mask < (1u << basis_.size()); ++mask) {
            Int prod = d;
            for (size_t i = 0; i < basis_.size(); ++i)
                if (mask & (1u << i)) prod *= basis_[i];
            if (prod > 0 && is_square(prod)) {
                Int s = isqrt(prod);
                Int q = 1;
                for (size_t i = 0; i < basis_.size(); ++i)
                    if (mask & (1u << i)) q *= basis_[i];
                std::pair<uint32_t, Rat> repr{mask, Rat(s, q)};
                known_.push_back(d);
                reprs_.push_back(repr);
                return repr;
            }
        }
        basis_.push_back(d);
        std::pair<uint32_t, Rat> repr{uint32_t(1) << (basis_.size() - 1), Rat(1)};
        known_.push_back(d);
        reprs_.push_back(repr);
        return repr;
    }

    MQ from_quad(const QuadExt& x) {
        MQ v;
        v.comp.assign(1, x.a);
        if (x.b != 0) {
            auto [mask, mult] = resolve(x.d);
            if (v.comp.size() <= mask) v.comp.resize(size_t(mask) + 1, Rat(0));
            v.comp[mask] += x.b * mult;
        }
        return v;
    }

    MQ from_rat(const Rat& r) {
        MQ v;
        v.comp.assign(1, r);
        return v;
    }

    MQ add(const MQ& x, const MQ& y) const {
        MQ r;
        r.comp.assign(std::max(x.comp.size(), y.comp.size()), Rat(0));
        for (size_t i = 0; i < x.comp.size(); ++i) r.comp[i] += x.comp[i];
        for (size_t i = 0; i < y.comp.size(); ++i) r.comp[i] += y.comp[i];
        return r;
    }

    MQ sub(const MQ& x, const MQ& y) const {
        MQ r;
        r.comp.assign(std::max(x.comp.size(), y.comp.size()), Rat(0));
        for (size_t i = 0; i < x.comp.size(); ++i) r.comp[i] += x.comp[i];
        for (size_t i = 0; i < y.comp.size(); ++i) r.comp[i] -= y.comp[i];
        return r;
    }

    MQ neg(const MQ& x) const {
        MQ r = x;
        for (auto& c : r.comp) c = -c;
        return r;
    }

    MQ mul(const MQ& x, const MQ& y) const {
        MQ r;
        r.comp.assign(1, Rat(0));
        for (uint32_t s = 0; s < x.comp.size(); ++s) {
            if (x.comp[s] == 0) continue;
            for (uint32_t t = 0; t < y.comp.size(); ++t) {
                if (y.comp[t] == 0) continue;
                Int g = 1;
                uint32_t both = s & t;
                for (size_t i = 0; i < basis_.size(); ++i)
                    if (both & (1u << i)) g *= basis_[i];
                uint32_t m = s ^ t;
                if (r.comp.size() <= m) r.comp.resize(size_t(m) + 1, Rat(0));
                r.comp[m] += x.comp[s] * y.comp[t] * Rat(g);
            }
        }
        return r;
    }

    bool is_zero(const MQ& x) const {
        for (auto& c : x.comp)
            if (c != 0) return false;
        return true;
    }

    using V = MQ;
    V zero() const { return MQ{{Rat(0)}}; }
    V one() const { return MQ{{Rat(1)}}; }
    bool eq(const V& a, const V& b) const { return is_zero(sub(a, b)); }

    const std::vector<Int>& basis() const { return basis_; }

private:
    std::vector<Int> basis_;
    std::vector<Int> known_;
    std::vector<std::pair<uint32_t, Rat>> reprs_;
};

}  // namespace picrank
