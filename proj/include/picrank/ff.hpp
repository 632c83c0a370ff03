#pragma once

#include "picrank/support/util.hpp"

#include <array>
#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace picrank::ff {

inline bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    auto powmod = [](uint64_t b, uint64_t e, uint64_t m) {
        uint64_t r = 1;
        b %= m;
        while (e) {
            if (e & 1) r = (__uint128_t)r * b % m;
            b = (__uint128_t)b * b % m;
            e >>= 1;
        }
        return r;
    };
    uint32_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint32_t a : {2u, 7u, 61u}) {  // deterministic below 2^32
        if (a % n == 0) continue;
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = (__uint128_t)x * x % n;
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

// Element of F_{p^k}, k <= 4: residue-class representative coefficients,
// low degree first, entries in [0, p). Unused slots stay zero.
struct Elt {
    std::array<uint32_t, 4> c{0, 0, 0, 0};
    friend bool operator==(const Elt&, const Elt&) = default;
};

enum class ArithOp { Add, Sub, Mul, Div, Pow, Inv, Neg };

// Descriptor of F_{p^k} with the lexicographically least monic irreducible
// modulus (coefficients compared low-degree-first). Immutable after
// construction; all element operations are pure, so one Field may be shared
// across threads.
class Field {
public:
    // Character/sqrt tables are built eagerly for q below this cap; larger
    // fields fall back to the norm route.
    static constexpr uint64_t kTableCap = uint64_t(1) << 22;

    Field(uint32_t p, uint32_t k, bool build_tables = true) : p_(p), k_(k) {
        if (p < 5 || !is_prime_u32(p)) throw std::invalid_argument("Field: p must be a prime >= 5");
        if (k < 1 || k > 4) throw std::invalid_argument("Field: extension degree must be 1..4");
        q_ = 1;
        for (uint32_t i = 0; i < k; ++i) q_ *= p;
        barrett16_ = (uint32_t(1) << 16) / p;
        find_modulus();
        build_reduction_rows();
        build_frobenius();
        chi_p_.assign(p_, -1);
        chi_p_[0] = 0;
        for (uint64_t x = 1; x < p_; ++x) chi_p_[x * x % p_] = 1;
        if (build_tables && q_ <= kTableCap) build_full_tables();
    }

    uint32_t p() const { return p_; }
    uint32_t degree() const { return k_; }
    uint64_t q() const { return q_; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }
    uint32_t barrett16() const { return barrett16_; }
    const uint32_t* reduction_row(uint32_t j) const { return red_[j].data(); }

    Elt zero() const { return Elt{}; }
    Elt one() const {
        Elt e;
        e.c[0] = 1;
        return e;
    }
    bool is_zero(const Elt& a) const {
        return a.c[0] == 0 && a.c[1] == 0 && a.c[2] == 0 && a.c[3] == 0;
    }

    Elt from_int(int64_t v) const {
        int64_t r = v % int64_t(p_);
        if (r < 0) r += p_;
        Elt e;
        e.c[0] = uint32_t(r);
        return e;
    }

    Elt from_coeffs(const std::vector<int64_t>& cs) const {
        Elt e;
        if (cs.size() > k_) throw std::invalid_argument("from_coeffs: too many coefficients");
        for (size_t i = 0; i < cs.size(); ++i) {
            int64_t r = cs[i] % int64_t(p_);
            if (r < 0) r += p_;
            e.c[i] = uint32_t(r);
        }
        return e;
    }

    // generator of the polynomial basis (the class of T); equals 0 for k = 1
    Elt gen() const {
        Elt e;
        if (k_ > 1) e.c[1] = 1;
        return e;
    }

    uint64_t index(const Elt& a) const {
        uint64_t idx = 0;
        for (uint32_t i = k_; i-- > 0;) idx = idx * p_ + a.c[i];
        return idx;
    }

    Elt from_index(uint64_t idx) const {
        Elt e;
        for (uint32_t i = 0; i < k_; ++i) {
            e.c[i] = uint32_t(idx % p_);
            idx /= p_;
        }
        return e;
    }

    Elt add(const Elt& a, const Elt& b) const {
        Elt r;
        for (uint32_t i = 0; i < k_; ++i) {
            uint32_t s = a.c[i] + b.c[i];
            r.c[i] = s >= p_ ? s - p_ : s;
        }
        return r;
    }

    Elt sub(const Elt& a, const Elt& b) const {
        Elt r;
        for (uint32_t i = 0; i < k_; ++i) {
            uint32_t s = a.c[i] + p_ - b.c[i];
            r.c[i] = s >= p_ ? s - p_ : s;
        }
        return r;
    }

    Elt neg(const Elt& a) const { return sub(zero(), a); }

    Elt mul(const Elt& a, const Elt& b) const {
        uint64_t acc[7] = {0, 0, 0, 0, 0, 0, 0};
        for (uint32_t i = 0; i < k_; ++i) {
            if (a.c[i] == 0) continue;
            for (uint32_t j = 0; j < k_; ++j) acc[i + j] += uint64_t(a.c[i]) * b.c[j];
        }
        // fold T^(k+j) via precomputed rows
        for (uint32_t m = 2 * k_ - 2; m >= k_ && m < 7; --m) {
            uint64_t c = acc[m] % p_;
            if (c == 0) continue;
            const auto& row = red_[m - k_];
            for (uint32_t i = 0; i < k_; ++i) acc[i] += c * row[i];
        }
        Elt r;
        for (uint32_t i = 0; i < k_; ++i) r.c[i] = uint32_t(acc[i] % p_);
        return r;
    }

    Elt sq(const Elt& a) const { return mul(a, a); }

    Elt scalar_mul(uint32_t s, const Elt& a) const {
        Elt r;
        for (uint32_t i = 0; i < k_; ++i) r.c[i] = uint32_t(uint64_t(s) * a.c[i] % p_);
        return r;
    }

    Elt pow(Elt a, uint64_t e) const {
        Elt r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    Elt inv(const Elt& a) const {
        if (is_zero(a)) throw std::domain_error("division by zero in F_q");
        return pow(a, q_ - 2);
    }

    Elt div(const Elt& a, const Elt& b) const { return mul(a, inv(b)); }

    Elt frobenius(const Elt& a) const {
        if (k_ == 1) return a;
        Elt r;
        for (uint32_t i = 0; i < k_; ++i) {
            if (a.c[i] == 0) continue;
            for (uint32_t j = 0; j < k_; ++j)
                r.c[j] = uint32_t((r.c[j] + uint64_t(a.c[i]) * frob_[i][j]) % p_);
        }
        return r;
    }

    Elt frobenius_iter(Elt a, uint32_t times) const {
        for (uint32_t i = 0; i < times % k_; ++i) a = frobenius(a);
        return a;
    }

    // N_{F_q/F_p}(a), as a prime-field residue
    uint32_t norm(const Elt& a) const {
        if (k_ == 1) return a.c[0];
        Elt n = a, conj = a;
        for (uint32_t j = 1; j < k_; ++j) {
            conj = frobenius(conj);
            n = mul(n, conj);
        }
        assert(n.c[1] == 0 && n.c[2] == 0 && n.c[3] == 0);
        return n.c[0];
    }

    // +1 nonzero square, 0 zero, -1 nonsquare; prime-field character of the
    // norm with a table lookup, which is the cheap route in the hot loop
    int quadratic_character(const Elt& a) const {
        if (is_zero(a)) return 0;
        return chi_p_[norm(a)];
    }

    // Euler-criterion reference implementation
    int chi_euler(const Elt& a) const {
        if (is_zero(a)) return 0;
        Elt r = pow(a, (q_ - 1) / 2);
        return r == one() ? 1 : -1;
    }

    bool has_tables() const { return !chi_q_.empty(); }
    const int8_t* chi_table() const { return chi_q_.data(); }

    // some square root of a (by full table); only valid when has_tables()
    bool sqrt_elt(const Elt& a, Elt& out) const {
        if (is_zero(a)) {
            out = zero();
            return true;
        }
        uint64_t idx = index(a);
        if (chi_q_[idx] != 1) return false;
        out = from_index(sqrt_q_[idx]);
        return true;
    }

    Elt arith(const Elt& a, const Elt& b, ArithOp op) const {
        switch (op) {
            case ArithOp::Add: return add(a, b);
            case ArithOp::Sub: return sub(a, b);
            case ArithOp::Mul: return mul(a, b);
            case ArithOp::Div: return div(a, b);
            case ArithOp::Pow: return pow(a, index(b));
            case ArithOp::Inv: return inv(a);
            case ArithOp::Neg: return neg(a);
        }
        throw std::logic_error("unreachable");
    }

private:
    // ---- modulus search over small mod-p polynomials (coeff vectors, low first)
    using SPoly = std::vector<uint32_t>;

    static SPoly sp_trim(SPoly f) {
        while (!f.empty() && f.back() == 0) f.pop_back();
        return f;
    }

    static SPoly sp_mulmod(const SPoly& a, const SPoly& b, const SPoly& f, uint32_t p) {
        if (a.empty() || b.empty()) return {};
        std::vector<uint64_t> acc(a.size() + b.size(), 0);
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) acc[i + j] += uint64_t(a[i]) * b[j] % p;
        // reduce by monic f
        size_t k = f.size() - 1;
        for (size_t m = acc.size(); m-- > k;) {
            uint64_t c = acc[m] % p;
            if (!c) continue;
            acc[m] = 0;
            for (size_t i = 0; i < k; ++i) acc[m - k + i] = (acc[m - k + i] + c * (p - f[i])) % p;
        }
        SPoly r(k, 0);
        for (size_t i = 0; i < k && i < acc.size(); ++i) r[i] = uint32_t(acc[i] % p);
        return sp_trim(r);
    }

    static SPoly sp_xpow(uint64_t e, const SPoly& f, uint32_t p) {
        SPoly r{1}, x{0, 1};
        while (e) {
            if (e & 1) r = sp_mulmod(r, x, f, p);
            x = sp_mulmod(x, x, f, p);
            e >>= 1;
        }
        return r;
    }

    static SPoly sp_gcd(SPoly a, SPoly b, uint32_t p) {
        auto inv_mod = [p](uint32_t x) {
            uint64_t r = 1, base = x, e = p - 2;
            while (e) {
                if (e & 1) r = r * base % p;
                base = base * base % p;
                e >>= 1;
            }
            return uint32_t(r);
        };
        a = sp_trim(std::move(a));
        b = sp_trim(std::move(b));
        while (!b.empty()) {
            // a mod b
            uint32_t lead_inv = inv_mod(b.back());
            while (a.size() >= b.size() && !a.empty()) {
                uint64_t c = uint64_t(a.back()) * lead_inv % p;
               size_t shift = a.size() - b.size();
                for (size_t i = 0; i < b.size(); ++i)
                    a[shift + i] = uint32_t((a[shift + i] + c * (p - b[i])) % p);
                a = sp_trim(std::move(a));
                if (a.size() < b.size()) break;
            }
            std::swap(a, b);
        }
        return a;
    }

    static bool sp_is_irreducible(const SPoly& f, uint32_t p) {
        uint32_t k = uint32_t(f.size() - 1);
        // x^(p^k) == x mod f, and gcd(x^(p^(k/l)) - x, f) == 1 for primes l | k
        uint64_t pk = 1;
        for (uint32_t i = 0; i < k; ++i) pk *= p;
        SPoly top = sp_xpow(pk, f, p);
        if (!(top.size() == 2 && top[0] == 0 && top[1] == 1)) return false;
        std::vector<uint32_t> prime_divs;
        if (k % 2 == 0) prime_divs.push_back(2);
        if (k % 3 == 0) prime_divs.push_back(3);
        for (uint32_t l : prime_divs) {
            uint64_t e = 1;
            for (uint32_t i = 0; i < k / l; ++i) e *= p;
            SPoly g = sp_xpow(e, f, p);
            // g - x
            if (g.size() < 2) g.resize(2, 0);
            g[1] = (g[1] + p - 1) % p;
            g = sp_trim(std::move(g));
            SPoly d = sp_gcd(f, g, p);
            if (d.size() > 1) return false;
        }
        return true;
    }

    void find_modulus() {
        if (k_ == 1) {
            modulus_ = {0, 1};
            return;
        }
        std::vector<uint32_t> c(k_, 0);
        while (true) {
            SPoly f(c.begin(), c.end());
            f.push_back(1);
            if (sp_is_irreducible(f, p_)) {
                modulus_ = f;
                return;
            }
            // next tuple in low-degree-first lexicographic order
            uint32_t i = k_;
            while (i-- > 0) {
                if (++c[i] < p_) break;
                c[i] = 0;
                if (i == 0) throw std::logic_error("no irreducible modulus found");
            }
        }
    }

    void build_reduction_rows() {
        for (auto& row : red_) row.fill(0);
        if (k_ == 1) return;
        // T^k = -(f_0 + f_1 T + ... + f_{k-1} T^{k-1})
        std::array<uint32_t, 4> cur{};
        for (uint32_t i = 0; i < k_; ++i) cur[i] = (p_ - modulus_[i]) % p_;
        red_[0] = cur;
        for (uint32_t j = 1; j + 1 < k_; ++j) {
            // multiply cur by T, reduce the overflow term through red_[0]
            std::array<uint32_t, 4> nxt{};
            for (uint32_t i = k_ - 1; i-- > 0;) nxt[i + 1] = cur[i];
            uint64_t hi = cur[k_ - 1];
            for (uint32_t i = 0; i < k_; ++i)
                nxt[i] = uint32_t((nxt[i] + hi * red_[0][i]) % p_);
            red_[j] = nxt;
            cur = nxt;
        }
    }

    void build_frobenius() {
        for (auto& row : frob_) row.fill(0);
        frob_[0][0] = 1;
        if (k_ == 1) return;
        SPoly xp = sp_xpow(p_, modulus_, p_);
        SPoly pw{1};
        for (uint32_t i = 1; i < k_; ++i) {
            pw = sp_mulmod(pw, xp, modulus_, p_);
            for (size_t j = 0; j < pw.size(); ++j) frob_[i][j] = pw[j];
        }
        frob_[0][0] = 1;
    }

    void build_full_tables() {
        chi_q_.assign(q_, -1);
        sqrt_q_.assign(q_, 0);
        chi_q_[0] = 0;
        for (uint64_t i = 1; i < q_; ++i) {
            Elt a = from_index(i);
            uint64_t s = index(mul(a, a));
            chi_q_[s] = 1;
            sqrt_q_[s] = uint32_t(i);
        }
    }

    uint32_t p_, k_;
    uint64_t q_;
    uint32_t barrett16_;
    std::vector<uint32_t> modulus_;
    std::array<std::array<uint32_t, 4>, 3> red_;
    std::array<std::array<uint32_t, 4>, 4> frob_;
    std::vector<int8_t> chi_p_;
    std::vector<int8_t> chi_q_;
    std::vector<uint32_t> sqrt_q_;
};

inline Field make_field(uint32_t p, uint32_t k, bool build_tables = true) {
    return Field(p, k, build_tables);
}

// Ring-object adaptor so the generic polynomial / linear algebra templates
// can run over F_q.
struct FqRing {
    const Field* F;
    using V = Elt;
    V zero() const { return F->zero(); }
    V one() const { return F->one(); }
    V add(const V& a, const V& b) const { return F->add(a, b); }
    V sub(const V& a, const V& b) const { return F->sub(a, b); }
    V mul(const V& a, const V& b) const { return F->mul(a, b); }
    V neg(const V& a) const { return F->neg(a); }
    V inv(const V& a) const { return F->inv(a); }
    bool is_zero(const V& a) const { return F->is_zero(a); }
    bool eq(const V& a, const V& b) const { return a == b; }
    std::optional<V> sqrt(const V& a) const {
        if (F->is_zero(a)) return F->zero();
        if (F->has_tables()) {
            Elt r;
            if (F->sqrt_elt(a, r)) return r;
            return std::nullopt;
        }
        for (uint64_t i = 1; i < F->q(); ++i) {
            Elt x = F->from_index(i);
            if (F->mul(x, x) == a) return x;
        }
        return std::nullopt;
    }
};

// Number of distinct roots in F_q of a polynomial of degree <= 4, via
// deg gcd(f, X^q - X) with X^q reduced by square-and-multiply mod f.
// The zero polynomial returns q + 1 (a whole projective line of solutions).
inline int64_t quartic_root_count(const Field& F, std::vector<Elt> f) {
    while (!f.empty() && F.is_zero(f.back())) f.pop_back();
    if (f.empty()) return int64_t(F.q()) + 1;
    if (f.size() == 1) return 0;
    if (f.size() == 2) return 1;
    if (f.size() > 5) throw std::invalid_argument("quartic_root_count: degree > 4");

    // make f monic
    Elt lead_inv = F.inv(f.back());
    for (auto& c : f) c = F.mul(c, lead_inv);

    auto mulmod = [&](const std::vector<Elt>& a, const std::vector<Elt>& b) -> std::vector<Elt> {
        if (a.empty() || b.empty()) return {};
        std::vector<Elt> acc(a.size() + b.size() - 1, F.zero());
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j)
                acc[i + j] = F.add(acc[i + j], F.mul(a[i], b[j]));
        size_t k = f.size() - 1;
        for (size_t m = acc.size(); m-- > k;) {
            Elt c = acc[m];
            if (F.is_zero(c)) continue;
            acc[m] = F.zero();
            for (size_t i = 0; i < k; ++i)
                acc[m - k + i] = F.sub(acc[m - k + i], F.mul(c, f[i]));
        }
        acc.resize(k);
        while (!acc.empty() && F.is_zero(acc.back())) acc.pop_back();
        return acc;
    };

    // X^q mod f
    std::vector<Elt> r{F.one()}, x{F.zero(), F.one()};
    uint64_t e = F.q();
    while (e) {
        if (e & 1) r = mulmod(r, x);
        x = mulmod(x, x);
        e >>= 1;
    }
    // gcd(f, X^q - X)
    std::vector<Elt> g = r;
    if (g.size() < 2) g.resize(2, F.zero());
    g[1] = F.sub(g[1], F.one());
    while (!g.empty() && F.is_zero(g.back())) g.pop_back();

    std::vector<Elt> a = f, b = g;
    while (!b.empty()) {
        Elt li = F.inv(b.back());
        while (a.size() >= b.size() && !a.empty()) {
            Elt c = F.mul(a.back(), li);
            size_t shift = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i)
                a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
            while (!a.empty() && F.is_zero(a.back())) a.pop_back();
            if (a.size() < b.size()) break;
        }
        std::swap(a, b);
    }
    return int64_t(a.size()) - 1;
}

}  // namespace picrank::ff
