#pragma once

#include "picrank/support/bigint.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace picrank {

inline const std::vector<uint32_t>& small_primes() {
    static const std::vector<uint32_t> primes = [] {
        constexpr uint32_t limit = 100000;
        std::vector<bool> sieve(limit + 1, true);
        std::vector<uint32_t> out;
        for (uint32_t i = 2; i <= limit; ++i) {
            if (!sieve[i]) continue;
            out.push_back(i);
            for (uint64_t j = uint64_t(i) * i; j <= limit; j += i) sieve[j] = false;
        }
        return out;
    }();
    return primes;
}

inline bool miller_rabin_round(const Int& n, const Int& a, const Int& d, int s) {
    Int x = boost::multiprecision::powm(a % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

inline bool is_probable_prime(const Int& n) {
    if (n < 2) return false;
    for (uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic for n < 3.3e24 with these bases; overwhelming confidence beyond
    for (uint32_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u}) {
        if (!miller_rabin_round(n, Int(a), d, s)) return false;
    }
    return true;
}

// Brent's cycle variant of Pollard rho. Returns a nontrivial factor of composite n.
inline Int pollard_brent(const Int& n, uint64_t seed = 1) {
    if (n % 2 == 0) return 2;
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 12345);
    while (true) {
        Int y = Int(rng() % UINT64_MAX) % n;
        Int c = 1 + Int(rng() % UINT64_MAX) % (n - 1);
        Int m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
        while (g == 1) {
            x = y;
            for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
            Int k = 0;
            while (k < r && g == 1) {
                ys = y;
                Int lim = m < r - k ? m : r - k;
                for (Int i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * boost::multiprecision::abs(x - y) % n;
                }
                g = boost::multiprecision::gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = boost::multiprecision::gcd(boost::multiprecision::abs(x - ys), n);
            }
        }
        if (g != n) return g;
    }
}

namespace detail {
inline void factor_into(Int n, std::map<Int, int>& out, uint64_t seed) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    Int f = pollard_brent(n, seed);
    factor_into(f, out, seed + 1);
    factor_into(n / f, out, seed + 1);
}
}  // namespace detail

inline std::map<Int, int> factor(Int n) {
    if (n <= 0) throw std::domain_error("factor: argument must be positive");
    std::map<Int, int> out;
    for (uint32_t p : small_primes()) {
        if (Int(p) * p > n) break;
        while (n % p == 0) {
            ++out[Int(p)];
            n /= p;
        }
    }
    if (n > 1) {
        if (is_probable_prime(n)) {
            ++out[n];
        } else if (is_square(n)) {
            std::map<Int, int> half;
            detail::factor_into(isqrt(n), half, 7);
            for (auto& [p, e] : half) out[p] += 2 * e;
        } else {
            detail::factor_into(n, out, 7);
        }
    }
    return out;
}

// Squarefree part of a nonzero integer, sign preserved: the canonical
// representative of its class in Q*/Q*^2.
inline Int squarefree_class(Int n) {
    if (n == 0) throw std::domain_error("squarefree_class of zero");
    Int sign = n < 0 ? -1 : 1;
    n = boost::multiprecision::abs(n);
    Int cls = 1;
    for (uint32_t p : small_primes()) {
        if (Int(p) * p > n) break;
        int e = 0;
        while (n % p == 0) {
            ++e;
            n /= p;
        }
        if (e & 1) cls *= p;
    }
    if (n > 1) {
        if (is_square(n)) {
            // even part, contributes nothing
        } else if (is_probable_prime(n)) {
            cls *= n;
        } else {
            for (auto& [p, e] : factor(n))
                if (e & 1) cls *= p;
        }
    }
    return sign * cls;
}

inline Int squarefree_class(const Rat& r) {
    return squarefree_class(Int(boost::multiprecision::numerator(r) *
                                boost::multiprecision::denominator(r)));
}

// Class equality without factoring: a and b lie in the same square class
// iff a*b is a square.
inline bool same_square_class(const Rat& a, const Rat& b) {
    if (a == 0 || b == 0) throw std::domain_error("same_square_class of zero");
    return is_square(Rat(a * b));
}

}  // namespace picrank
