#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <array>

#include <cstdint>
#include <stdexcept>

namespace picrank {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt of negative value");
    return boost::multiprecision::sqrt(n);
}

inline bool is_square(const Int& n) {
    if (n < 0) return false;
    if (n == 0) return true;
    // quick quadratic-residue rejection mod 64
    static const auto sq64 = [] {
        std::array<bool, 64> t{};
        for (int i = 0; i < 64; ++i) t[size_t(i * i % 64)] = true;
        return t;
    }();
    if (!sq64[static_cast<uint64_t>(n & 63)]) return false;
    Int r = isqrt(n);
    return r * r == n;
}

// a/b is a square in Q iff a*b is a square in Z (for a/b in lowest terms or not)
inline bool is_square(const Rat& r) {
    if (r < 0) return false;
    return is_square(Int(boost::multiprecision::numerator(r) * boost::multiprecision::denominator(r)));
}

inline Int pow_int(Int base, uint64_t e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline int64_t to_i64(const Int& n) { return static_cast<int64_t>(n); }

}  // namespace picrank
