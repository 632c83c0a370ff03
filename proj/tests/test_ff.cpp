#include <catch2/catch_amalgamated.hpp>

#include "picrank/ff.hpp"

#include <random>
#include <set>

using namespace picrank;
using namespace picrank::ff;

namespace {

// Oracle: least monic irreducible quadratic/cubic over F_p found by exhaustive
// root/factor search, coefficients compared low-degree-first.
std::vector<uint32_t> least_irreducible_bruteforce(uint32_t p, uint32_t k) {
    auto has_root = [&](const std::vector<uint32_t>& f) {
        for (uint32_t x = 0; x < p; ++x) {
            uint64_t acc = 0;
            for (size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
            if (acc == 0) return true;
        }
        return false;
    };
    std::vector<uint32_t> c(k, 0);
    while (true) {
        std::vector<uint32_t> f(c.begin(), c.end());
        f.push_back(1);
        bool irreducible;
        if (k <= 3) {
            irreducible = !has_root(f);  // degree 2,3: irreducible iff rootless
        } else {
            irreducible = false;  // not needed in this oracle
        }
        if (irreducible) return f;
        uint32_t i = k;
        while (i-- > 0) {
            if (++c[i] < p) break;
            c[i] = 0;
        }
    }
}

int64_t brute_root_count(const Field& F, const std::vector<Elt>& f) {
    bool all_zero = true;
    for (auto& c : f)
        if (!F.is_zero(c)) all_zero = false;
    if (all_zero) return int64_t(F.q()) + 1;
    int64_t n = 0;
    for (uint64_t i = 0; i < F.q(); ++i) {
        Elt x = F.from_index(i);
        Elt acc = F.zero();
        for (size_t j = f.size(); j-- > 0;) acc = F.add(F.mul(acc, x), f[j]);
        if (F.is_zero(acc)) ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("prime field construction") {
    Field F(7, 1);
    CHECK(F.q() == 7);
    CHECK(F.modulus() == std::vector<uint32_t>{0, 1});
    CHECK_THROWS_AS(Field(6, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field(7, 5), std::invalid_argument);
}

TEST_CASE("modulus is the least irreducible, low-degree-first") {
    for (uint32_t p : {5u, 7u, 11u, 13u}) {
        Field F2(p, 2);
        CHECK(F2.modulus() == least_irreducible_bruteforce(p, 2));
        Field F3(p, 3);
        CHECK(F3.modulus() == least_irreducible_bruteforce(p, 3));
    }
}

TEST_CASE("degree three field has multiplicative order q-1") {
    Field F(5, 3);
    CHECK(F.q() == 125);
    for (uint64_t i = 1; i < F.q(); ++i) {
        Elt x = F.from_index(i);
        CHECK(F.pow(x, 124) == F.one());
    }
}

TEST_CASE("prime field arithmetic basics") {
    Field F(7, 1);
    CHECK(F.mul(F.from_int(3), F.from_int(5)) == F.one());
    CHECK(F.inv(F.from_int(3)) == F.from_int(5));
    CHECK(F.arith(F.from_int(3), F.from_int(5), ArithOp::Mul) == F.one());
    CHECK_THROWS(F.inv(F.zero()));
}

TEST_CASE("extension multiplication matches polynomial reduction") {
    Field F(7, 2);
    // t*t must equal T^2 reduced by the modulus: T^2 = -(f0 + f1 T)
    Elt tt = F.mul(F.gen(), F.gen());
    const auto& m = F.modulus();
    Elt expect = F.from_coeffs({-(int64_t)m[0], -(int64_t)m[1]});
    CHECK(tt == expect);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(7);
    for (auto [p, k] : std::vector<std::pair<uint32_t, uint32_t>>{
             {5, 1}, {5, 2}, {5, 3}, {5, 4}, {7, 2}, {11, 2}, {13, 3}, {23, 4}, {101, 2}}) {
        Field F(p, k, false);
        for (int trial = 0; trial < 40; ++trial) {
            Elt a = F.from_index(rng() % F.q());
            Elt b = F.from_index(rng() % F.q());
            Elt c = F.from_index(rng() % F.q());
            CHECK(F.add(a, b) == F.add(b, a));
            CHECK(F.mul(a, b) == F.mul(b, a));
            CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            CHECK(F.add(a, F.neg(a)) == F.zero());
            if (!F.is_zero(a)) CHECK(F.mul(a, F.inv(a)) == F.one());
        }
    }
}

TEST_CASE("frobenius is the identity on the prime field") {
    Field F(11, 1);
    for (uint32_t i = 0; i < 11; ++i) CHECK(F.frobenius(F.from_int(i)) == F.from_int(i));
}

TEST_CASE("frobenius has exact order k and fixes the prime subfield") {
    Field F(5, 2);
    Elt t = F.gen();
    CHECK_FALSE(F.frobenius(t) == t);
    CHECK(F.frobenius(F.frobenius(t)) == t);
    size_t fixed = 0;
    for (uint64_t i = 0; i < F.q(); ++i) {
        Elt x = F.from_index(i);
        if (F.frobenius(x) == x) ++fixed;
    }
    CHECK(fixed == 5);  // exactly the prime subfield

    Field G(5, 3);
    for (uint64_t i = 0; i < G.q(); ++i) {
        Elt x = G.from_index(i);
        CHECK(G.frobenius_iter(x, 3) == x);
    }
}

TEST_CASE("frobenius is a ring homomorphism") {
    std::mt19937_64 rng(99);
    Field F(13, 3, false);
    for (int trial = 0; trial < 60; ++trial) {
        Elt a = F.from_index(rng() % F.q());
        Elt b = F.from_index(rng() % F.q());
        CHECK(F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b)));
        CHECK(F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b)));
    }
}

TEST_CASE("quadratic character on prime fields") {
    Field F(7, 1);
    CHECK(F.quadratic_character(F.from_int(2)) == 1);
    CHECK(F.quadratic_character(F.from_int(3)) == -1);
    CHECK(F.quadratic_character(F.zero()) == 0);
}

TEST_CASE("character equals euler criterion exhaustively") {
    for (auto [p, k] : std::vector<std::pair<uint32_t, uint32_t>>{{5, 2}, {7, 2}, {11, 2}, {5, 3}}) {
        Field F(p, k);
        int64_t plus = 0;
        for (uint64_t i = 0; i < F.q(); ++i) {
            Elt x = F.from_index(i);
            int chi = F.quadratic_character(x);
            CHECK(chi == F.chi_euler(x));
            if (F.has_tables()) CHECK(chi == F.chi_table()[i]);
            if (chi == 1) ++plus;
        }
        CHECK(plus == int64_t((F.q() - 1) / 2));
    }
}

TEST_CASE("character is multiplicative") {
    std::mt19937_64 rng(3);
    Field F(11, 2);
    for (int trial = 0; trial < 80; ++trial) {
        Elt a = F.from_index(1 + rng() % (F.q() - 1));
        Elt b = F.from_index(1 + rng() % (F.q() - 1));
        CHECK(F.quadratic_character(F.mul(a, b)) ==
              F.quadratic_character(a) * F.quadratic_character(b));
        CHECK(F.quadratic_character(F.mul(a, a)) == 1);
    }
}

TEST_CASE("square root table") {
    Field F(7, 2);
    REQUIRE(F.has_tables());
    for (uint64_t i = 0; i < F.q(); ++i) {
        Elt x = F.from_index(i);
        Elt r;
        if (F.sqrt_elt(x, r)) {
            CHECK(F.mul(r, r) == x);
        } else {
            CHECK(F.quadratic_character(x) == -1);
        }
    }
}

TEST_CASE("quartic root counting") {
    Field F5(5, 1);
    // X^4 - 1 over F_5: every nonzero residue is a root
    CHECK(quartic_root_count(F5, {F5.from_int(-1), F5.zero(), F5.zero(), F5.zero(), F5.one()}) == 4);
    Field F7(7, 1);
    // X^2 + 1 over F_7: -1 is a nonresidue
    CHECK(quartic_root_count(F7, {F7.one(), F7.zero(), F7.one()}) == 0);
    // zero polynomial: whole line
    CHECK(quartic_root_count(F7, {F7.zero(), F7.zero()}) == 8);
}

TEST_CASE("quartic root count matches exhaustive evaluation") {
    std::mt19937_64 rng(17);
    for (auto [p, k] : std::vector<std::pair<uint32_t, uint32_t>>{{5, 1}, {7, 1}, {11, 1}, {5, 2}, {7, 2}, {11, 2}, {5, 3}}) {
        Field F(p, k);
        if (F.q() > 126) continue;  // keep the oracle exhaustive but quick
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<Elt> f;
            for (int i = 0; i < 5; ++i) f.push_back(F.from_index(rng() % F.q()));
            CHECK(quartic_root_count(F, f) == brute_root_count(F, f));
        }
    }
    // and specifically over F_49 as a nontrivial extension
    Field F(7, 2);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Elt> f;
        for (int i = 0; i < 5; ++i) f.push_back(F.from_index(rng() % F.q()));
        CHECK(quartic_root_count(F, f) == brute_root_count(F, f));
    }
}
