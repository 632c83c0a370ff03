#include <catch2/catch_amalgamated.hpp>

#include "picrank/support/bigint.hpp"
#include "picrank/support/factor.hpp"
#include "picrank/support/linalg.hpp"
#include "picrank/support/multipoly.hpp"
#include "picrank/support/poly.hpp"
#include "picrank/support/quadext.hpp"
#include "picrank/support/util.hpp"

using namespace picrank;

TEST_CASE("integer square detection") {
    CHECK(is_square(Int(0)));
    CHECK(is_square(Int(1)));
    CHECK(is_square(Int(144)));
    CHECK_FALSE(is_square(Int(145)));
    CHECK_FALSE(is_square(Int(-4)));
    Int big = pow_int(Int("123456789123456789"), 2);
    CHECK(is_square(big));
    CHECK_FALSE(is_square(Int(big + 1)));
    CHECK(is_square(Rat(49, 25)));
    CHECK_FALSE(is_square(Rat(49, 26)));
}

TEST_CASE("factor and squarefree class") {
    auto f = factor(Int(3960));  // 2^3 * 3^2 * 5 * 11
    CHECK(f[Int(2)] == 3);
    CHECK(f[Int(3)] == 2);
    CHECK(f[Int(5)] == 1);
    CHECK(f[Int(11)] == 1);

    CHECK(squarefree_class(Int(1)) == 1);
    CHECK(squarefree_class(Int(4)) == 1);
    CHECK(squarefree_class(Int(-4)) == -1);
    CHECK(squarefree_class(Int(45)) == 5);
    CHECK(squarefree_class(Int(-18)) == -2);
    CHECK(squarefree_class(Rat(5, 4)) == 5);
    CHECK(squarefree_class(Rat(2, 3)) == 6);

    // large square times small class handled without full factorization
    Int p = Int("1000000000000066600000000000001");  // large prime-ish square part
    CHECK(squarefree_class(Int(-2) * p * p) == -2);

    CHECK(same_square_class(Rat(-1), Rat(-49)));
    CHECK_FALSE(same_square_class(Rat(-1), Rat(-2)));
}

TEST_CASE("deterministic rng") {
    SampleRng a(42), b(42), c(43);
    std::vector<int64_t> va, vb, vc;
    for (int i = 0; i < 50; ++i) {
        va.push_back(a.uniform_int(-20, 20));
        vb.push_back(b.uniform_int(-20, 20));
        vc.push_back(c.uniform_int(-20, 20));
    }
    CHECK(va == vb);
    CHECK(va != vc);
    for (int64_t v : va) {
        CHECK(v >= -20);
        CHECK(v <= 20);
    }
}

TEST_CASE("univariate division round trip") {
    IntRing zr;
    PolyOf<IntRing> a{3, -2, 0, 7, 1}, b{1, 2, 1};
    auto [q, r] = poly_divrem_monic(zr, a, b);
    auto back = poly_add(zr, poly_mul(zr, q, b), r);
    CHECK(back == poly_trim(zr, a));
    CHECK(poly_deg(zr, r) < poly_deg(zr, b));
}

TEST_CASE("quadratic field arithmetic") {
    // sqrt(45) = 3 sqrt(5)
    QuadExt s = quad_sqrt_of_rat(Rat(45));
    CHECK(s.a == 0);
    CHECK(s.b == 3);
    CHECK(s.d == 5);
    QuadExt t = quad_sqrt_of_rat(Rat(49, 4));
    CHECK(t.is_rational());
    CHECK(t.a == Rat(7, 2));

    QuadExt x(Rat(2), Rat(1), Int(5));  // 2 + sqrt 5
    QuadExt y = quad_inv(x);
    CHECK(quad_mul(x, y) == QuadExt(Rat(1)));
    CHECK(quad_norm(x) == Rat(-1));

    // sqrt inside the field: (1 + sqrt 5)^2 = 6 + 2 sqrt 5
    QuadExt sq(Rat(6), Rat(2), Int(5));
    auto rt = quad_sqrt_in_field(sq);
    REQUIRE(rt.has_value());
    CHECK(quad_mul(*rt, *rt) == sq);

    QuadExt nonsq(Rat(1), Rat(1), Int(5));
    auto no = quad_sqrt_in_field(nonsq);
    if (no) CHECK(quad_mul(*no, *no) == nonsq);
}

TEST_CASE("compositum zero tests") {
    AlgebraContext ctx;
    auto r2 = ctx.from_quad(QuadExt(Rat(0), Rat(1), Int(2)));
    auto r3 = ctx.from_quad(QuadExt(Rat(0), Rat(1), Int(3)));
    auto r6 = ctx.from_quad(QuadExt(Rat(0), Rat(1), Int(6)));
    // sqrt2 * sqrt3 - sqrt6 == 0 under the canonical embedding
    auto prod = ctx.mul(r2, r3);
    CHECK(ctx.is_zero(ctx.sub(prod, r6)));
    // sqrt2 + sqrt3 != 0, sqrt2*sqrt2 == 2
    CHECK_FALSE(ctx.is_zero(ctx.add(r2, r3)));
    CHECK(ctx.is_zero(ctx.sub(ctx.mul(r2, r2), ctx.from_rat(Rat(2)))));
    // independent radical stays independent
    auto r5 = ctx.from_quad(QuadExt(Rat(0), Rat(1), Int(-5)));
    CHECK_FALSE(ctx.is_zero(ctx.sub(r5, r2)));
}

TEST_CASE("exact linear algebra") {
    RatRing qr;
    Mat<RatRing> m(qr, 3, 3);
    int vals[3][3] = {{2, 1, 0}, {0, 1, 1}, {2, 2, 1}};  // singular: row3 = row1 + row2
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = Rat(vals[i][j]);
    CHECK(mat_rank(qr, m) == 2);
    CHECK(mat_det(qr, m) == 0);
    auto ker = mat_kernel(qr, m);
    REQUIRE(ker.size() == 1);
    // verify M * k == 0
    for (int i = 0; i < 3; ++i) {
        Rat acc = 0;
        for (int j = 0; j < 3; ++j) acc += m.at(i, j) * ker[0][j];
        CHECK(acc == 0);
    }

    Mat<RatRing> n(qr, 2, 2);
    n.at(0, 0) = 3;
    n.at(0, 1) = 1;
    n.at(1, 0) = 1;
    n.at(1, 1) = 2;
    CHECK(mat_det(qr, n) == 5);
    auto sol = mat_solve(qr, n, {Rat(5), Rat(5)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == 1);
    CHECK((*sol)[1] == 2);
}

TEST_CASE("multivariate polynomials and square roots") {
    RatRing qr;
    // (x + 2y + 3w)^2 recovered by mp_sqrt
    MPoly<RatRing> lin;
    mp_add_term(qr, lin, Mono{1, 0, 0, 0}, Rat(1));
    mp_add_term(qr, lin, Mono{0, 1, 0, 0}, Rat(2));
    mp_add_term(qr, lin, Mono{0, 0, 0, 1}, Rat(3));
    auto sq = mp_mul(qr, lin, lin);
    auto rt = mp_sqrt(qr, sq);
    REQUIRE(rt.has_value());
    bool match_pos = mp_sub(qr, *rt, lin).empty();
    bool match_neg = mp_add(qr, *rt, lin).empty();
    CHECK((match_pos || match_neg));

    // non-square detected
    auto not_sq = mp_add(qr, sq, [&] {
        MPoly<RatRing> one;
        mp_add_term(qr, one, Mono{0, 1, 0, 0}, Rat(1));
        return one;
    }());
    CHECK_FALSE(mp_sqrt(qr, not_sq).has_value());

    // substitution: f(x,y) = x*y at x->s+t, y->s-t gives s^2 - t^2
    MPoly<RatRing> xy;
    mp_add_term(qr, xy, Mono{1, 1, 0, 0}, Rat(1));
    std::vector<std::array<Rat, 4>> cols(2);
    cols[0] = {Rat(1), Rat(1), Rat(0), Rat(0)};   // s column
    cols[1] = {Rat(1), Rat(-1), Rat(0), Rat(0)};  // t column
    auto sub = mp_subst_linear(qr, xy, cols);
    MPoly<RatRing> expect;
    mp_add_term(qr, expect, Mono{2, 0, 0, 0}, Rat(1));
    mp_add_term(qr, expect, Mono{0, 2, 0, 0}, Rat(-1));
    CHECK(mp_sub(qr, sub, expect).empty());
}
