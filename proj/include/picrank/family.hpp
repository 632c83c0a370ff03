#pragma once

#include "picrank/ff.hpp"
#include "picrank/support/linalg.hpp"
#include "picrank/support/multipoly.hpp"
#include "picrank/support/quadext.hpp"
#include "picrank/support/util.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace picrank::family {

// Coefficient vector [c1..c8] of a normalized quartic from the determinantal
// family: l1 = x, l2 = y, l3 = z, l1' = w,
// l2' = c1 x + c2 y + c3 z + c4 w, l3' = c5 x + c6 y + c7 z + c8 w.
using Coeffs = std::array<int64_t, 8>;

using IPoly = MPoly<IntRing>;

inline IPoly linear_form(const std::array<int64_t, 4>& c) {
    IntRing zr;
    IPoly f;
    for (int v = 0; v < 4; ++v) {
        Mono m{0, 0, 0, 0};
        m[v] = 1;
        mp_add_term(zr, f, m, Int(c[v]));
    }
    return f;
}

// the six linear forms l1, l2, l3, l1', l2', l3'
inline std::array<IPoly, 6> family_forms(const Coeffs& cv) {
    return {linear_form({1, 0, 0, 0}), linear_form({0, 1, 0, 0}), linear_form({0, 0, 1, 0}),
            linear_form({0, 0, 0, 1}), linear_form({cv[0], cv[1], cv[2], cv[3]}),
            linear_form({cv[4], cv[5], cv[6], cv[7]})};
}

inline std::array<std::array<int64_t, 4>, 6> family_form_coeffs(const Coeffs& cv) {
    return {{{1, 0, 0, 0},
             {0, 1, 0, 0},
             {0, 0, 1, 0},
             {0, 0, 0, 1},
             {cv[0], cv[1], cv[2], cv[3]},
             {cv[4], cv[5], cv[6], cv[7]}}};
}

// Quartic as the determinant of the symmetric matrix
//   ( 0   l1   l2   l3 )
//   ( l1  0    l3'  l2')
//   ( l2  l3'  0    l1')
//   ( l3  l2'  l1'  0  )
inline IPoly build_quartic(const Coeffs& cv) {
    IntRing zr;
    auto f = family_forms(cv);
    const IPoly zero;
    std::array<std::array<const IPoly*, 4>, 4> M = {{{&zero, &f[0], &f[1], &f[2]},
                                                     {&f[0], &zero, &f[5], &f[4]},
                                                     {&f[1], &f[5], &zero, &f[3]},
                                                     {&f[2], &f[4], &f[3], &zero}}};
    IPoly det;
    std::array<int, 4> idx{0, 1, 2, 3};
    do {
        int sign = 1;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (idx[i] > idx[j]) sign = -sign;
        IPoly term;
        mp_add_term(zr, term, Mono{0, 0, 0, 0}, Int(sign));
        bool zero_term = false;
        for (int i = 0; i < 4; ++i) {
            if (M[i][idx[i]]->empty()) {
                zero_term = true;
                break;
            }
            term = mp_mul(zr, term, *M[i][idx[i]]);
        }
        if (!zero_term) det = mp_add(zr, det, term);
    } while (std::next_permutation(idx.begin(), idx.end()));
    return det;
}

// The expanded form of the same determinant; used as an independent identity.
inline IPoly six_term_identity(const Coeffs& cv) {
    IntRing zr;
    auto f = family_forms(cv);
    auto sq = [&](const IPoly& a) { return mp_mul(zr, a, a); };
    auto prod4 = [&](const IPoly& a, const IPoly& b, const IPoly& c, const IPoly& d) {
        return mp_mul(zr, mp_mul(zr, a, b), mp_mul(zr, c, d));
    };
    IPoly r = mp_add(zr, mp_add(zr, mp_mul(zr, sq(f[0]), sq(f[3])), mp_mul(zr, sq(f[1]), sq(f[4]))),
                     mp_mul(zr, sq(f[2]), sq(f[5])));
    IPoly m;
    mp_add_term(zr, m, Mono{0, 0, 0, 0}, Int(-2));
    r = mp_add(zr, r, mp_mul(zr, m, prod4(f[0], f[1], f[3], f[4])));
    r = mp_add(zr, r, mp_mul(zr, m, prod4(f[0], f[2], f[3], f[5])));
    r = mp_add(zr, r, mp_mul(zr, m, prod4(f[1], f[2], f[4], f[5])));
    return r;
}

enum class NodeKind { PlaneTriple, ConicPair };

struct Node {
    std::array<QuadExt, 4> x;  // projective coordinates
    NodeKind kind;
    Int d = 0;           // radicand of the coordinate field (0 = rational)
    int conjugate = -1;  // index of the quadratic-conjugate node, when applicable
    int pair_axis = -1;  // which i in l_i = l_i' = 0 produced it (conic-pair only)
};

struct Trope {
    int form_index;                             // 0..5 into family_forms
    std::array<int64_t, 4> plane;               // the linear form
    std::array<std::array<Rat, 4>, 3> basis;    // rational parametrization of the plane
    MPoly<RatRing> conic;                       // quartic|plane == conic^2 in basis coords
    bool degenerate = false;                    // conic splits into two lines
    std::vector<int> nodes;                     // incident node indices
};

struct Surface {
    Coeffs cv;
    IPoly quartic;
    std::array<IPoly, 4> gradient;
    std::vector<Node> nodes;    // exactly 14
    std::vector<Trope> tropes;  // exactly 6
    mutable AlgebraContext ctx;
};

namespace detail {

inline QuadExt eval_int_poly(const IPoly& f, const std::array<QuadExt, 4>& x) {
    QuadExt acc(Rat(0));
    for (auto& [m, c] : f.t) {
        QuadExt term((Rat(c)));
        for (int v = 0; v < 4; ++v)
            for (int e = 0; e < m[v]; ++e) term = quad_mul(term, x[v]);
        acc = quad_add(acc, term);
    }
    return acc;
}

// projective equality via cross products, valid across different quadratic fields
inline bool proj_equal(AlgebraContext& ctx, const std::array<QuadExt, 4>& a,
                       const std::array<QuadExt, 4>& b) {
    std::array<AlgebraContext::MQ, 4> am, bm;
    for (int i = 0; i < 4; ++i) {
        am[i] = ctx.from_quad(a[i]);
        bm[i] = ctx.from_quad(b[i]);
    }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            auto cross = ctx.sub(ctx.mul(am[i], bm[j]), ctx.mul(am[j], bm[i]));
            if (!ctx.is_zero(cross)) return false;
        }
    return true;
}

// rank of the affine-chart Hessian at a node; must be 3 for an A1 point
inline size_t hessian_rank(const Surface& s, const std::array<QuadExt, 4>& pt, const Int& d) {
    // second partials
    IntRing zr;
    // chart: first coordinate with nonzero value
    int mu = -1;
    for (int i = 0; i < 4 && mu < 0; ++i)
        if (!pt[i].is_zero()) mu = i;
    if (mu < 0) throw DegenerateSurface("zero projective point");
    QuadRing qr{d};
    QuadExt inv_mu = quad_inv(pt[mu]);
    std::array<QuadExt, 4> scaled;
    for (int i = 0; i < 4; ++i) scaled[i] = quad_mul(pt[i], inv_mu);
    std::vector<int> vars;
    for (int i = 0; i < 4; ++i)
        if (i != mu) vars.push_back(i);
    Mat<QuadRing> H(qr, 3, 3);
    for (int a = 0; a < 3; ++a)
        for (int b = a; b < 3; ++b) {
            IPoly dd = mp_deriv(zr, mp_deriv(zr, s.quartic, vars[a]), vars[b]);
            QuadExt v = eval_int_poly(dd, scaled);
            H.at(a, b) = v;
            H.at(b, a) = v;
        }
    return mat_rank(qr, H);
}

inline std::array<QuadExt, 4> to_quad_point(const std::vector<Rat>& v) {
    return {QuadExt(v[0]), QuadExt(v[1]), QuadExt(v[2]), QuadExt(v[3])};
}

}  // namespace detail

// The 14 singular points: 8 from the sign-pattern triples, 6 from the
// pairwise conditions l_i = l_i' = 0, l_j l_j' - l_k l_k' = 0.
inline std::vector<Node> singular_points_of(Surface& s) {
    RatRing rr;
    IntRing zr;
    auto fc = family_form_coeffs(s.cv);
    std::vector<Node> nodes;

    // 8 plane-triple nodes: choose l_i or l_i' for each i in {1,2,3}
    for (int mask = 0; mask < 8; ++mask) {
        Mat<RatRing> M(rr, 3, 4);
        for (int i = 0; i < 3; ++i) {
            int fi = (mask >> i & 1) ? 3 + i : i;  // l_(i+1) or its primed partner
            for (int v = 0; v < 4; ++v) M.at(i, v) = Rat(fc[fi][v]);
        }
        auto ker = mat_kernel(rr, M);
        if (ker.size() != 1)
            throw DegenerateSurface("plane-triple linear system is singular");
        Node n;
        n.x = detail::to_quad_point(ker[0]);
        n.kind = NodeKind::PlaneTriple;
        nodes.push_back(std::move(n));
    }

    // 6 conic-pair nodes: for each axis i, restrict l_j l_j' - l_k l_k' to the
    // line l_i = l_i' = 0
    for (int i = 0; i < 3; ++i) {
        Mat<RatRing> M(rr, 2, 4);
        for (int v = 0; v < 4; ++v) {
            M.at(0, v) = Rat(fc[i][v]);
            M.at(1, v) = Rat(fc[3 + i][v]);
        }
        auto ker = mat_kernel(rr, M);
        if (ker.size() != 2) throw DegenerateSurface("pair line is degenerate");
        int j = (i + 1) % 3, k = (i + 2) % 3;
        IPoly g = mp_sub(zr, mp_mul(zr, family_forms(s.cv)[j], family_forms(s.cv)[3 + j]),
                         mp_mul(zr, family_forms(s.cv)[k], family_forms(s.cv)[3 + k]));
        auto eval_g = [&](const std::vector<Rat>& pt) {
            std::array<QuadExt, 4> q = detail::to_quad_point(pt);
            return detail::eval_int_poly(g, q).a;
        };
        std::vector<Rat> AB(4);
        Rat alpha = eval_g(ker[0]);
        Rat gamma = eval_g(ker[1]);
        for (int v = 0; v < 4; ++v) AB[v] = ker[0][v] + ker[1][v];
        Rat beta = eval_g(AB) - alpha - gamma;

        auto push_node = [&](const QuadExt& sc, const QuadExt& tc, const Int& d) {
            Node n;
            for (int v = 0; v < 4; ++v)
                n.x[v] = quad_add(quad_mul(sc, QuadExt(ker[0][v])), quad_mul(tc, QuadExt(ker[1][v])));
            n.kind = NodeKind::ConicPair;
            n.d = d;
            n.pair_axis = i;
            nodes.push_back(std::move(n));
        };

        if (alpha == 0 && beta == 0 && gamma == 0)
            throw DegenerateSurface("singular locus contains a line");
        if (alpha == 0) {
            if (beta == 0) throw DegenerateSurface("conic-pair nodes collide");
            push_node(QuadExt(Rat(1)), QuadExt(Rat(0)), 0);
            push_node(QuadExt(-gamma), QuadExt(beta), 0);
        } else {
            Rat D = beta * beta - 4 * alpha * gamma;
            if (D == 0) throw DegenerateSurface("conic-pair nodes collide");
            QuadExt sqrtD = quad_sqrt_of_rat(D);
            Int d = sqrtD.d;
            QuadExt two_alpha((Rat(2) * alpha));
            push_node(quad_sub(QuadExt(-beta), sqrtD), two_alpha, d);
            push_node(quad_add(QuadExt(-beta), sqrtD), two_alpha, d);
        }
        if (nodes[nodes.size() - 1].d != 0) {
            nodes[nodes.size() - 1].conjugate = int(nodes.size() - 2);
            nodes[nodes.size() - 2].conjugate = int(nodes.size() - 1);
        }
    }

    // verify: gradient vanishes, A1 Hessian, pairwise distinct
    for (auto& n : nodes) {
        for (int v = 0; v < 4; ++v)
            if (!detail::eval_int_poly(s.gradient[v], n.x).is_zero())
                throw DegenerateSurface("candidate point is not singular");
        if (detail::hessian_rank(s, n.x, n.d) != 3)
            throw DegenerateSurface("node is not an ordinary double point");
    }
    for (size_t a = 0; a < nodes.size(); ++a)
        for (size_t b = a + 1; b < nodes.size(); ++b)
            if (detail::proj_equal(s.ctx, nodes[a].x, nodes[b].x))
                throw DegenerateSurface("singular points collide");
    if (nodes.size() != 14) throw DegenerateSurface("wrong singular point count");
    return nodes;
}

// The six tropes: restriction of the quartic to each plane l = 0 is a
// perfect square of a conic.
inline std::vector<Trope> tropes_of(Surface& s) {
    RatRing rr;
    auto fc = family_form_coeffs(s.cv);
    std::vector<Trope> out;
    for (int t = 0; t < 6; ++t) {
        Trope tr;
        tr.form_index = t;
        tr.plane = fc[t];
        Mat<RatRing> M(rr, 1, 4);
        for (int v = 0; v < 4; ++v) M.at(0, v) = Rat(fc[t][v]);
        auto ker = mat_kernel(rr, M);
        if (ker.size() != 3) throw DegenerateSurface("trope plane is degenerate");
        std::vector<std::array<Rat, 4>> cols(3);
        for (int b = 0; b < 3; ++b)
            for (int v = 0; v < 4; ++v) {
                cols[b][v] = ker[b][v];
                tr.basis[b][v] = ker[b][v];
            }
        // restrict the quartic
        MPoly<RatRing> restr;
        for (auto& [m, c] : s.quartic.t) restr.t.emplace(m, Rat(c));
        restr = mp_subst_linear(rr, restr, cols);
        auto conic = mp_sqrt(rr, restr);
        if (!conic) throw NotAPerfectSquare("trope restriction is not a square");
        tr.conic = *conic;
        // degeneracy: det of the symmetric 3x3 matrix of the conic
        auto coeff = [&](int a, int b) {
            Mono m{0, 0, 0, 0};
            ++m[a];
            ++m[b];
            auto it = tr.conic.t.find(m);
            Rat c = it == tr.conic.t.end() ? Rat(0) : it->second;
            return a == b ? c : c / 2;
        };
        Mat<RatRing> C(rr, 3, 3);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) C.at(a, b) = coeff(a, b);
        tr.degenerate = mat_det(rr, C) == 0;
        // incident nodes
        IPoly form = linear_form(fc[t]);
        for (size_t ni = 0; ni < s.nodes.size(); ++ni)
            if (detail::eval_int_poly(form, s.nodes[ni].x).is_zero()) tr.nodes.push_back(int(ni));
        if (tr.nodes.size() != 6) throw DegenerateSurface("trope does not contain 6 nodes");
        out.push_back(std::move(tr));
    }
    return out;
}

inline Surface analyze_surface(const Coeffs& cv) {
    Surface s;
    s.cv = cv;
    s.quartic = build_quartic(cv);
    IntRing zr;
    for (int v = 0; v < 4; ++v) s.gradient[v] = mp_deriv(zr, s.quartic, v);
    s.nodes = singular_points_of(s);
    s.tropes = tropes_of(s);
    return s;
}

// convenience wrappers matching the library surface
inline std::vector<Node> singular_points(const Coeffs& cv) {
    return analyze_surface(cv).nodes;
}
inline std::vector<Trope> tropes(const Coeffs& cv) { return analyze_surface(cv).tropes; }

// ---------------------------------------------------------------------------
// reduction mod p

struct RNode {
    std::array<ff::Elt, 4> x;  // coordinates over F_p or F_{p^2}
    bool rational;             // defined over F_p
    int orbit_size;            // 1 or 2
    int conjugate = -1;
    NodeKind kind;
};

struct RTrope {
    std::array<uint32_t, 4> plane;
    bool degenerate;
};

struct ReducedSurface {
    uint32_t p = 0;
    IPoly quartic;              // coefficients reduced to [0, p)
    std::vector<RNode> nodes;   // 14 nodes
    std::vector<int> cycle_type;  // orbit sizes, descending 2s then 1s
    std::vector<RTrope> tropes;
    Coeffs cv;
};

struct BadReduction {
    uint32_t p = 0;
    std::string reason;
};

inline IPoly reduce_poly(const IPoly& f, uint32_t p) {
    IntRing zr;
    IPoly r;
    for (auto& [m, c] : f.t) {
        Int v = c % p;
        if (v < 0) v += p;
        if (v != 0) r.t.emplace(m, v);
    }
    return r;
}

inline std::variant<ReducedSurface, BadReduction> reduce_mod_p(const Surface& s, uint32_t p,
                                                               const ff::Field& Fp,
                                                               const ff::Field& Fp2) {
    using ff::Elt;
    if (p < 5) return BadReduction{p, "characteristic below 5"};
    ff::FqRing rp{&Fp}, rp2{&Fp2};
    auto fc = family_form_coeffs(s.cv);
    ReducedSurface out;
    out.p = p;
    out.cv = s.cv;
    out.quartic = reduce_poly(s.quartic, p);

    auto embed2 = [&](const Elt& a) {  // F_p value into F_{p^2}
        Elt r;
        r.c[0] = a.c[0];
        return r;
    };

    // 8 plane-triple nodes
    for (int mask = 0; mask < 8; ++mask) {
        Mat<ff::FqRing> M(rp, 3, 4);
        for (int i = 0; i < 3; ++i) {
            int fi = (mask >> i & 1) ? 3 + i : i;
            for (int v = 0; v < 4; ++v) M.at(i, v) = Fp.from_int(fc[fi][v]);
        }
        auto ker = mat_kernel(rp, M);
        if (ker.size() != 1) return BadReduction{p, "degenerate linear system"};
        RNode n;
        for (int v = 0; v < 4; ++v) n.x[v] = embed2(ker[0][v]);
        n.rational = true;
        n.orbit_size = 1;
        n.kind = NodeKind::PlaneTriple;
        out.nodes.push_back(n);
    }

    // 6 conic-pair nodes
    IntRing zr;
    auto forms = family_forms(s.cv);
    for (int i = 0; i < 3; ++i) {
        Mat<ff::FqRing> M(rp, 2, 4);
        for (int v = 0; v < 4; ++v) {
            M.at(0, v) = Fp.from_int(fc[i][v]);
            M.at(1, v) = Fp.from_int(fc[3 + i][v]);
        }
        auto ker = mat_kernel(rp, M);
        if (ker.size() != 2) return BadReduction{p, "degenerate pair line"};
        int j = (i + 1) % 3, k = (i + 2) % 3;
        IPoly g = mp_sub(zr, mp_mul(zr, forms[j], forms[3 + j]),
                         mp_mul(zr, forms[k], forms[3 + k]));
        auto eval_g = [&](const std::array<Elt, 4>& pt) {
            Elt acc = Fp.zero();
            for (auto& [m, c] : g.t) {
                Elt term = Fp.from_int(int64_t(c % p));
                for (int v = 0; v < 4; ++v)
                    for (int e = 0; e < m[v]; ++e) term = Fp.mul(term, pt[v]);
                acc = Fp.add(acc, term);
            }
            return acc;
        };
        std::array<Elt, 4> A, B, AB;
        for (int v = 0; v < 4; ++v) {
            A[v] = ker[0][v];
            B[v] = ker[1][v];
            AB[v] = Fp.add(A[v], B[v]);
        }
        Elt alpha = eval_g(A), gamma = eval_g(B);
        Elt beta = Fp.sub(Fp.sub(eval_g(AB), alpha), gamma);

        auto push2 = [&](const Elt& sc, const Elt& tc, bool rational) {
            RNode n;
            for (int v = 0; v < 4; ++v)
                n.x[v] = Fp2.add(Fp2.mul(sc, embed2(A[v])), Fp2.mul(tc, embed2(B[v])));
            n.rational = rational;
            n.orbit_size = rational ? 1 : 2;
            n.kind = NodeKind::ConicPair;
            out.nodes.push_back(n);
        };

        if (Fp.is_zero(alpha) && Fp.is_zero(beta) && Fp.is_zero(gamma))
            return BadReduction{p, "singular line mod p"};
        if (Fp.is_zero(alpha)) {
            if (Fp.is_zero(beta)) return BadReduction{p, "node collision mod p"};
            push2(embed2(Fp.one()), Fp2.zero(), true);
            push2(embed2(Fp.neg(gamma)), embed2(beta), true);
        } else {
            Elt D = Fp.sub(Fp.mul(beta, beta),
                           Fp.mul(Fp.from_int(4), Fp.mul(alpha, gamma)));
            int chi = Fp.quadratic_character(D);
            if (chi == 0) return BadReduction{p, "node collision mod p"};
            Elt two_alpha = Fp.mul(Fp.from_int(2), alpha);
            if (chi == 1) {
                ff::FqRing rr1{&Fp};
                auto sD = rr1.sqrt(D);
                push2(embed2(Fp.sub(Fp.neg(beta), *sD)), embed2(two_alpha), true);
                push2(embed2(Fp.add(Fp.neg(beta), *sD)), embed2(two_alpha), true);
            } else {
                auto sD = rp2.sqrt(embed2(D));
                if (!sD) return BadReduction{p, "internal: missing square root"};
                push2(Fp2.sub(Fp2.neg(embed2(beta)), *sD), embed2(two_alpha), false);
                push2(Fp2.add(Fp2.neg(embed2(beta)), *sD), embed2(two_alpha), false);
                out.nodes[out.nodes.size() - 1].conjugate = int(out.nodes.size() - 2);
                out.nodes[out.nodes.size() - 2].conjugate = int(out.nodes.size() - 1);
            }
        }
    }

    // pairwise distinct over F_{p^2} (projective comparison)
    auto normalize = [&](std::array<Elt, 4> v) {
        for (int i = 0; i < 4; ++i)
            if (!Fp2.is_zero(v[i])) {
                Elt inv = Fp2.inv(v[i]);
                for (int j = 0; j < 4; ++j) v[j] = Fp2.mul(v[j], inv);
                return v;
            }
        return v;
    };
    std::vector<std::array<Elt, 4>> norm;
    for (auto& n : out.nodes) norm.push_back(normalize(n.x));
    for (size_t a = 0; a < norm.size(); ++a)
        for (size_t b = a + 1; b < norm.size(); ++b)
            if (norm[a] == norm[b]) return BadReduction{p, "node collision mod p"};

    // A1 condition mod p for every node
    for (auto& n : out.nodes) {
        int mu = -1;
        for (int i = 0; i < 4 && mu < 0; ++i)
            if (!Fp2.is_zero(n.x[i])) mu = i;
        Elt inv = Fp2.inv(n.x[mu]);
        std::array<Elt, 4> scaled;
        for (int i = 0; i < 4; ++i) scaled[i] = Fp2.mul(n.x[i], inv);
        std::vector<int> vars;
        for (int i = 0; i < 4; ++i)
            if (i != mu) vars.push_back(i);
        Mat<ff::FqRing> H(rp2, 3, 3);
        for (int a = 0; a < 3; ++a)
            for (int b = a; b < 3; ++b) {
                IPoly dd = mp_deriv(zr, mp_deriv(zr, s.quartic, vars[a]), vars[b]);
                Elt acc = Fp2.zero();
                for (auto& [m, c] : dd.t) {
                    Elt term = embed2(Fp.from_int(int64_t(c % p)));
                    for (int v = 0; v < 4; ++v)
                        for (int e = 0; e < m[v]; ++e) term = Fp2.mul(term, scaled[v]);
                    acc = Fp2.add(acc, term);
                }
                H.at(a, b) = acc;
                H.at(b, a) = acc;
            }
        if (mat_rank(rp2, H) != 3) return BadReduction{p, "node is not A1 mod p"};
    }

    // cycle type: orbit sizes
    int twos = 0;
    for (auto& n : out.nodes)
        if (n.orbit_size == 2) ++twos;
    twos /= 2;  // each inert pair contributes one orbit of size 2
    for (int i = 0; i < twos; ++i) out.cycle_type.push_back(2);
    for (int i = 0; i < 14 - 2 * twos; ++i) out.cycle_type.push_back(1);

    // tropes mod p
    ff::FqRing fr{&Fp};
    for (int t = 0; t < 6; ++t) {
        RTrope rt;
        for (int v = 0; v < 4; ++v) {
            int64_t r = fc[t][v] % int64_t(p);
            if (r < 0) r += p;
            rt.plane[v] = uint32_t(r);
        }
        Mat<ff::FqRing> M(rp, 1, 4);
        for (int v = 0; v < 4; ++v) M.at(0, v) = Fp.from_int(fc[t][v]);
        auto ker = mat_kernel(rp, M);
        if (ker.size() != 3) return BadReduction{p, "degenerate trope plane mod p"};
        std::vector<std::array<Elt, 4>> cols(3);
        for (int b = 0; b < 3; ++b)
            for (int v = 0; v < 4; ++v) cols[b][v] = ker[b][v];
        MPoly<ff::FqRing> restr;
        for (auto& [m, c] : out.quartic.t)
            restr.t.emplace(m, Fp.from_int(int64_t(c % p)));
        restr = mp_subst_linear(fr, restr, cols);
        auto conic = mp_sqrt(fr, restr);
        if (!conic) return BadReduction{p, "trope restriction not a square mod p"};
        auto coeff = [&](int a, int b) {
            Mono m{0, 0, 0, 0};
            ++m[a];
            ++m[b];
            auto it = conic->t.find(m);
            Elt c = it == conic->t.end() ? Fp.zero() : it->second;
            return a == b ? c : Fp.div(c, Fp.from_int(2));
        };
        Mat<ff::FqRing> C(rp, 3, 3);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) C.at(a, b) = coeff(a, b);
        rt.degenerate = Fp.is_zero(mat_det(rp, C));
        out.tropes.push_back(rt);
    }

    return out;
}

inline std::variant<ReducedSurface, BadReduction> reduce_mod_p(const Surface& s, uint32_t p) {
    if (p < 5 || !ff::is_prime_u32(p)) return BadReduction{p, "characteristic below 5"};
    ff::Field Fp(p, 1), Fp2(p, 2);
    return reduce_mod_p(s, p, Fp, Fp2);
}

// Random sample of admissible coefficient vectors: c1 = c2 = c3 = 1 and
// c4..c8 uniform in [-bound, bound]; vectors whose singular locus degenerates
// are rejected and redrawn.
inline std::vector<Coeffs> random_sample(size_t n, uint64_t seed, int64_t bound) {
    if (bound < 1) throw std::invalid_argument("random_sample: bound must be >= 1");
    SampleRng rng(seed);
    std::vector<Coeffs> out;
    while (out.size() < n) {
        Coeffs cv{1, 1, 1, 0, 0, 0, 0, 0};
        for (int i = 3; i < 8; ++i) cv[i] = rng.uniform_int(-bound, bound);
        try {
            analyze_surface(cv);
        } catch (const Error&) {
            continue;
        }
        out.push_back(cv);
    }
    return out;
}

}  // namespace picrank::family
