#include "doctest.h"

#include <random>

#include "linset/enumeration.hpp"
#include "linset/linpoly.hpp"
#include "linset/sampling.hpp"

using namespace linset;

TEST_CASE("evaluation basics") {
    FieldCtx f16(2, 1, 4);
    LinPoly id = LinPoly::identity(f16);
    for (std::uint32_t c = 0; c < f16.order(); ++c)
        CHECK(id.eval(f16.from_code(c)) == f16.from_code(c));

    LinPoly xq_x = LinPoly::q_minus_x(f16);
    for (std::uint32_t c = 0; c < f16.order(); ++c) {
        FieldElem x = f16.from_code(c);
        CHECK(xq_x.eval(x).is_zero() == in_subfield(x));
    }
}

TEST_CASE("trace polynomial evaluates to the trace") {
    FieldCtx f9(3, 1, 2);
    LinPoly tr = LinPoly::trace_poly(f9);
    for (std::uint32_t c = 0; c < f9.order(); ++c)
        CHECK(tr.eval(f9.from_code(c)) == trace(f9.from_code(c)));
}

TEST_CASE("evaluation is F_q-linear") {
    FieldCtx f(3, 1, 2);
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 50; ++iter) {
        LinPoly l = random_linpoly(f, rng);
        for (std::uint32_t a = 0; a < f.order(); ++a)
            for (std::uint32_t b = 0; b < f.order(); ++b)
                CHECK(l.eval(f.from_code(a) + f.from_code(b)) ==
                      l.eval(f.from_code(a)) + l.eval(f.from_code(b)));
        for (std::uint32_t lam : f.subfield_codes())
            for (std::uint32_t a = 0; a < f.order(); ++a)
                CHECK(l.eval(f.from_code(lam) * f.from_code(a)) ==
                      f.from_code(lam) * l.eval(f.from_code(a)));
    }
}

TEST_CASE("kernels") {
    FieldCtx f8(2, 1, 3);
    CHECK(kernel(LinPoly::zero(f8)).dim() == 3);
    Subspace fq = kernel(LinPoly::q_minus_x(f8));
    CHECK(fq.dim() == 1);
    CHECK(fq.contains({f8.one()}));
}

TEST_CASE("rank-nullity on random polynomials over F_64") {
    FieldCtx f(2, 1, 6);
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 200; ++iter) {
        LinPoly l = random_linpoly(f, rng);
        Subspace ker = kernel(l);
        // image span over F_q from the images of a full basis
        std::vector<Vec> images;
        for (std::uint32_t b : f.qbasis_codes()) images.push_back({l.eval(f.from_code(b))});
        Subspace image = Subspace::span(f, 1, images);
        CHECK(ker.dim() + image.dim() == f.n());
    }
}

TEST_CASE("subspace polynomials") {
    FieldCtx f4(2, 1, 2);
    Subspace zero = Subspace::span(f4, 1, {});
    CHECK(subspace_poly(zero) == LinPoly::identity(f4));

    Subspace fq = kernel(LinPoly::q_minus_x(f4));
    CHECK(subspace_poly(fq) == LinPoly::q_minus_x(f4));
}

TEST_CASE("kernel(subspace_poly(V)) = V for every subspace of F_8 and F_9") {
    for (auto [p, n] : {std::pair{2, 3}, std::pair{3, 2}}) {
        FieldCtx f(p, 1, n);
        for (int k = 0; k <= n; ++k) {
            for (const Subspace& v : all_subspaces(f, k)) {
                LinPoly sp = subspace_poly(v);
                CHECK(sp.sym_degree() == k);
                CHECK(sp.coeff(k) == f.one());  // monic
                CHECK(kernel(sp) == v);
            }
        }
    }
}

TEST_CASE("subspace polynomial of a random 2-dim space in F_32") {
    FieldCtx f(2, 1, 5);
    std::mt19937_64 rng(5);
    Subspace v = random_subspace(f, 2, rng);
    // subspace_poly would throw on any non-q-power exponent
    LinPoly sp = subspace_poly(v);
    CHECK(sp.sym_degree() == 2);
    for (const Vec& w : v.enumerate()) CHECK(sp.eval(w[0]).is_zero());
}

TEST_CASE("symbolic product basics") {
    FieldCtx f27(3, 1, 3);
    std::mt19937_64 rng(11);
    LinPoly g = random_linpoly(f27, rng);
    CHECK(sym_mul(LinPoly::identity(f27), g) == g);
    CHECK(sym_mul(g, LinPoly::identity(f27)) == g);
    // X^q o X^q = X^{q^2} when n > 2
    LinPoly xq = LinPoly::monomial(f27, f27.one(), 1);
    CHECK(sym_mul(xq, xq) == LinPoly::monomial(f27, f27.one(), 2));
}

TEST_CASE("symbolic product agrees with composed evaluation") {
    FieldCtx f27(3, 1, 3);
    std::mt19937_64 rng(12);
    for (int iter = 0; iter < 100; ++iter) {
        LinPoly a = random_linpoly(f27, rng);
        LinPoly b = random_linpoly(f27, rng);
        LinPoly prod = sym_mul(a, b);
        for (std::uint32_t c = 0; c < f27.order(); ++c) {
            FieldElem x = f27.from_code(c);
            CHECK(prod.eval(x) == a.eval(b.eval(x)));
        }
    }
}

TEST_CASE("symbolic product is associative") {
    FieldCtx f(2, 1, 4);
    std::mt19937_64 rng(13);
    for (int iter = 0; iter < 50; ++iter) {
        LinPoly a = random_linpoly(f, rng);
        LinPoly b = random_linpoly(f, rng);
        LinPoly c = random_linpoly(f, rng);
        CHECK(sym_mul(sym_mul(a, b), c) == sym_mul(a, sym_mul(b, c)));
    }
}

TEST_CASE("ore division by the identity") {
    FieldCtx f(2, 1, 3);
    std::mt19937_64 rng(14);
    LinPoly l = random_linpoly(f, rng);
    auto [q, h] = sym_divrem(l, LinPoly::identity(f));
    CHECK(q == l);
    CHECK(h.is_zero());
    CHECK_THROWS_AS(sym_divrem(l, LinPoly::zero(f)), DivisorZero);
}

TEST_CASE("the F_q subspace polynomial right-divides X^{q^n} - X") {
    FieldCtx f4(2, 1, 2);
    LinPoly big = LinPoly::xqn_minus_x(f4);
    LinPoly g = LinPoly::q_minus_x(f4);
    auto [q, h] = sym_divrem(big, g);
    CHECK(h.is_zero());
    CHECK(sym_mul_raw(q, g) == big);
}

TEST_CASE("ore division reconstruction on random pairs over F_64") {
    FieldCtx f(2, 1, 6);
    std::mt19937_64 rng(15);
    for (int iter = 0; iter < 100; ++iter) {
        LinPoly a = random_linpoly(f, rng);
        LinPoly b = random_linpoly(f, rng);
        if (b.is_zero()) continue;
        auto [q, h] = sym_divrem(a, b);
        CHECK(sym_mul_raw(q, b) + h == a);
        if (!h.is_zero()) CHECK(h.sym_degree() < b.sym_degree());
    }
}
