#include "doctest.h"

#include <random>

#include "linset/enumeration.hpp"
#include "linset/linear_set.hpp"
#include "linset/redei.hpp"

using namespace linset;

namespace {

std::vector<AffinePoint> graph_points(const Subspace& v, const LinPoly& f) {
    std::vector<AffinePoint> pts;
    for (const Vec& x : v.enumerate()) pts.push_back({x[0], f.eval(x[0])});
    return pts;
}

BiPoly bipoly_mul(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (const auto& [ea, ca] : a.by_x_degree)
        for (const auto& [eb, cb] : b.by_x_degree) out.add_term(ea + eb, ca * cb);
    return out;
}

// X^{q^n} - X == R*Q + r as bivariate polynomials
bool reconstructs(const RedeiPoly& r, const DivisionResult& dr) {
    const FieldCtx& ctx = r.ctx();
    BiPoly lhs;
    lhs.add_term(static_cast<int>(ctx.order()), YPoly::constant(ctx.one()));
    lhs.add_term(1, YPoly::constant(-ctx.one()));
    BiPoly rhs = bipoly_mul(r.poly(), dr.quotient);
    for (const auto& [e, c] : dr.remainder.by_x_degree) rhs.add_term(e, c);
    return lhs == rhs;
}

}  // namespace

TEST_CASE("redei polynomial of a single point and of a subfield graph") {
    FieldCtx f4(2, 1, 2);
    RedeiPoly single = redei_build(f4, {{f4.zero(), f4.zero()}});
    CHECK(single.size() == 1);
    CHECK(single.poly().coeff(1) == YPoly::constant(f4.one()));
    CHECK(single.poly().coeff(0).is_zero());

    // graph of f = 0 on V = F_q inside F_{q^2}: R = X^q - X Y^{q-1}
    for (auto [p, n] : {std::pair{2, 2}, std::pair{3, 2}}) {
        FieldCtx f(p, 1, n);
        Subspace v = kernel(LinPoly::q_minus_x(f));
        RedeiPoly r = redei_build(f, graph_points(v, LinPoly::zero(f)));
        CHECK(r.size() == p);
        CHECK(r.poly().coeff(p) == YPoly::constant(f.one()));
        YPoly expect(f, [&] {
            std::vector<FieldElem> c(p, f.zero());
            c[p - 1] = -f.one();
            return c;
        }());
        CHECK(r.poly().coeff(1) == expect);
    }
}

TEST_CASE("duplicate points are rejected") {
    FieldCtx f4(2, 1, 2);
    CHECK_THROWS_AS(redei_build(f4, {{f4.zero(), f4.zero()}, {f4.zero(), f4.zero()}}),
                    DuplicatePoint);
}

TEST_CASE("shape of the redei polynomial of a linear graph") {
    FieldCtx f8(2, 1, 3);
    Subspace v = trace_kernel_subspace(f8, {});
    RedeiPoly r = redei_build(f8, graph_points(v, LinPoly::trace_poly(f8)));
    CHECK(check_shape(r, 3));
    // only X-exponents q^j carry coefficients
    for (const auto& [e, c] : r.poly().by_x_degree)
        CHECK((e == 1 || e == 2 || e == 4 || e == 8));
}

TEST_CASE("non-linear point sets fail the shape check") {
    FieldCtx f4(2, 1, 2);
    FieldElem omega = f4.from_code(2);
    RedeiPoly r = redei_build(
        f4, {{f4.zero(), f4.zero()}, {f4.one(), f4.zero()}, {omega, omega}, {omega + f4.one(), f4.zero()}});
    CHECK_FALSE(check_shape(r, 2));
}

TEST_CASE("specialization") {
    FieldCtx f9(3, 1, 2);
    Subspace v = kernel(LinPoly::q_minus_x(f9));
    RedeiPoly r = redei_build(f9, graph_points(v, LinPoly::zero(f9)));
    // y = 0: R(X,0) = X^q
    auto at0 = specialize(r, f9.zero());
    CHECK(at0.size() == 4);
    CHECK(at0[3] == f9.one());
    for (int i = 0; i < 3; ++i) CHECK(at0[i].is_zero());
}

TEST_CASE("multiplicity profiles of determined and free slopes") {
    FieldCtx f8(2, 1, 3);
    Subspace v = trace_kernel_subspace(f8, {});
    LinPoly tr = LinPoly::trace_poly(f8);
    RedeiPoly r = redei_build(f8, graph_points(v, tr));
    auto spec = from_graph(v, tr);
    DirectionSet dirs = directions(v, tr);

    for (std::uint32_t code = 0; code < f8.order(); ++code) {
        FieldElem y = f8.from_code(code);
        auto profile = multiplicity_profile(r, y);
        if (!dirs.slopes.count(code)) {
            for (const auto& [root, m] : profile) CHECK(m == 1);
        } else {
            // weight-j slope: all multiplicities q^j, q^{k-j} distinct roots
            // find the weight of the point <(x0, f(x0))> with slope y
            int wt = 0;
            for (const auto& wp : points(spec)) {
                const Vec& c = wp.point.coords();
                if (!c[0].is_zero() && c[1] / c[0] == y) wt = wp.weight;
            }
            REQUIRE(wt > 0);
            long expect_mult = 1;
            for (int i = 0; i < wt; ++i) expect_mult *= 2;
            for (const auto& [root, m] : profile) CHECK(m == expect_mult);
            CHECK(profile.size() == (1u << (3 - wt)));
        }
    }
}

TEST_CASE("division of X^{q^n}-X by itself") {
    FieldCtx f4(2, 1, 2);
    // the points (0, y) for all y give R(X,Y) = X^{q^n} - X
    std::vector<AffinePoint> pts;
    for (std::uint32_t c = 0; c < f4.order(); ++c) pts.push_back({f4.zero(), f4.from_code(c)});
    RedeiPoly r = redei_build(f4, pts);
    CHECK(r.poly().coeff(4) == YPoly::constant(f4.one()));
    DivisionResult dr = divide_xqn(r);
    CHECK(dr.quotient.by_x_degree.size() == 1);
    CHECK(dr.quotient.coeff(0) == YPoly::constant(f4.one()));
    CHECK(dr.remainder.is_zero());
    CHECK(dr.degx_h == 1);  // H = -X
    auto [is_pow, exp] = degh_is_q_power(r, dr);
    CHECK(is_pow);
    CHECK(exp == 0);
}

TEST_CASE("trace construction division: deg_X H = q^{k-1}") {
    FieldCtx f8(2, 1, 3);
    Subspace v = trace_kernel_subspace(f8, {});
    RedeiPoly r = redei_build(f8, graph_points(v, LinPoly::trace_poly(f8)));
    DivisionResult dr = divide_xqn(r);
    CHECK(reconstructs(r, dr));
    CHECK(dr.degx_h == 4);
    CHECK(dr.min_nonzero_h_index == 8 - 4);
    auto [is_pow, exp] = degh_is_q_power(r, dr);
    CHECK(is_pow);
    CHECK(exp == 2);
}

TEST_CASE("free slopes specialize H to -X") {
    FieldCtx f9(3, 1, 2);
    Subspace v = kernel(LinPoly::q_minus_x(f9));
    LinPoly f = LinPoly::monomial(f9, f9.from_code(2), 1);
    RedeiPoly r = redei_build(f9, graph_points(v, f));
    DivisionResult dr = divide_xqn(r);
    DirectionSet dirs = directions(v, f);
    for (std::uint32_t code = 0; code < f9.order(); ++code) {
        if (dirs.slopes.count(code)) continue;
        auto h_at = specialize(dr.h, f9, f9.from_code(code));
        REQUIRE(h_at.size() == 2);
        CHECK(h_at[1] == -f9.one());
        CHECK(h_at[0].is_zero());
    }
}

TEST_CASE("division invariants across an exhaustive small grid") {
    FieldCtx f8(2, 1, 3);
    for (int k = 1; k <= 3; ++k) {
        for (const Subspace& v : all_subspaces(f8, k)) {
            for (const LinPoly& f : all_linear_maps(v)) {
                RedeiPoly r = redei_build(f8, graph_points(v, f));
                CHECK(check_shape(r, k));
                DivisionResult dr = divide_xqn(r);
                CHECK(reconstructs(r, dr));
                CHECK(dr.degree_ledger_ok(r.size()));
                auto [is_pow, exp] = degh_is_q_power(r, dr);
                CHECK(is_pow);
                // Lemma-chain: direction count >= q^n - i_0 = deg_X H
                DirectionSet dirs = directions(v, f);
                CHECK(static_cast<int>(dirs.size()) >= dr.degx_h);
                CHECK(dr.degx_h == 8 - dr.min_nonzero_h_index);
                // every specialization of H is linearized
                for (std::uint32_t code = 0; code < f8.order(); ++code)
                    CHECK_NOTHROW(to_linpoly(f8, specialize(dr.h, f8, f8.from_code(code))));
            }
        }
    }
}

TEST_CASE("degenerate identity-map set still agrees with the ore route") {
    FieldCtx f8(2, 1, 3);
    Subspace v = trace_kernel_subspace(f8, {});
    RedeiPoly r = redei_build(f8, graph_points(v, LinPoly::identity(f8)));
    DivisionResult dr = divide_xqn(r);
    auto [is_pow, exp] = degh_is_q_power(r, dr);
    CHECK(is_pow);  // the cross-route comparison runs over every y
}
