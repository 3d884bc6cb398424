#include "doctest.h"

#include <random>

#include "linset/enumeration.hpp"
#include "linset/linear_set.hpp"
#include "linset/sampling.hpp"

using namespace linset;

namespace {

// the PG(2,q) subplane of PG(2,q^n) spanned by the standard frame
LinearSetSpec standard_subplane(const FieldCtx& ctx) {
    std::vector<Vec> gens = {{ctx.one(), ctx.zero(), ctx.zero()},
                             {ctx.zero(), ctx.one(), ctx.zero()},
                             {ctx.zero(), ctx.zero(), ctx.one()}};
    return from_subspace(Subspace::span(ctx, 3, gens));
}

}  // namespace

TEST_CASE("graph construction and rank limits") {
    FieldCtx f4(2, 1, 2);
    Subspace full = Subspace::span(f4, 1, {{f4.one()}, {f4.from_code(2)}});
    LinearSetSpec spec = from_graph(full, LinPoly::trace_poly(f4));
    CHECK(spec.r == 2);
    CHECK(spec.rank() == 2);
    CHECK(spec.u.arity() == 2);

    // graphs over a 2-argument domain are rejected
    Subspace wrong = Subspace::span(f4, 2, {{f4.one(), f4.zero()}});
    CHECK_THROWS_AS(from_graph(wrong, LinPoly::zero(f4)), ArityMismatch);
}

TEST_CASE("point lists of trace constructions") {
    // q=2, n=2, full rank: 3 points, one of weight 1? sum(2^w - 1) = 3
    FieldCtx f4(2, 1, 2);
    Subspace v2 = Subspace::span(f4, 1, {{f4.one()}, {f4.from_code(2)}});
    auto pts2 = points(from_graph(v2, LinPoly::trace_poly(f4)));
    CHECK(pts2.size() == 3);
    long vecs = 0;
    for (const auto& wp : pts2) vecs += (1L << wp.weight) - 1;
    CHECK(vecs == 3);

    // q=2, n=3, full rank: q^{k-1}+1 = 5 points, one weight-2 and four weight-1
    FieldCtx f8(2, 1, 3);
    Subspace v3 = Subspace::span(
        f8, 1, {{f8.one()}, {f8.from_code(2)}, {f8.from_code(4)}});
    auto pts3 = points(from_graph(v3, LinPoly::trace_poly(f8)));
    CHECK(pts3.size() == 5);
    int w2 = 0, w1 = 0;
    long vecs3 = 0;
    for (const auto& wp : pts3) {
        vecs3 += (1L << wp.weight) - 1;
        if (wp.weight == 2) ++w2;
        if (wp.weight == 1) ++w1;
    }
    CHECK(vecs3 == 7);
    CHECK(w2 == 1);
    CHECK(w1 == 4);
}

TEST_CASE("weight routes agree") {
    FieldCtx f8(2, 1, 3);
    std::mt19937_64 rng(20240818);
    for (int iter = 0; iter < 30; ++iter) {
        Subspace u = random_subspace_r(f8, 2, 2, rng);
        LinearSetSpec spec = from_subspace(u);
        for (const auto& wp : points(spec)) {
            CHECK(weight(spec, wp.point) == wp.weight);
            // direct count of U-vectors on the point
            Subspace sp = point_span_subspace(wp.point);
            CHECK(u.intersect(sp).dim() == wp.weight);
        }
        // non-members have weight zero
        ProjPoint off(Vec{f8.one(), f8.zero()});
        bool member = false;
        for (const auto& wp : points(spec)) member |= (wp.point == off);
        if (!member) CHECK(weight(spec, off) == 0);
    }
}

TEST_CASE("direction count equals point count for graphs") {
    for (auto [p, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
        FieldCtx f(p, 1, n);
        for (int k = 1; k <= n; ++k) {
            for (const Subspace& v : all_subspaces(f, k)) {
                for (const LinPoly& fn : all_linear_maps(v)) {
                    DirectionSet dirs = directions(v, fn);
                    CHECK_FALSE(dirs.has_infinity);
                    auto pts = points(from_graph(v, fn));
                    CHECK(dirs.size() == pts.size());
                }
            }
        }
    }
}

TEST_CASE("line bound: congruence and tightness of the trace construction") {
    for (auto [p, n] : {std::pair{2, 3}, std::pair{3, 3}, std::pair{2, 4}}) {
        FieldCtx f(p, 1, n);
        std::vector<Vec> gens;
        for (std::uint32_t b : f.qbasis_codes()) gens.push_back({f.from_code(b)});
        Subspace v = Subspace::span(f, 1, gens);
        LinearSetSpec spec = from_graph(v, LinPoly::trace_poly(f));
        LineReport rep = verify_line_bound(spec);
        CHECK(rep.pass);
        CHECK(rep.congruence_ok);
        CHECK(rep.has_weight_one);
        long bound = 1;
        for (int i = 0; i < n - 1; ++i) bound *= p;
        CHECK(rep.bound == bound + 1);
        CHECK(rep.size == rep.bound);  // tight
    }
}

TEST_CASE("line bound holds for every graph on a small exhaustive grid") {
    for (auto [p, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
        FieldCtx f(p, 1, n);
        for (int k = 1; k <= n; ++k) {
            for (const Subspace& v : all_subspaces(f, k)) {
                for (const LinPoly& fn : all_linear_maps(v)) {
                    LineReport rep = verify_line_bound(from_graph(v, fn));
                    CHECK(rep.pass);
                    CHECK(rep.size % p == 1 % p);
                }
            }
        }
    }
}

TEST_CASE("weight-one spanning") {
    FieldCtx f8(2, 1, 3);
    Subspace v = Subspace::span(f8, 1, {{f8.one()}, {f8.from_code(2)}, {f8.from_code(4)}});
    CHECK(span_of_weight_one(from_graph(v, LinPoly::trace_poly(f8))));

    // V = F_4 inside F_16, f = 0: L is the single point <(1,0)> of weight 2,
    // so the set has no weight-one vectors at all
    FieldCtx f16(2, 1, 4);
    std::vector<Vec> f4gens;
    for (std::uint32_t c = 1; c < f16.order(); ++c) {
        FieldElem x = f16.from_code(c);
        if (x.pow(3) != f16.one() && x != f16.one()) continue;  // x in F_4*
        if (Subspace::span(f16, 1, f4gens).contains({x})) continue;
        f4gens.push_back({x});
        if (f4gens.size() == 2) break;
    }
    Subspace f4sub = Subspace::span(f16, 1, f4gens);
    REQUIRE(f4sub.dim() == 2);
    LinearSetSpec single = from_graph(f4sub, LinPoly::zero(f16));
    auto pts = points(single);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].weight == 2);
    CHECK_THROWS_AS(span_of_weight_one(single), NoWeightOnePoint);
}

TEST_CASE("secant spectrum of a subplane of PG(2,4)") {
    FieldCtx f4(2, 1, 2);
    LinearSetSpec plane = standard_subplane(f4);
    auto pts = [&] {
        std::vector<ProjPoint> out;
        for (const auto& wp : points(plane)) out.push_back(wp.point);
        return out;
    }();
    REQUIRE(pts.size() == 7);
    auto spectrum = secant_spectrum(pts);
    CHECK(spectrum == std::map<int, long>{{1, 14}, {3, 7}});

    // pair-generated fallback agrees with full line enumeration
    CHECK(secant_spectrum(pts, 0) == spectrum);

    CHECK(max_linearity_modulus(f4, spectrum) == 1);
}

TEST_CASE("blocking sets in PG(2,4)") {
    FieldCtx f4(2, 1, 2);
    auto sub = points(standard_subplane(f4));
    std::vector<ProjPoint> pts;
    for (const auto& wp : sub) pts.push_back(wp.point);
    BlockingReport rep = is_blocking_set(f4, pts);
    CHECK(rep.blocking);
    CHECK_FALSE(rep.trivial);
    CHECK(rep.small);  // 7 < 3(4+1)/2

    // a full line is a trivial blocking set
    std::vector<ProjPoint> line;
    for (std::uint32_t c = 0; c < f4.order(); ++c)
        line.push_back(ProjPoint(Vec{f4.one(), f4.from_code(c), f4.zero()}));
    line.push_back(ProjPoint(Vec{f4.zero(), f4.one(), f4.zero()}));
    BlockingReport lrep = is_blocking_set(f4, line);
    CHECK(lrep.blocking);
    CHECK(lrep.trivial);

    // a too-small set is not blocking
    BlockingReport nrep = is_blocking_set(f4, {pts[0], pts[1]});
    CHECK_FALSE(nrep.blocking);
}

TEST_CASE("plane bound on subplanes") {
    for (int p : {2, 3}) {
        FieldCtx f(p, 1, 2);
        LinearSetSpec plane = standard_subplane(f);
        PlaneReport rep = verify_plane_bound(plane);
        CHECK(rep.pass);
        CHECK(rep.has_q_plus_1_secant);
        CHECK(rep.bound == p * p + p + 1);
        CHECK(rep.size == rep.bound);  // tight
        CHECK(rep.congruence_ok);
    }
}

TEST_CASE("plane bound on random rank-3 sets in PG(2,8)") {
    FieldCtx f8(2, 1, 3);
    std::mt19937_64 rng(31337);
    for (int iter = 0; iter < 50; ++iter) {
        Subspace u = random_subspace_r(f8, 3, 3, rng);
        PlaneReport rep = verify_plane_bound(from_subspace(u));
        CHECK(rep.pass);
    }
}

TEST_CASE("hyperplane bound in PG(3,16)") {
    FieldCtx f16(2, 1, 4);
    std::vector<Vec> gens;
    for (int i = 0; i < 4; ++i) {
        Vec v(4, f16.zero());
        v[i] = f16.one();
        gens.push_back(v);
    }
    LinearSetSpec spec = from_subspace(Subspace::span(f16, 4, gens));
    HyperplaneReport rep = verify_hyperplane_bound(spec);
    CHECK(rep.size == 15);
    CHECK(rep.hypothesis);
    CHECK(rep.bound == 15);
    CHECK(rep.bound_ok);
    CHECK(rep.pass);
}

TEST_CASE("hyperplane bound delegates to the plane bound for r = 3") {
    FieldCtx f4(2, 1, 2);
    HyperplaneReport rep = verify_hyperplane_bound(standard_subplane(f4));
    CHECK(rep.pass);
    CHECK(rep.size == 7);
}
