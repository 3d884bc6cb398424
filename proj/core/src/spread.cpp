#include "linset/spread.hpp"

#include <algorithm>

namespace linset {

SpreadElement spread_element(const ProjPoint& p) {
    return {p, point_span_subspace(p)};
}

std::set<ProjPoint> b_operator(const Subspace& mu) {
    std::set<ProjPoint> out;
    for (const Vec& v : mu.enumerate()) {
        bool zero = std::all_of(v.begin(), v.end(), [](const FieldElem& c) { return c.is_zero(); });
        if (zero) continue;
        out.insert(ProjPoint(v));
    }
    return out;
}

int weight_via_spread(const Subspace& mu, const ProjPoint& p) {
    return mu.intersect(point_span_subspace(p)).dim();
}

Subspace construct_vbtrace(const FieldCtx& ctx, int k) {
    if (k < 2 || k > ctx.n()) throw RankOutOfRange("vbtrace needs 2 <= k <= n");
    std::vector<Vec> gens;
    // (k-1)-dim piece of the spread element of <(1,0)>
    for (int i = 0; i + 1 < k; ++i)
        gens.push_back({ctx.from_code(ctx.qbasis_codes()[i]), ctx.zero()});
    gens.push_back({ctx.zero(), ctx.one()});  // one vector outside it
    return Subspace::span(ctx, 2, gens);
}

Subspace construct_vbvlak(const FieldCtx& ctx, int k) {
    if (k < 3 || k > ctx.n()) throw RankOutOfRange("vbvlak needs 3 <= k <= n");
    std::vector<Vec> gens;
    // (k-2)-dim piece of the spread element of <(1,0,0)>
    for (int i = 0; i + 2 < k; ++i)
        gens.push_back({ctx.from_code(ctx.qbasis_codes()[i]), ctx.zero(), ctx.zero()});
    // a line of the (2n)-space {(0,y,z)} meeting every spread element
    // in at most one projective point (its B-image is an F_q-subline)
    gens.push_back({ctx.zero(), ctx.one(), ctx.zero()});
    gens.push_back({ctx.zero(), ctx.zero(), ctx.one()});
    return Subspace::span(ctx, 3, gens);
}

namespace {

// F_q-basis of the subfield fixed by the e-th q-Frobenius power
std::vector<FieldElem> subfield_qbasis(const FieldCtx& ctx, int e) {
    std::vector<Vec> members;
    for (std::uint32_t code = 0; code < ctx.order(); ++code) {
        FieldElem x = ctx.from_code(code);
        if (x.frobenius(e) == x) members.push_back({x});
    }
    Subspace s = Subspace::span(ctx, 1, members);
    std::vector<FieldElem> basis;
    for (const Vec& b : s.basis()) basis.push_back(b[0]);
    return basis;
}

// trace of x from the degree-e subfield down to F_q (x must lie there)
FieldElem subfield_trace(const FieldElem& x, int e) {
    FieldElem t = x.ctx().zero();
    for (int i = 0; i < e; ++i) t += x.frobenius(i);
    return t;
}

}  // namespace

Subspace construct_subplane(const FieldCtx& ctx) {
    if (ctx.n() != 4) throw Error("subplane construction needs n = 4");
    // F_q-hyperplane of (F_{q^2})^3: drop one basis vector of the last slot
    auto basis2 = subfield_qbasis(ctx, 2);  // {1, w}, F_q-basis of F_{q^2}
    std::vector<Vec> gens;
    for (const FieldElem& b : basis2) gens.push_back({b, ctx.zero(), ctx.zero()});
    for (const FieldElem& b : basis2) gens.push_back({ctx.zero(), b, ctx.zero()});
    gens.push_back({ctx.zero(), ctx.zero(), basis2[0]});
    return Subspace::span(ctx, 3, gens);
}

Subspace construct_ambetant(const FieldCtx& ctx) {
    if (ctx.n() != 9) throw UnsupportedQ("rank-6 construction needs n = 9");
    // mu' = {(0,y,z) : y,z in F_{q^3}, Tr_{q^3/q}(z) = 0}, then extend
    // with (1,0,0) outside the subline's ambient space
    auto basis3 = subfield_qbasis(ctx, 3);
    std::vector<Vec> gens;
    for (const FieldElem& b : basis3) gens.push_back({ctx.zero(), b, ctx.zero()});
    // kernel of the trace F_{q^3} -> F_q (2-dimensional over F_q)
    std::vector<Vec> ker;
    for (std::uint32_t code = 0; code < ctx.order(); ++code) {
        FieldElem z = ctx.from_code(code);
        if (z.frobenius(3) == z && subfield_trace(z, 3).is_zero()) ker.push_back({z});
    }
    Subspace kernel_space = Subspace::span(ctx, 1, ker);
    if (kernel_space.dim() != 2) throw Error("subline trace kernel has unexpected dimension");
    for (const Vec& b : kernel_space.basis()) gens.push_back({ctx.zero(), ctx.zero(), b[0]});
    gens.push_back({ctx.one(), ctx.zero(), ctx.zero()});
    return Subspace::span(ctx, 3, gens);
}

Subspace project_from_point(const Subspace& pi, const Vec& p1,
                            const Vec& target1, const Vec& target2) {
    const FieldCtx& ctx = pi.ctx();
    if (pi.arity() != 3) throw ArityMismatch("projection implemented for arity 3");
    if (!pi.contains(p1)) throw PointNotInSubspace("p1 does not lie in pi");
    // write v = a p1 + b t1 + c t2 over F_{q^n}; projection drops a
    auto solve = [&](const Vec& v) -> Vec {
        std::vector<Vec> m(3, Vec(4, ctx.zero()));
        for (int i = 0; i < 3; ++i) {
            m[i][0] = p1[i];
            m[i][1] = target1[i];
            m[i][2] = target2[i];
            m[i][3] = v[i];
        }
        for (int col = 0; col < 3; ++col) {
            int sel = col;
            while (sel < 3 && m[sel][col].is_zero()) ++sel;
            if (sel == 3) throw Error("projection frame is degenerate");
            std::swap(m[col], m[sel]);
            FieldElem inv = m[col][col].inv();
            for (int j = 0; j < 4; ++j) m[col][j] *= inv;
            for (int i = 0; i < 3; ++i) {
                if (i == col || m[i][col].is_zero()) continue;
                FieldElem f = m[i][col];
                for (int j = 0; j < 4; ++j) m[i][j] -= f * m[col][j];
            }
        }
        FieldElem b = m[1][3], c = m[2][3];
        Vec out(3, ctx.zero());
        for (int i = 0; i < 3; ++i) out[i] = b * target1[i] + c * target2[i];
        return out;
    };
    std::vector<Vec> gens;
    for (const Vec& v : pi.basis()) gens.push_back(solve(v));
    return Subspace::span(ctx, 3, gens);
}

}  // namespace linset
