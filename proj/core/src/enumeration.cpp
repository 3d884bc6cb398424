#include "linset/enumeration.hpp"

#include <set>

namespace linset {

std::vector<Subspace> all_subspaces(const FieldCtx& ctx, int k) {
    if (k == 0) return {Subspace::span(ctx, 1, {})};
    std::vector<Subspace> out;
    std::set<std::vector<std::vector<std::uint32_t>>> seen;
    std::vector<std::uint32_t> tuple(k, 0);
    while (true) {
        std::vector<Vec> vecs;
        for (std::uint32_t code : tuple) vecs.push_back({ctx.from_code(code)});
        Subspace s = Subspace::span(ctx, 1, vecs);
        if (s.dim() == k && seen.insert(s.coord_rows()).second) out.push_back(s);
        int pos = k - 1;
        while (pos >= 0) {
            if (++tuple[pos] < ctx.order()) break;
            tuple[pos--] = 0;
        }
        if (pos < 0) break;
    }
    return out;
}

std::vector<Subspace> all_subspaces_r(const FieldCtx& ctx, int arity, int k) {
    // every vector of F_{q^n}^arity, by mixed-radix code tuples
    std::vector<Vec> all_vecs;
    {
        std::vector<std::uint32_t> codes(arity, 0);
        while (true) {
            Vec v;
            bool zero = true;
            for (std::uint32_t c : codes) {
                v.push_back(ctx.from_code(c));
                zero &= (c == 0);
            }
            if (!zero) all_vecs.push_back(std::move(v));
            int pos = arity - 1;
            while (pos >= 0) {
                if (++codes[pos] < ctx.order()) break;
                codes[pos--] = 0;
            }
            if (pos < 0) break;
        }
    }
    std::vector<Subspace> cur = {Subspace::span(ctx, arity, {})};
    for (int d = 0; d < k; ++d) {
        std::set<std::vector<std::vector<std::uint32_t>>> seen;
        std::vector<Subspace> next;
        for (const Subspace& s : cur) {
            for (const Vec& v : all_vecs) {
                if (s.contains(v)) continue;
                Subspace t = s.sum(Subspace::span(ctx, arity, {v}));
                if (seen.insert(t.coord_rows()).second) next.push_back(t);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

LinPoly interpolate_linpoly(const FieldCtx& ctx, const std::vector<FieldElem>& xs,
                            const std::vector<FieldElem>& values) {
    const int n = ctx.n();
    // extend xs to a full F_q-basis, zero values on the extension
    std::vector<FieldElem> points = xs;
    std::vector<FieldElem> vals = values;
    {
        std::vector<Vec> vecs;
        for (const FieldElem& x : points) vecs.push_back({x});
        Subspace span = Subspace::span(ctx, 1, vecs);
        if (span.dim() != static_cast<int>(points.size()))
            throw Error("interpolation points are F_q-dependent");
        for (std::uint32_t code = 1; code < ctx.order() && span.dim() < n; ++code) {
            Vec cand = {ctx.from_code(code)};
            if (!span.contains(cand)) {
                span = span.sum(Subspace::span(ctx, 1, {cand}));
                points.push_back(cand[0]);
                vals.push_back(ctx.zero());
            }
        }
    }
    // solve the Moore system sum_j c_j x_i^{q^j} = v_i over F_{q^n}
    std::vector<std::vector<FieldElem>> m(n, std::vector<FieldElem>(n + 1, ctx.zero()));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = points[i].frobenius(j);
        m[i][n] = vals[i];
    }
    for (int col = 0; col < n; ++col) {
        int sel = col;
        while (sel < n && m[sel][col].is_zero()) ++sel;
        if (sel == n) throw Error("Moore matrix is singular");
        std::swap(m[col], m[sel]);
        FieldElem inv = m[col][col].inv();
        for (int j = 0; j <= n; ++j) m[col][j] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == col || m[i][col].is_zero()) continue;
            FieldElem f = m[i][col];
            for (int j = 0; j <= n; ++j) m[i][j] -= f * m[col][j];
        }
    }
    std::vector<FieldElem> coeffs(n, ctx.zero());
    for (int j = 0; j < n; ++j) coeffs[j] = m[j][n];
    return LinPoly(ctx, std::move(coeffs));
}

std::vector<LinPoly> all_linear_maps(const Subspace& v) {
    const FieldCtx& ctx = v.ctx();
    const int k = v.dim();
    std::vector<FieldElem> xs;
    for (const Vec& b : v.basis()) xs.push_back(b[0]);
    std::vector<LinPoly> out;
    std::vector<std::uint32_t> tuple(k, 0);
    while (true) {
        std::vector<FieldElem> vals;
        for (std::uint32_t code : tuple) vals.push_back(ctx.from_code(code));
        out.push_back(interpolate_linpoly(ctx, xs, vals));
        int pos = k - 1;
        while (pos >= 0) {
            if (++tuple[pos] < ctx.order()) break;
            tuple[pos--] = 0;
        }
        if (pos < 0) break;
    }
    return out;
}

}  // namespace linset
