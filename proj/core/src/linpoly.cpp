#include "linset/linpoly.hpp"

#include <algorithm>

namespace linset {

LinPoly::LinPoly(const FieldCtx& ctx, std::vector<FieldElem> coeffs)
    : ctx_(&ctx), coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

LinPoly LinPoly::identity(const FieldCtx& ctx) {
    return LinPoly(ctx, {ctx.one()});
}

LinPoly LinPoly::monomial(const FieldCtx& ctx, FieldElem c, int i) {
    std::vector<FieldElem> coeffs(i + 1, ctx.zero());
    coeffs[i] = c;
    return LinPoly(ctx, std::move(coeffs));
}

LinPoly LinPoly::q_minus_x(const FieldCtx& ctx) {
    return LinPoly(ctx, {-ctx.one(), ctx.one()});
}

LinPoly LinPoly::trace_poly(const FieldCtx& ctx) {
    return LinPoly(ctx, std::vector<FieldElem>(ctx.n(), ctx.one()));
}

LinPoly LinPoly::xqn_minus_x(const FieldCtx& ctx) {
    std::vector<FieldElem> coeffs(ctx.n() + 1, ctx.zero());
    coeffs[0] = -ctx.one();
    coeffs[ctx.n()] = ctx.one();
    return LinPoly(ctx, std::move(coeffs));
}

FieldElem LinPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return ctx_->zero();
    return coeffs_[i];
}

FieldElem LinPoly::eval(const FieldElem& x) const {
    FieldElem acc = ctx_->zero();
    FieldElem power = x;  // x^{q^i}
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        acc += coeffs_[i] * power;
        power = power.frobenius(1);
    }
    return acc;
}

LinPoly LinPoly::operator+(const LinPoly& o) const {
    std::vector<FieldElem> out(std::max(coeffs_.size(), o.coeffs_.size()), ctx_->zero());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + o.coeff(i);
    return LinPoly(*ctx_, std::move(out));
}

LinPoly LinPoly::operator-(const LinPoly& o) const {
    std::vector<FieldElem> out(std::max(coeffs_.size(), o.coeffs_.size()), ctx_->zero());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - o.coeff(i);
    return LinPoly(*ctx_, std::move(out));
}

LinPoly LinPoly::reduced() const {
    const int n = ctx_->n();
    std::vector<FieldElem> out(n, ctx_->zero());
    // x^{q^{n+j}} = x^{q^j} on F_{q^n}, so c_i folds into slot i mod n
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i % n] += coeffs_[i];
    return LinPoly(*ctx_, std::move(out));
}

LinPoly sym_mul_raw(const LinPoly& f, const LinPoly& g) {
    const FieldCtx& ctx = f.ctx();
    if (f.is_zero() || g.is_zero()) return LinPoly::zero(ctx);
    std::vector<FieldElem> out(f.sym_degree() + g.sym_degree() + 1, ctx.zero());
    for (int i = 0; i <= f.sym_degree(); ++i) {
        if (f.coeff(i).is_zero()) continue;
        for (int j = 0; j <= g.sym_degree(); ++j)
            out[i + j] += f.coeff(i) * g.coeff(j).frobenius(i);
    }
    return LinPoly(ctx, std::move(out));
}

LinPoly sym_mul(const LinPoly& f, const LinPoly& g) {
    return sym_mul_raw(f, g).reduced();
}

std::pair<LinPoly, LinPoly> sym_divrem(const LinPoly& f, const LinPoly& g) {
    const FieldCtx& ctx = f.ctx();
    if (g.is_zero()) throw DivisorZero("symbolic division by the zero polynomial");
    LinPoly rem = f;
    LinPoly quot = LinPoly::zero(ctx);
    const int e = g.sym_degree();
    const FieldElem lead = g.coeff(e);
    while (!rem.is_zero() && rem.sym_degree() >= e) {
        const int d = rem.sym_degree();
        // c X^{q^{d-e}} o g has leading coefficient c * lead^{q^{d-e}}
        FieldElem c = rem.coeff(d) / lead.frobenius((d - e) % ctx.n());
        LinPoly mono = LinPoly::monomial(ctx, c, d - e);
        quot = quot + mono;
        rem = rem - sym_mul_raw(mono, g);
    }
    return {quot, rem};
}

Subspace kernel(const LinPoly& l) {
    const FieldCtx& ctx = l.ctx();
    const int n = ctx.n();
    // matrix of x -> l(x) in the F_q-basis; kernel is its nullspace over F_q
    std::vector<std::vector<std::uint32_t>> matrix(n, std::vector<std::uint32_t>(n));
    for (int j = 0; j < n; ++j) {
        FieldElem image = l.eval(ctx.from_code(ctx.qbasis_codes()[j]));
        const auto& coords = ctx.qcoords(image.code());
        for (int i = 0; i < n; ++i) matrix[i][j] = coords[i];
    }
    auto null_rows = detail::nullspace_fq(ctx, matrix, n);
    std::vector<Vec> vecs;
    for (const auto& row : null_rows)
        vecs.push_back({ctx.from_code(ctx.from_qcoords(row))});
    return Subspace::span(ctx, 1, vecs);
}

LinPoly subspace_poly(const Subspace& v) {
    const FieldCtx& ctx = v.ctx();
    if (v.arity() != 1) throw ArityMismatch("subspace_poly needs arity 1");
    // expand the ordinary product, then read off the q-power slots
    std::vector<FieldElem> poly = {ctx.one()};  // ascending ordinary coefficients
    for (const Vec& w : v.enumerate()) {
        const FieldElem beta = w[0];
        std::vector<FieldElem> next(poly.size() + 1, ctx.zero());
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= poly[i] * beta;
        }
        poly = std::move(next);
    }
    std::vector<FieldElem> lin(v.dim() + 1, ctx.zero());
    for (std::size_t d = 0; d < poly.size(); ++d) {
        if (poly[d].is_zero()) continue;
        std::uint64_t e = 1;
        int i = 0;
        while (e < d) { e *= ctx.q(); ++i; }
        if (e != d) throw Error("subspace polynomial has a non-q-power exponent");
        lin[i] = poly[d];
    }
    return LinPoly(ctx, std::move(lin));
}

}  // namespace linset
