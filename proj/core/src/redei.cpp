#include "linset/redei.hpp"

#include <algorithm>
#include <set>

namespace linset {

YPoly::YPoly(const FieldCtx& ctx, std::vector<FieldElem> coeffs) : coeffs_(std::move(coeffs)) {
    (void)ctx;
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

YPoly YPoly::constant(const FieldElem& c) {
    YPoly p;
    if (!c.is_zero()) p.coeffs_ = {c};
    return p;
}

FieldElem YPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size()))
        return coeffs_.empty() ? FieldElem() : coeffs_[0].ctx().zero();
    return coeffs_[i];
}

YPoly YPoly::operator+(const YPoly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    const FieldCtx& ctx = coeffs_[0].ctx();
    std::vector<FieldElem> out(std::max(coeffs_.size(), o.coeffs_.size()), ctx.zero());
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < coeffs_.size()) out[i] += coeffs_[i];
        if (i < o.coeffs_.size()) out[i] += o.coeffs_[i];
    }
    return YPoly(ctx, std::move(out));
}

YPoly YPoly::operator-() const {
    if (is_zero()) return *this;
    YPoly out = *this;
    for (FieldElem& c : out.coeffs_) c = -c;
    return out;
}

YPoly YPoly::operator-(const YPoly& o) const { return *this + (-o); }

YPoly YPoly::operator*(const YPoly& o) const {
    if (is_zero() || o.is_zero()) return YPoly();
    const FieldCtx& ctx = coeffs_[0].ctx();
    std::vector<FieldElem> out(coeffs_.size() + o.coeffs_.size() - 1, ctx.zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return YPoly(ctx, std::move(out));
}

FieldElem YPoly::eval(const FieldElem& y) const {
    if (is_zero()) return y.ctx().zero();
    FieldElem acc = y.ctx().zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * y + *it;
    return acc;
}

void BiPoly::add_term(int x_exp, const YPoly& c) {
    if (c.is_zero()) return;
    auto it = by_x_degree.find(x_exp);
    if (it == by_x_degree.end()) {
        by_x_degree.emplace(x_exp, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) by_x_degree.erase(it);
    }
}

void BiPoly::sub_term(int x_exp, const YPoly& c) { add_term(x_exp, -c); }

YPoly BiPoly::coeff(int x_exp) const {
    auto it = by_x_degree.find(x_exp);
    return it == by_x_degree.end() ? YPoly() : it->second;
}

int BiPoly::deg_x() const {
    return by_x_degree.empty() ? -1 : by_x_degree.rbegin()->first;
}

int BiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : by_x_degree) d = std::max(d, e + c.degree());
    return d;
}

RedeiPoly redei_build(const FieldCtx& ctx, const std::vector<AffinePoint>& points) {
    if (points.empty()) throw Error("redei_build needs a nonempty point set");
    {
        std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
        for (const auto& pt : points)
            if (!seen.insert({pt.x.code(), pt.y.code()}).second)
                throw DuplicatePoint("duplicate affine point");
    }
    // incremental product of (X + (-x_i Y + y_i)); dense in X
    std::vector<YPoly> coeffs = {YPoly::constant(ctx.one())};  // index = X-degree
    for (const auto& pt : points) {
        YPoly lin(ctx, {pt.y, -pt.x});  // -x_i Y + y_i
        std::vector<YPoly> next(coeffs.size() + 1);
        for (std::size_t d = 0; d < coeffs.size(); ++d) {
            next[d + 1] = next[d + 1] + coeffs[d];
            next[d] = next[d] + coeffs[d] * lin;
        }
        coeffs = std::move(next);
    }
    RedeiPoly r;
    r.ctx_ = &ctx;
    r.size_ = static_cast<int>(points.size());
    for (std::size_t d = 0; d < coeffs.size(); ++d) r.poly_.add_term(static_cast<int>(d), coeffs[d]);
    return r;
}

std::vector<FieldElem> specialize(const BiPoly& b, const FieldCtx& ctx, const FieldElem& y) {
    std::vector<FieldElem> out(b.deg_x() + 1, ctx.zero());
    for (const auto& [e, c] : b.by_x_degree) out[e] = c.eval(y);
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

std::vector<FieldElem> specialize(const RedeiPoly& r, const FieldElem& y) {
    return specialize(r.poly(), r.ctx(), y);
}

namespace {

// synthetic division by (X - alpha); returns quotient, requires the
// remainder to be zero when exact == true
std::vector<FieldElem> divide_linear(const std::vector<FieldElem>& poly, const FieldElem& alpha) {
    const FieldCtx& ctx = alpha.ctx();
    std::vector<FieldElem> quot(poly.size() - 1, ctx.zero());
    FieldElem carry = ctx.zero();
    for (int i = static_cast<int>(poly.size()) - 1; i >= 1; --i) {
        carry = poly[i] + carry * alpha;
        quot[i - 1] = carry;
    }
    return quot;
}

FieldElem eval_poly(const std::vector<FieldElem>& poly, const FieldElem& x) {
    FieldElem acc = x.ctx().zero();
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace

std::map<std::uint32_t, int> multiplicity_profile(const RedeiPoly& r, const FieldElem& y) {
    const FieldCtx& ctx = r.ctx();
    std::vector<FieldElem> poly = specialize(r, y);
    std::map<std::uint32_t, int> profile;
    for (std::uint32_t code = 0; code < ctx.order(); ++code) {
        FieldElem alpha = ctx.from_code(code);
        int mult = 0;
        std::vector<FieldElem> cur = poly;
        while (cur.size() > 1 && eval_poly(cur, alpha).is_zero()) {
            cur = divide_linear(cur, alpha);
            ++mult;
        }
        if (mult > 0) profile[code] = mult;
    }
    int total = 0;
    for (const auto& [code, m] : profile) total += m;
    if (total != static_cast<int>(poly.size()) - 1)
        throw NonSplitting("R(X,y) does not split over F_{q^n}");
    return profile;
}

bool DivisionResult::degree_ledger_ok(int size) const {
    const std::uint32_t qn = ctx->order();
    if (quotient.total_degree() > static_cast<int>(qn)) return false;
    if (remainder.total_degree() > static_cast<int>(qn)) return false;
    // deg sigma*_i <= i, where sigma*_i sits at X-degree q^n - q^k - i
    for (const auto& [e, c] : quotient.by_x_degree) {
        int i = static_cast<int>(qn) - size - e;
        if (c.degree() > i) return false;
    }
    // deg rho_i <= i and deg h_i <= i at X-degree q^n - i
    for (const auto& [e, c] : remainder.by_x_degree)
        if (c.degree() > static_cast<int>(qn) - e) return false;
    for (const auto& [i, c] : h_coeffs)
        if (c.degree() > i) return false;
    // Corollary bound on H
    if (degx_h > size - 1) return false;
    return true;
}

DivisionResult divide_xqn(const RedeiPoly& r) {
    const FieldCtx& ctx = r.ctx();
    const int qn = static_cast<int>(ctx.order());
    const int qk = r.size();
    if (r.poly().coeff(qk) != YPoly::constant(ctx.one()))
        throw NotMonic("R(X,Y) is not monic in X");
    if (qk > qn) throw Error("deg_X R exceeds q^n");

    // dense remainder in X; X^{q^n} - X
    std::vector<YPoly> rem(qn + 1);
    rem[qn] = YPoly::constant(ctx.one());
    rem[1] = rem[1] - YPoly::constant(ctx.one());

    DivisionResult out;
    out.ctx = &ctx;
    for (int d = qn; d >= qk; --d) {
        YPoly c = rem[d];
        if (c.is_zero()) continue;
        // the sigma*-degree invariant of the division, checked per step
        if (c.degree() > qn - d)
            throw Error("division invariant violated: deg sigma*_i > i");
        out.quotient.add_term(d - qk, c);
        for (const auto& [j, sigma] : r.poly().by_x_degree)
            rem[d - qk + j] = rem[d - qk + j] - c * sigma;
    }
    for (int d = 0; d < qk; ++d)
        if (!rem[d].is_zero()) out.remainder.add_term(d, rem[d]);

    // H = -r - X
    for (const auto& [e, c] : out.remainder.by_x_degree) out.h.add_term(e, -c);
    out.h.sub_term(1, YPoly::constant(ctx.one()));

    for (const auto& [e, c] : out.h.by_x_degree) out.h_coeffs.emplace(qn - e, c);
    if (!out.h.is_zero()) {
        out.degx_h = out.h.deg_x();
        out.min_nonzero_h_index = qn - out.degx_h;
    }
    if (!out.degree_ledger_ok(qk)) throw Error("division degree ledger violated");
    return out;
}

bool check_shape(const RedeiPoly& r, int k) {
    const FieldCtx& ctx = r.ctx();
    std::uint64_t qk = 1;
    for (int i = 0; i < k; ++i) qk *= ctx.q();
    if (r.size() != static_cast<int>(qk)) return false;
    std::set<int> allowed;
    std::uint64_t e = 1;
    for (int j = 0; j <= k; ++j) { allowed.insert(static_cast<int>(e)); e *= ctx.q(); }
    for (const auto& [x_exp, c] : r.poly().by_x_degree)
        if (!allowed.count(x_exp)) return false;
    // sigma_{q^k} (the X-constant coefficient) must vanish
    return r.poly().coeff(0).is_zero();
}

LinPoly to_linpoly(const FieldCtx& ctx, const std::vector<FieldElem>& poly) {
    std::vector<FieldElem> lin;
    for (std::size_t d = 0; d < poly.size(); ++d) {
        if (poly[d].is_zero()) continue;
        std::uint64_t e = 1;
        int i = 0;
        while (e < d) { e *= ctx.q(); ++i; }
        if (e != d) throw Error("polynomial has a non-q-power exponent");
        if (static_cast<int>(lin.size()) <= i) lin.resize(i + 1, ctx.zero());
        lin[i] = poly[d];
    }
    return LinPoly(ctx, std::move(lin));
}

std::pair<bool, int> degh_is_q_power(const RedeiPoly& r, const DivisionResult& dr) {
    const FieldCtx& ctx = r.ctx();
    // cross-validate against the Ore route at every y
    const LinPoly lhs = LinPoly::xqn_minus_x(ctx);
    for (std::uint32_t code = 0; code < ctx.order(); ++code) {
        FieldElem y = ctx.from_code(code);
        LinPoly ry = to_linpoly(ctx, specialize(r, y));
        auto [qt, ht] = sym_divrem(lhs, ry);
        // H'_y = -H~_y - X
        LinPoly hy = LinPoly::zero(ctx) - ht - LinPoly::identity(ctx);
        LinPoly h_spec = to_linpoly(ctx, specialize(dr.h, ctx, y));
        if (hy != h_spec) return {false, -1};
    }
    if (dr.degx_h < 1) return {false, -1};
    std::uint64_t e = 1;
    int i = 0;
    while (e < static_cast<std::uint64_t>(dr.degx_h)) { e *= ctx.q(); ++i; }
    if (e != static_cast<std::uint64_t>(dr.degx_h)) return {false, -1};
    return {true, i};
}

}  // namespace linset
