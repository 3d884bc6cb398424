#include "linset/linear_set.hpp"

#include <algorithm>
#include <cassert>

namespace linset {

ProjPoint::ProjPoint(const Vec& v) : coords_(v) {
    std::size_t lead = 0;
    while (lead < coords_.size() && coords_[lead].is_zero()) ++lead;
    if (lead == coords_.size()) throw Error("projective point from the zero vector");
    FieldElem inv = coords_[lead].inv();
    for (FieldElem& c : coords_) c = c * inv;
}

bool ProjPoint::operator==(const ProjPoint& o) const {
    return coords_ == o.coords_;
}

bool ProjPoint::operator<(const ProjPoint& o) const {
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i].code() != o.coords_[i].code())
            return coords_[i].code() < o.coords_[i].code();
    }
    return false;
}

LinearSetSpec from_graph(const Subspace& v, const LinPoly& f) {
    const FieldCtx& ctx = v.ctx();
    if (v.arity() != 1) throw ArityMismatch("graph domain must have arity 1");
    if (v.dim() > ctx.n()) throw RankTooLarge("rank exceeds n");
    std::vector<Vec> gens;
    for (const Vec& b : v.basis()) gens.push_back({b[0], f.eval(b[0])});
    LinearSetSpec spec;
    spec.r = 2;
    spec.u = Subspace::span(ctx, 2, gens);
    if (spec.u.dim() != v.dim()) throw Error("graph subspace dimension mismatch");
    spec.graph_v = v;
    spec.graph_f = f;
    return spec;
}

LinearSetSpec from_subspace(const Subspace& u) {
    LinearSetSpec spec;
    spec.r = u.arity();
    spec.u = u;
    return spec;
}

std::vector<WeightedPoint> points(const LinearSetSpec& spec) {
    const FieldCtx& ctx = spec.u.ctx();
    std::map<ProjPoint, long> counts;
    for (const Vec& v : spec.u.enumerate()) {
        bool zero = std::all_of(v.begin(), v.end(), [](const FieldElem& c) { return c.is_zero(); });
        if (zero) continue;
        ++counts[ProjPoint(v)];
    }
    std::vector<WeightedPoint> out;
    for (const auto& [p, count] : counts) {
        // count = q^wt - 1
        int wt = 0;
        std::uint64_t e = 1;
        while (e < static_cast<std::uint64_t>(count) + 1) { e *= ctx.q(); ++wt; }
        assert(e == static_cast<std::uint64_t>(count) + 1);
        out.push_back({p, wt});
    }
    return out;
}

Subspace point_span_subspace(const ProjPoint& p) {
    const FieldCtx& ctx = p.coords()[0].ctx();
    std::vector<Vec> gens;
    for (std::uint32_t b : ctx.qbasis_codes()) {
        FieldElem lam = ctx.from_code(b);
        Vec v;
        for (const FieldElem& c : p.coords()) v.push_back(lam * c);
        gens.push_back(std::move(v));
    }
    return Subspace::span(ctx, p.arity(), gens);
}

int weight(const LinearSetSpec& spec, const ProjPoint& p) {
    return spec.u.intersect(point_span_subspace(p)).dim();
}

DirectionSet directions(const Subspace& v, const LinPoly& f) {
    DirectionSet d;
    for (const Vec& w : v.enumerate()) {
        if (w[0].is_zero()) continue;
        d.slopes.insert((f.eval(w[0]) / w[0]).code());
    }
    return d;
}

LineReport verify_line_bound(const LinearSetSpec& spec) {
    const FieldCtx& ctx = spec.u.ctx();
    LineReport rep;
    auto pts = points(spec);
    rep.size = static_cast<int>(pts.size());
    rep.has_weight_one =
        std::any_of(pts.begin(), pts.end(), [](const WeightedPoint& w) { return w.weight == 1; });
    if (spec.rank() >= 2) {
        // q^{k-1} + 1; the congruence step that lifts q^{k-1} to q^{k-1}+1
        // needs q^{k-1} == 0 mod q, so the bound only applies for rank >= 2
        std::uint64_t bound = 1;
        for (int i = 0; i + 1 < spec.rank(); ++i) bound *= ctx.q();
        rep.bound = static_cast<int>(bound) + 1;
    } else {
        rep.bound = spec.rank();  // a rank-1 set is a single point
    }
    rep.congruence_ok = (rep.size % ctx.q()) == 1 % ctx.q();
    rep.bound_ok = !rep.has_weight_one || rep.size >= rep.bound;
    rep.pass = rep.congruence_ok && rep.bound_ok;
    return rep;
}

bool span_of_weight_one(const LinearSetSpec& spec) {
    const FieldCtx& ctx = spec.u.ctx();
    std::map<ProjPoint, long> counts;
    std::vector<Vec> vectors;
    for (const Vec& v : spec.u.enumerate()) {
        bool zero = std::all_of(v.begin(), v.end(), [](const FieldElem& c) { return c.is_zero(); });
        if (zero) continue;
        ++counts[ProjPoint(v)];
        vectors.push_back(v);
    }
    std::vector<Vec> weight_one;
    for (const Vec& v : vectors)
        if (counts[ProjPoint(v)] == static_cast<long>(ctx.q()) - 1) weight_one.push_back(v);
    if (weight_one.empty()) throw NoWeightOnePoint("no point of weight one");
    return Subspace::span(ctx, spec.r, weight_one) == spec.u;
}

namespace {

std::vector<ProjPoint> all_proj_points(const FieldCtx& ctx, int arity) {
    std::vector<ProjPoint> out;
    for (int pivot = 0; pivot < arity; ++pivot) {
        int free = arity - pivot - 1;
        std::vector<std::uint32_t> codes(free, 0);
        while (true) {
            Vec v(arity, ctx.zero());
            v[pivot] = ctx.one();
            for (int i = 0; i < free; ++i) v[pivot + 1 + i] = ctx.from_code(codes[i]);
            out.emplace_back(v);
            int pos = free - 1;
            while (pos >= 0) {
                if (++codes[pos] < ctx.order()) break;
                codes[pos--] = 0;
            }
            if (pos < 0) break;
        }
    }
    return out;
}

FieldElem dot(const ProjPoint& a, const ProjPoint& b) {
    FieldElem acc = a.coords()[0].ctx().zero();
    for (std::size_t i = 0; i < a.coords().size(); ++i) acc += a.coords()[i] * b.coords()[i];
    return acc;
}

// rank over F_{q^n} of a list of coordinate vectors
int rank_fqn(std::vector<Vec> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    int rank = 0;
    for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
        std::size_t sel = rank;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        FieldElem inv = rows[rank][col].inv();
        for (std::size_t j = 0; j < cols; ++j) rows[rank][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) == rank || rows[i][col].is_zero()) continue;
            FieldElem f = rows[i][col];
            for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::vector<ProjPoint> all_lines(const FieldCtx& ctx) {
    return all_proj_points(ctx, 3);
}

ProjPoint line_through(const ProjPoint& a, const ProjPoint& b) {
    const Vec& u = a.coords();
    const Vec& v = b.coords();
    Vec cross = {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                 u[0] * v[1] - u[1] * v[0]};
    return ProjPoint(cross);
}

bool on_line(const ProjPoint& line, const ProjPoint& p) {
    return dot(line, p).is_zero();
}

std::map<int, long> secant_spectrum(const std::vector<ProjPoint>& pts,
                                    std::uint32_t full_enum_cap) {
    if (pts.empty()) return {};
    const FieldCtx& ctx = pts[0].coords()[0].ctx();
    std::map<int, long> spectrum;
    if (ctx.order() <= full_enum_cap) {
        for (const ProjPoint& line : all_lines(ctx)) {
            int hits = 0;
            for (const ProjPoint& p : pts)
                if (on_line(line, p)) ++hits;
            if (hits > 0) ++spectrum[hits];
        }
        return spectrum;
    }
    // large plane: multisecants from point pairs, tangent count from the
    // incidence total |S| (q^n + 1)
    std::set<ProjPoint> lines;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            lines.insert(line_through(pts[i], pts[j]));
    long multisecant_incidences = 0;
    for (const ProjPoint& line : lines) {
        int hits = 0;
        for (const ProjPoint& p : pts)
            if (on_line(line, p)) ++hits;
        ++spectrum[hits];
        multisecant_incidences += hits;
    }
    long tangents = static_cast<long>(pts.size()) * (ctx.order() + 1) - multisecant_incidences;
    if (tangents > 0) spectrum[1] += tangents;
    return spectrum;
}

std::map<int, long> secant_spectrum(const LinearSetSpec& spec) {
    if (spec.r != 3) throw ArityMismatch("secant spectrum needs r = 3");
    auto pts = points(spec);
    std::vector<ProjPoint> bare;
    for (const auto& wp : pts) bare.push_back(wp.point);
    return secant_spectrum(bare);
}

PlaneReport verify_plane_bound(const LinearSetSpec& spec) {
    const FieldCtx& ctx = spec.u.ctx();
    PlaneReport rep;
    auto spectrum = secant_spectrum(spec);
    rep.size = static_cast<int>(points(spec).size());
    rep.has_q_plus_1_secant = spectrum.count(static_cast<int>(ctx.q()) + 1) > 0;
    if (spec.rank() >= 3) {
        std::uint64_t qk1 = 1, qk2 = 1;
        for (int i = 0; i + 1 < spec.rank(); ++i) qk1 *= ctx.q();
        for (int i = 0; i + 2 < spec.rank(); ++i) qk2 *= ctx.q();
        rep.bound = static_cast<int>(qk1 + qk2) + 1;
    } else {
        // rank <= 2 sets are contained in a line; the two-term bound
        // needs the rank-(k-1) line bound, so it applies for rank >= 3
        rep.bound = rep.size > 0 ? 1 : 0;
    }
    rep.congruence_ok = (rep.size % ctx.q()) == 1 % ctx.q();
    rep.bound_ok = !rep.has_q_plus_1_secant || rep.size >= rep.bound;
    rep.pass = rep.congruence_ok && rep.bound_ok;
    return rep;
}

BlockingReport is_blocking_set(const FieldCtx& ctx, const std::vector<ProjPoint>& pts) {
    BlockingReport rep;
    rep.blocking = true;
    rep.trivial = false;
    const long line_size = static_cast<long>(ctx.order()) + 1;
    for (const ProjPoint& line : all_lines(ctx)) {
        long hits = 0;
        for (const ProjPoint& p : pts)
            if (on_line(line, p)) ++hits;
        if (hits == 0) rep.blocking = false;
        if (hits == line_size) rep.trivial = true;
    }
    rep.small = static_cast<long>(pts.size()) * 2 < 3 * (static_cast<long>(ctx.order()) + 1);
    return rep;
}

int max_linearity_modulus(const FieldCtx& ctx, const std::map<int, long>& spectrum) {
    int best = 0;
    for (int e = 1;; ++e) {
        std::uint64_t pe = 1;
        for (int i = 0; i < e; ++i) pe *= ctx.p();
        if (pe > ctx.order()) break;
        bool ok = true;
        for (const auto& [size, count] : spectrum) {
            if (size == 0) continue;
            if (static_cast<std::uint64_t>(size) % pe != 1 % pe) { ok = false; break; }
        }
        if (!ok) break;
        best = e;
    }
    return best;
}

HyperplaneReport verify_hyperplane_bound(const LinearSetSpec& spec) {
    const FieldCtx& ctx = spec.u.ctx();
    HyperplaneReport rep;
    const int r = spec.r;
    if (r == 3) {
        PlaneReport pr = verify_plane_bound(spec);
        rep.size = pr.size;
        rep.hypothesis = pr.has_q_plus_1_secant;
        rep.bound = pr.bound;
        rep.bound_ok = pr.bound_ok;
        rep.pass = pr.pass;
        return rep;
    }
    if (r != 4 || ctx.order() > 64)
        throw AmbientTooLarge("hyperplane enumeration out of desk range");
    auto wpts = points(spec);
    std::vector<ProjPoint> pts;
    for (const auto& wp : wpts) pts.push_back(wp.point);
    rep.size = static_cast<int>(pts.size());
    // target: (q^{r-1}-1)/(q-1) points spanning the hyperplane
    const std::uint64_t q = ctx.q();
    long target = static_cast<long>((q * q * q - 1) / (q - 1));
    for (const ProjPoint& hyp : all_proj_points(ctx, 4)) {
        std::vector<Vec> on;
        for (const ProjPoint& p : pts)
            if (dot(hyp, p).is_zero()) on.push_back(p.coords());
        if (static_cast<long>(on.size()) == target && rank_fqn(on) == 3) {
            rep.hypothesis = true;
            break;
        }
    }
    std::uint64_t bound = 1, term = 1;
    for (int i = 0; i < spec.rank() - 3; ++i) term *= q;
    for (int j = 0; j < 3; ++j) { bound += term; term *= q; }
    // bound = q^{k-1} + q^{k-2} + q^{k-3} + 1
    rep.bound = static_cast<long>(bound);
    rep.bound_ok = !rep.hypothesis || rep.size >= rep.bound;
    rep.pass = rep.bound_ok;
    return rep;
}

}  // namespace linset
