#include "linset/fields.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace linset {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// dense polynomials over F_p, ascending coefficients
using Poly = std::vector<int>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    trim(c);
    return c;
}

// remainder of a by monic b
Poly poly_rem(Poly a, const Poly& b, int p) {
    trim(a);
    while (a.size() >= b.size()) {
        int lead = a.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            int& c = a[shift + i];
            c = ((c - lead * b[i]) % p + p) % p;
        }
        trim(a);
    }
    return a;
}

bool divides(const Poly& d, const Poly& a, int p) {
    return poly_rem(a, d, p).empty();
}

bool is_irreducible(const Poly& f, int p) {
    int deg = static_cast<int>(f.size()) - 1;
    if (deg < 1) return false;
    if (deg == 1) return true;
    // trial division by all monic polynomials of degree 1..deg/2
    for (int d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(p);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly g(d + 1, 0);
            g[d] = 1;
            std::uint64_t t = idx;
            for (int i = 0; i < d; ++i) {
                g[i] = static_cast<int>(t % p);
                t /= p;
            }
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

Poly smallest_irreducible(int deg, int p) {
    std::uint64_t count = 1;
    for (int i = 0; i < deg; ++i) count *= static_cast<std::uint64_t>(p);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        // low-degree-first lexicographic order: c_0 most significant
        Poly f(deg + 1, 0);
        f[deg] = 1;
        std::uint64_t t = idx;
        for (int i = deg - 1; i >= 0; --i) {
            f[i] = static_cast<int>(t % p);
            t /= p;
        }
        if (is_irreducible(f, p)) return f;
    }
    throw Error("no irreducible polynomial found");  // unreachable
}

}  // namespace

FieldCtx::FieldCtx(int p, int h, int n, std::optional<std::vector<int>> modulus_override)
    : p_(p), h_(h), n_(n) {
    if (!is_prime(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
    if (h < 1 || n < 1) throw Error("h and n must be positive");
    int d = h * n;
    std::uint64_t order = 1;
    for (int i = 0; i < d; ++i) {
        order *= static_cast<std::uint64_t>(p);
        if (order > (1u << 22))
            throw Error("field order exceeds the supported desk-scale cap");
    }
    order_ = static_cast<std::uint32_t>(order);
    std::uint64_t q = 1;
    for (int i = 0; i < h; ++i) q *= static_cast<std::uint64_t>(p);
    q_ = static_cast<std::uint32_t>(q);

    if (modulus_override) {
        modulus_ = *modulus_override;
        for (int& c : modulus_) c = ((c % p) + p) % p;
        if (static_cast<int>(modulus_.size()) != d + 1 || modulus_.back() != 1)
            throw DegreeMismatch("modulus must be monic of degree h*n");
        if (!is_irreducible(modulus_, p))
            throw ReducibleModulus("modulus is reducible over F_p");
    } else {
        modulus_ = smallest_irreducible(d, p);
    }
    build_tables();
    build_qbasis();
}

void FieldCtx::build_tables() {
    const int d = h_ * n_;
    // code-level polynomial multiply-reduce, used only to build tables
    auto raw_mul = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
        std::vector<int> da(d), db(d);
        for (int i = 0; i < d; ++i) { da[i] = a % p_; a /= p_; }
        for (int i = 0; i < d; ++i) { db[i] = b % p_; b /= p_; }
        std::vector<int> c(2 * d - 1, 0);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                c[i + j] = (c[i + j] + da[i] * db[j]) % p_;
        for (int k = 2 * d - 2; k >= d; --k) {
            int lead = c[k];
            if (lead == 0) continue;
            c[k] = 0;
            for (int i = 0; i < d; ++i)
                c[k - d + i] = ((c[k - d + i] - lead * modulus_[i]) % p_ + p_) % p_;
        }
        std::uint32_t out = 0;
        for (int i = d - 1; i >= 0; --i) out = out * p_ + c[i];
        return out;
    };

    // find a multiplicative generator
    log_.assign(order_, -1);
    exp_.clear();
    const std::uint32_t m = order_ - 1;
    for (std::uint32_t g = 1; g < order_; ++g) {
        if (order_ == 2) { exp_ = {1}; log_[1] = 0; break; }
        std::uint32_t x = 1;
        std::vector<std::uint32_t> powers;
        powers.reserve(m);
        bool ok = true;
        for (std::uint32_t i = 0; i < m; ++i) {
            powers.push_back(x);
            x = raw_mul(x, g);
            if (x == 1 && i + 1 < m) { ok = false; break; }
        }
        if (ok && x == 1) {
            exp_ = std::move(powers);
            for (std::uint32_t i = 0; i < m; ++i) log_[exp_[i]] = static_cast<std::int32_t>(i);
            break;
        }
    }
    if (exp_.empty()) throw Error("no multiplicative generator found");

    // q-Frobenius table and subfield
    frob_.assign(order_, 0);
    subfield_.clear();
    for (std::uint32_t a = 0; a < order_; ++a) {
        frob_[a] = pow_code(a, q_);
        if (frob_[a] == a) subfield_.push_back(a);
    }
    if (subfield_.size() != q_) throw Error("subfield size mismatch");
}

void FieldCtx::build_qbasis() {
    qbasis_.clear();
    qcoords_.assign(order_, {});
    std::vector<bool> known(order_, false);
    known[0] = true;
    qcoords_[0] = {};
    std::vector<std::uint32_t> spanned = {0};
    for (std::uint32_t e = 1; e < order_; ++e) {
        if (known[e]) continue;
        std::size_t j = qbasis_.size();
        qbasis_.push_back(e);
        std::vector<std::uint32_t> added;
        for (std::uint32_t s : spanned) {
            for (std::uint32_t lam : subfield_) {
                if (lam == 0) continue;
                std::uint32_t v = add_code(s, mul_code(lam, e));
                if (!known[v]) {
                    known[v] = true;
                    qcoords_[v] = qcoords_[s];
                    qcoords_[v].resize(j, 0);
                    qcoords_[v].push_back(lam);
                    added.push_back(v);
                }
            }
        }
        spanned.insert(spanned.end(), added.begin(), added.end());
    }
    if (static_cast<int>(qbasis_.size()) != n_) throw Error("F_q-basis size mismatch");
    for (auto& c : qcoords_) c.resize(n_, 0);
}

FieldElem FieldCtx::zero() const { return {this, 0}; }
FieldElem FieldCtx::one() const { return {this, 1}; }

FieldElem FieldCtx::from_code(std::uint32_t code) const {
    if (code >= order_) throw Error("element code out of range");
    return {this, code};
}

FieldElem FieldCtx::from_int(std::uint64_t value) const {
    return from_code(static_cast<std::uint32_t>(value));
}

std::uint32_t FieldCtx::add_code(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    std::uint32_t out = 0, mult = 1;
    while (a != 0 || b != 0) {
        out += mult * ((a % p_ + b % p_) % p_);
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return out;
}

std::uint32_t FieldCtx::neg_code(std::uint32_t a) const {
    if (p_ == 2) return a;
    std::uint32_t out = 0, mult = 1;
    while (a != 0) {
        out += mult * ((p_ - a % p_) % p_);
        a /= p_;
        mult *= p_;
    }
    return out;
}

std::uint32_t FieldCtx::sub_code(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    return add_code(a, neg_code(b));
}

std::uint32_t FieldCtx::mul_code(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    std::uint64_t e = static_cast<std::uint64_t>(log_[a]) + log_[b];
    const std::uint32_t m = order_ - 1;
    if (e >= m) e -= m;
    return exp_[e];
}

std::uint32_t FieldCtx::inv_code(std::uint32_t a) const {
    if (a == 0) throw DivisionByZero("inverse of zero");
    const std::uint32_t m = order_ - 1;
    return exp_[(m - log_[a]) % m];
}

std::uint32_t FieldCtx::pow_code(std::uint32_t a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    const std::uint32_t m = order_ - 1;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % m)) % m];
}

std::uint32_t FieldCtx::frob_code(std::uint32_t a, int e) const {
    if (e < 0) throw Error("frobenius exponent must be nonnegative");
    std::uint32_t x = a;
    for (int i = 0; i < e % n_; ++i) x = frob_[x];
    return x;
}

const std::vector<std::uint32_t>& FieldCtx::qcoords(std::uint32_t code) const {
    return qcoords_[code];
}

std::uint32_t FieldCtx::from_qcoords(const std::vector<std::uint32_t>& coords) const {
    std::uint32_t out = 0;
    for (std::size_t j = 0; j < coords.size(); ++j)
        out = add_code(out, mul_code(coords[j], qbasis_[j]));
    return out;
}

bool in_subfield(const FieldElem& x) { return x.frobenius(1) == x; }

FieldElem trace(const FieldElem& x) {
    FieldElem t = x.ctx().zero();
    for (int i = 0; i < x.ctx().n(); ++i) t += x.frobenius(i);
    return t;
}

namespace detail {

int rref_fq(const FieldCtx& ctx, std::vector<std::vector<std::uint32_t>>& rows) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows[0].size();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < ncols && pivot_row < rows.size(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[pivot_row], rows[sel]);
        std::uint32_t inv = ctx.inv_code(rows[pivot_row][col]);
        for (std::size_t j = col; j < ncols; ++j)
            rows[pivot_row][j] = ctx.mul_code(rows[pivot_row][j], inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == pivot_row || rows[i][col] == 0) continue;
            std::uint32_t f = rows[i][col];
            for (std::size_t j = col; j < ncols; ++j)
                rows[i][j] = ctx.sub_code(rows[i][j], ctx.mul_code(f, rows[pivot_row][j]));
        }
        ++pivot_row;
    }
    rows.resize(pivot_row);
    return static_cast<int>(pivot_row);
}

std::vector<std::vector<std::uint32_t>> nullspace_fq(
    const FieldCtx& ctx, const std::vector<std::vector<std::uint32_t>>& matrix, int ncols) {
    auto rows = matrix;
    rref_fq(ctx, rows);
    std::vector<int> pivot_col_of_row;
    std::vector<bool> is_pivot(ncols, false);
    for (const auto& row : rows) {
        for (int c = 0; c < ncols; ++c) {
            if (row[c] != 0) {
                pivot_col_of_row.push_back(c);
                is_pivot[c] = true;
                break;
            }
        }
    }
    std::vector<std::vector<std::uint32_t>> basis;
    for (int free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<std::uint32_t> v(ncols, 0);
        v[free_col] = 1;
        for (std::size_t i = 0; i < rows.size(); ++i)
            v[pivot_col_of_row[i]] = ctx.neg_code(rows[i][free_col]);
        basis.push_back(std::move(v));
    }
    rref_fq(ctx, basis);
    return basis;
}

}  // namespace detail

namespace {

std::vector<std::uint32_t> flatten_vec(const FieldCtx& ctx, const Vec& v) {
    std::vector<std::uint32_t> row;
    row.reserve(v.size() * ctx.n());
    for (const FieldElem& e : v) {
        const auto& c = ctx.qcoords(e.code());
        row.insert(row.end(), c.begin(), c.end());
    }
    return row;
}

Vec unflatten_vec(const FieldCtx& ctx, const std::vector<std::uint32_t>& row, int arity) {
    Vec v;
    v.reserve(arity);
    const int n = ctx.n();
    for (int s = 0; s < arity; ++s) {
        std::vector<std::uint32_t> coords(row.begin() + s * n, row.begin() + (s + 1) * n);
        v.push_back(ctx.from_code(ctx.from_qcoords(coords)));
    }
    return v;
}

}  // namespace

Subspace Subspace::span(const FieldCtx& ctx, int arity, const std::vector<Vec>& vectors) {
    std::vector<std::vector<std::uint32_t>> rows;
    for (const Vec& v : vectors) {
        if (static_cast<int>(v.size()) != arity) throw ArityMismatch("vector arity mismatch");
        rows.push_back(flatten_vec(ctx, v));
    }
    detail::rref_fq(ctx, rows);
    return from_coord_rows(ctx, arity, std::move(rows));
}

Subspace Subspace::from_coord_rows(const FieldCtx& ctx, int arity,
                                   std::vector<std::vector<std::uint32_t>> rows) {
    detail::rref_fq(ctx, rows);
    Subspace s;
    s.ctx_ = &ctx;
    s.arity_ = arity;
    s.rows_ = std::move(rows);
    for (const auto& row : s.rows_) s.basis_.push_back(unflatten_vec(ctx, row, arity));
    return s;
}

bool Subspace::contains(const Vec& v) const {
    if (static_cast<int>(v.size()) != arity_) throw ArityMismatch("vector arity mismatch");
    auto row = flatten_vec(*ctx_, v);
    // reduce against the echelon rows
    for (const auto& b : rows_) {
        std::size_t lead = 0;
        while (lead < b.size() && b[lead] == 0) ++lead;
        if (row[lead] != 0) {
            std::uint32_t f = row[lead];
            for (std::size_t j = lead; j < row.size(); ++j)
                row[j] = ctx_->sub_code(row[j], ctx_->mul_code(f, b[j]));
        }
    }
    return std::all_of(row.begin(), row.end(), [](std::uint32_t c) { return c == 0; });
}

bool Subspace::contains_subspace(const Subspace& other) const {
    for (const Vec& v : other.basis_)
        if (!contains(v)) return false;
    return true;
}

std::vector<Vec> Subspace::enumerate() const {
    const auto& sub = ctx_->subfield_codes();
    const int k = dim();
    std::vector<Vec> out;
    out.reserve(1);
    std::vector<std::size_t> idx(k, 0);
    while (true) {
        Vec v(arity_, ctx_->zero());
        for (int i = 0; i < k; ++i) {
            FieldElem lam = ctx_->from_code(sub[idx[i]]);
            for (int s = 0; s < arity_; ++s) v[s] += lam * basis_[i][s];
        }
        out.push_back(std::move(v));
        int pos = k - 1;
        while (pos >= 0) {
            if (++idx[pos] < sub.size()) break;
            idx[pos--] = 0;
        }
        if (pos < 0) break;
    }
    return out;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (arity_ != other.arity_) throw ArityMismatch("subspace arity mismatch");
    auto rows = rows_;
    rows.insert(rows.end(), other.rows_.begin(), other.rows_.end());
    return from_coord_rows(*ctx_, arity_, std::move(rows));
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (arity_ != other.arity_) throw ArityMismatch("subspace arity mismatch");
    // Zassenhaus: rref of [A|A; B|0], zero-left rows give the intersection
    const std::size_t w = static_cast<std::size_t>(arity_) * ctx_->n();
    std::vector<std::vector<std::uint32_t>> big;
    for (const auto& r : rows_) {
        std::vector<std::uint32_t> row(2 * w, 0);
        std::copy(r.begin(), r.end(), row.begin());
        std::copy(r.begin(), r.end(), row.begin() + w);
        big.push_back(std::move(row));
    }
    for (const auto& r : other.rows_) {
        std::vector<std::uint32_t> row(2 * w, 0);
        std::copy(r.begin(), r.end(), row.begin());
        big.push_back(std::move(row));
    }
    detail::rref_fq(*ctx_, big);
    std::vector<std::vector<std::uint32_t>> inter;
    for (const auto& row : big) {
        bool left_zero = std::all_of(row.begin(), row.begin() + w,
                                     [](std::uint32_t c) { return c == 0; });
        if (left_zero)
            inter.emplace_back(row.begin() + w, row.end());
    }
    return from_coord_rows(*ctx_, arity_, std::move(inter));
}

Subspace trace_kernel_subspace(const FieldCtx& ctx, const std::vector<FieldElem>& alphas) {
    const int n = ctx.n();
    std::vector<std::vector<std::uint32_t>> matrix;
    for (const FieldElem& a : alphas) {
        std::vector<std::uint32_t> row(n);
        for (int j = 0; j < n; ++j) {
            FieldElem t = trace(a * ctx.from_code(ctx.qbasis_codes()[j]));
            row[j] = t.code();  // lies in F_q
        }
        matrix.push_back(std::move(row));
    }
    auto null_rows = detail::nullspace_fq(ctx, matrix, n);
    int d = static_cast<int>(null_rows.size());
    if (d > n - static_cast<int>(alphas.size()))
        throw DependentConstraints("trace constraints are F_q-linearly dependent");
    std::vector<Vec> vecs;
    for (const auto& row : null_rows)
        vecs.push_back({ctx.from_code(ctx.from_qcoords(row))});
    return Subspace::span(ctx, 1, vecs);
}

}  // namespace linset
