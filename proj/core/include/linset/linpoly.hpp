#ifndef LINSET_LINPOLY_HPP
#define LINSET_LINPOLY_HPP

/**
 * Linearized polynomials sum c_i X^{q^i} over F_{q^n}: evaluation,
 * kernels, subspace polynomials, symbolic (Ore) product and right
 * division.
 */

#include <utility>
#include <vector>

#include "linset/fields.hpp"

namespace linset {

struct DivisorZero : Error { using Error::Error; };

class LinPoly {
public:
    LinPoly() : ctx_(nullptr) {}
    explicit LinPoly(const FieldCtx& ctx) : ctx_(&ctx) {}
    /// c_i multiplies X^{q^i}; trailing zeros are stripped.
    LinPoly(const FieldCtx& ctx, std::vector<FieldElem> coeffs);

    static LinPoly zero(const FieldCtx& ctx) { return LinPoly(ctx); }
    /// The identity polynomial X.
    static LinPoly identity(const FieldCtx& ctx);
    /// The monomial c X^{q^i}.
    static LinPoly monomial(const FieldCtx& ctx, FieldElem c, int i);
    /// X^q - X, whose kernel is F_q.
    static LinPoly q_minus_x(const FieldCtx& ctx);
    /// Sum of X^{q^i} for i < n; evaluates to the trace.
    static LinPoly trace_poly(const FieldCtx& ctx);
    /// X^{q^n} - X (symbolic degree n, not reduced).
    static LinPoly xqn_minus_x(const FieldCtx& ctx);

    const FieldCtx& ctx() const { return *ctx_; }
    const std::vector<FieldElem>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Symbolic degree; the zero polynomial has no degree (is_zero first).
    int sym_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    FieldElem coeff(int i) const;

    FieldElem eval(const FieldElem& x) const;

    LinPoly operator+(const LinPoly& o) const;
    LinPoly operator-(const LinPoly& o) const;
    bool operator==(const LinPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LinPoly& o) const { return !(*this == o); }

    /// Folds exponents mod n (valid as a map on F_{q^n}).
    LinPoly reduced() const;

private:
    const FieldCtx* ctx_;
    std::vector<FieldElem> coeffs_;
};

/// Composition reduced mod X^{q^n} - X.
LinPoly sym_mul(const LinPoly& f, const LinPoly& g);

/// Composition in the skew ring, no exponent folding (degrees add).
LinPoly sym_mul_raw(const LinPoly& f, const LinPoly& g);

/// Ore right division: f = sym_mul_raw(q, g) + h with sym deg h < sym deg g.
std::pair<LinPoly, LinPoly> sym_divrem(const LinPoly& f, const LinPoly& g);

/// The F_q-subspace {x : L(x) = 0}, solved as a linear system over F_q.
Subspace kernel(const LinPoly& l);

/// Monic product over all beta in V of (X - beta), returned as a
/// LinPoly of symbolic degree dim V.  V must have arity 1.
LinPoly subspace_poly(const Subspace& v);

}  // namespace linset

#endif
