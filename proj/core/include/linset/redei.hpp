#ifndef LINSET_REDEI_HPP
#define LINSET_REDEI_HPP

/**
 * Bivariate Redei-polynomial machinery: R(X,Y) of an affine point set,
 * Euclidean division of X^{q^n} - X by R over F_{q^n}[Y], the H(X,Y)
 * extraction and the associated degree bookkeeping.
 */

#include <map>
#include <utility>
#include <vector>

#include "linset/linpoly.hpp"

namespace linset {

struct DuplicatePoint : Error { using Error::Error; };
struct NotMonic : Error { using Error::Error; };
struct NonSplitting : Error { using Error::Error; };

/// Univariate polynomial in Y over F_{q^n}, ascending coefficients,
/// canonical (no trailing zeros).
class YPoly {
public:
    YPoly() = default;
    YPoly(const FieldCtx& ctx, std::vector<FieldElem> coeffs);
    static YPoly constant(const FieldElem& c);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const std::vector<FieldElem>& coeffs() const { return coeffs_; }
    FieldElem coeff(int i) const;

    YPoly operator+(const YPoly& o) const;
    YPoly operator-(const YPoly& o) const;
    YPoly operator*(const YPoly& o) const;
    YPoly operator-() const;
    bool operator==(const YPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const YPoly& o) const { return !(*this == o); }

    FieldElem eval(const FieldElem& y) const;

private:
    std::vector<FieldElem> coeffs_;
};

/// Bivariate polynomial over F_{q^n}, sparse in X: X-exponent -> YPoly.
struct BiPoly {
    std::map<int, YPoly> by_x_degree;

    void add_term(int x_exp, const YPoly& c);
    void sub_term(int x_exp, const YPoly& c);
    YPoly coeff(int x_exp) const;
    int deg_x() const;      // -1 for zero
    int total_degree() const;
    bool is_zero() const { return by_x_degree.empty(); }
    bool operator==(const BiPoly& o) const { return by_x_degree == o.by_x_degree; }
};

/// An affine point (x, y) standing for <(1, x, y)>.
struct AffinePoint {
    FieldElem x;
    FieldElem y;
};

/// The Redei polynomial R(X,Y) = prod (X - x_i Y + y_i), monic in X.
class RedeiPoly {
public:
    const FieldCtx& ctx() const { return *ctx_; }
    const BiPoly& poly() const { return poly_; }
    int size() const { return size_; }  // |S| = deg_X R
    /// sigma_i(Y), the coefficient of X^{|S|-i}.
    YPoly sigma(int i) const { return poly_.coeff(size_ - i); }

    friend RedeiPoly redei_build(const FieldCtx& ctx, const std::vector<AffinePoint>& points);

private:
    const FieldCtx* ctx_ = nullptr;
    BiPoly poly_;
    int size_ = 0;
};

RedeiPoly redei_build(const FieldCtx& ctx, const std::vector<AffinePoint>& points);

/// Ordinary univariate polynomial in X (ascending coefficients) from
/// substituting Y = y.
std::vector<FieldElem> specialize(const RedeiPoly& r, const FieldElem& y);
std::vector<FieldElem> specialize(const BiPoly& b, const FieldCtx& ctx, const FieldElem& y);

/// Root multiplicities of R(X,y) over F_{q^n}; throws NonSplitting if
/// the specialization does not split.
std::map<std::uint32_t, int> multiplicity_profile(const RedeiPoly& r, const FieldElem& y);

/// Result of dividing X^{q^n} - X by R(X,Y) with X the main variable.
struct DivisionResult {
    const FieldCtx* ctx = nullptr;
    BiPoly quotient;          // Q(X,Y)
    BiPoly remainder;         // r(X,Y), deg_X < deg_X R
    BiPoly h;                 // H = -r - X
    std::map<int, YPoly> h_coeffs;  // nonzero h_i(Y), H = sum h_i(Y) X^{q^n - i}
    int min_nonzero_h_index = -1;   // i_0; -1 when H = 0
    int degx_h = -1;

    /// Total-degree and per-coefficient degree bounds from the division.
    bool degree_ledger_ok(int size) const;
};

DivisionResult divide_xqn(const RedeiPoly& r);

/// True iff nonzero Y-coefficients occur only at X-exponents q^j,
/// 0 <= j <= k, and the constant (in X) coefficient vanishes.
bool check_shape(const RedeiPoly& r, int k);

/// Whether deg_X H is a q-power, plus the exponent.  Cross-validates
/// against the Ore route: H specialized at every y must match the
/// remainder-derived H'_y of the symbolic division of X^{q^n} - X by
/// the specialized (linearized) R.
std::pair<bool, int> degh_is_q_power(const RedeiPoly& r, const DivisionResult& dr);

/// Ordinary polynomial with only q-power exponents -> LinPoly.
LinPoly to_linpoly(const FieldCtx& ctx, const std::vector<FieldElem>& poly);

}  // namespace linset

#endif
