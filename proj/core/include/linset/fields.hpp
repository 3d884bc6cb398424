#ifndef LINSET_FIELDS_HPP
#define LINSET_FIELDS_HPP

/**
 * Exact arithmetic in F_{p^{hn}} with a distinguished subfield
 * F_q = F_{p^h}, plus F_q-subspace linear algebra over the big field.
 *
 * Elements are encoded as an integer code in [0, p^{hn}) whose base-p
 * digits (little-endian) are the coefficients with respect to the root
 * of the context modulus.  Multiplication goes through log/exp tables
 * built once at context construction; the supported field sizes are
 * desk scale (order capped at 2^22).
 */

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace linset {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrime : Error { using Error::Error; };
struct ReducibleModulus : Error { using Error::Error; };
struct DegreeMismatch : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct ArityMismatch : Error { using Error::Error; };
struct DependentConstraints : Error { using Error::Error; };

class FieldElem;
class Subspace;

/// Immutable context for F_{p^{hn}} with subfield F_q, q = p^h.
class FieldCtx {
public:
    /// Constructs the context.  Without an override the modulus is the
    /// lexicographically smallest (low-degree coefficient compared
    /// first) monic irreducible of degree h*n over F_p.
    FieldCtx(int p, int h, int n,
             std::optional<std::vector<int>> modulus_override = std::nullopt);

    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;

    int p() const { return p_; }
    int h() const { return h_; }
    int n() const { return n_; }
    std::uint32_t q() const { return q_; }
    std::uint32_t order() const { return order_; }
    const std::vector<int>& modulus() const { return modulus_; }

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_code(std::uint32_t code) const;
    /// Element p_0 + p_1*root + ... for the base-p digits of `value`.
    FieldElem from_int(std::uint64_t value) const;

    /// The q elements of the subfield F_q, ascending by code.
    const std::vector<std::uint32_t>& subfield_codes() const { return subfield_; }
    /// An F_q-basis of the big field (n elements, first is 1).
    const std::vector<std::uint32_t>& qbasis_codes() const { return qbasis_; }

    // raw code arithmetic, used by FieldElem and the linear algebra
    std::uint32_t add_code(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub_code(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg_code(std::uint32_t a) const;
    std::uint32_t mul_code(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv_code(std::uint32_t a) const;
    std::uint32_t pow_code(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t frob_code(std::uint32_t a, int e = 1) const;  // a^{q^e}

    /// F_q-coordinates of an element with respect to qbasis (n codes in F_q).
    const std::vector<std::uint32_t>& qcoords(std::uint32_t code) const;
    /// Inverse of qcoords.
    std::uint32_t from_qcoords(const std::vector<std::uint32_t>& coords) const;

private:
    void build_tables();
    void build_qbasis();

    int p_, h_, n_;
    std::uint32_t q_, order_;
    std::vector<int> modulus_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::int32_t> log_;
    std::vector<std::uint32_t> frob_;  // x -> x^q
    std::vector<std::uint32_t> subfield_;
    std::vector<std::uint32_t> qbasis_;
    std::vector<std::vector<std::uint32_t>> qcoords_;
};

/// Element of F_{p^{hn}}; carries a pointer to its context, which must
/// outlive the element.
class FieldElem {
public:
    FieldElem() : ctx_(nullptr), code_(0) {}
    FieldElem(const FieldCtx* ctx, std::uint32_t code) : ctx_(ctx), code_(code) {}

    const FieldCtx& ctx() const { return *ctx_; }
    const FieldCtx* ctx_ptr() const { return ctx_; }
    std::uint32_t code() const { return code_; }
    bool is_zero() const { return code_ == 0; }

    FieldElem operator+(const FieldElem& o) const { return {ctx_, ctx_->add_code(code_, o.code_)}; }
    FieldElem operator-(const FieldElem& o) const { return {ctx_, ctx_->sub_code(code_, o.code_)}; }
    FieldElem operator*(const FieldElem& o) const { return {ctx_, ctx_->mul_code(code_, o.code_)}; }
    FieldElem operator-() const { return {ctx_, ctx_->neg_code(code_)}; }
    FieldElem operator/(const FieldElem& o) const {
        return {ctx_, ctx_->mul_code(code_, ctx_->inv_code(o.code_))};
    }
    FieldElem& operator+=(const FieldElem& o) { code_ = ctx_->add_code(code_, o.code_); return *this; }
    FieldElem& operator-=(const FieldElem& o) { code_ = ctx_->sub_code(code_, o.code_); return *this; }
    FieldElem& operator*=(const FieldElem& o) { code_ = ctx_->mul_code(code_, o.code_); return *this; }

    FieldElem inv() const { return {ctx_, ctx_->inv_code(code_)}; }
    FieldElem pow(std::uint64_t e) const { return {ctx_, ctx_->pow_code(code_, e)}; }
    /// x^{q^e}
    FieldElem frobenius(int e = 1) const { return {ctx_, ctx_->frob_code(code_, e)}; }

    bool operator==(const FieldElem& o) const { return code_ == o.code_; }
    bool operator!=(const FieldElem& o) const { return code_ != o.code_; }
    bool operator<(const FieldElem& o) const { return code_ < o.code_; }

private:
    const FieldCtx* ctx_;
    std::uint32_t code_;
};

/// True iff x lies in the distinguished subfield F_q (x^q = x).
bool in_subfield(const FieldElem& x);

/// Tr_{q^n/q}(x) = x + x^q + ... + x^{q^{n-1}}.
FieldElem trace(const FieldElem& x);

/// A vector in F_{q^n}^r.
using Vec = std::vector<FieldElem>;

/// F_q-subspace of F_{q^n}^r in canonical echelon form (with respect
/// to the flattened F_q-coordinate matrix).
class Subspace {
public:
    Subspace() : ctx_(nullptr), arity_(0) {}

    /// Span of the given vectors.  An empty vector list needs the
    /// context and arity spelled out.
    static Subspace span(const FieldCtx& ctx, int arity, const std::vector<Vec>& vectors);

    const FieldCtx& ctx() const { return *ctx_; }
    int arity() const { return arity_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Vec>& basis() const { return basis_; }

    bool contains(const Vec& v) const;
    bool contains_subspace(const Subspace& other) const;
    /// All q^dim vectors, lexicographic in the F_q-coefficient tuple.
    std::vector<Vec> enumerate() const;

    Subspace intersect(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;

    bool operator==(const Subspace& o) const { return arity_ == o.arity_ && rows_ == o.rows_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    /// Flattened F_q-coordinate rows (each of length arity*n), echelonized.
    const std::vector<std::vector<std::uint32_t>>& coord_rows() const { return rows_; }
    static Subspace from_coord_rows(const FieldCtx& ctx, int arity,
                                    std::vector<std::vector<std::uint32_t>> rows);

private:
    const FieldCtx* ctx_;
    int arity_;
    std::vector<Vec> basis_;
    std::vector<std::vector<std::uint32_t>> rows_;
};

/// {x in F_{q^n} : Tr(a x) = 0 for all a in alphas}.  Throws
/// DependentConstraints if the resulting dimension exceeds n - |alphas|.
Subspace trace_kernel_subspace(const FieldCtx& ctx, const std::vector<FieldElem>& alphas);

namespace detail {
/// In-place reduced row echelon form over F_q; rows are flattened
/// coordinate vectors with entries in the subfield.  Returns the rank;
/// zero rows are removed.
int rref_fq(const FieldCtx& ctx, std::vector<std::vector<std::uint32_t>>& rows);
/// Nullspace (over F_q) of the matrix, as echelonized rows.
std::vector<std::vector<std::uint32_t>> nullspace_fq(
    const FieldCtx& ctx, const std::vector<std::vector<std::uint32_t>>& rows, int ncols);
}  // namespace detail

}  // namespace linset

#endif
