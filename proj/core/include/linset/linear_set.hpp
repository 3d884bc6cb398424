#ifndef LINSET_LINEAR_SET_HPP
#define LINSET_LINEAR_SET_HPP

/**
 * F_q-linear sets in PG(1,q^n) and PG(2,q^n): construction from graphs
 * of F_q-linear maps, point lists with weights, direction sets, secant
 * spectra and the size-bound checks.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "linset/linpoly.hpp"

namespace linset {

struct RankTooLarge : Error { using Error::Error; };
struct NoWeightOnePoint : Error { using Error::Error; };
struct AmbientTooLarge : Error { using Error::Error; };

/// Projective point of PG(r-1,q^n): coordinates normalized so the
/// first nonzero entry is 1.
class ProjPoint {
public:
    ProjPoint() = default;
    explicit ProjPoint(const Vec& v);  // normalizes; v must be nonzero

    const Vec& coords() const { return coords_; }
    int arity() const { return static_cast<int>(coords_.size()); }

    bool operator==(const ProjPoint& o) const;
    bool operator<(const ProjPoint& o) const;

private:
    Vec coords_;
};

struct WeightedPoint {
    ProjPoint point;
    int weight;
};

/// Slopes of the directions determined by an affine set; for graphs of
/// F_q-linear maps the slope infinity never occurs.
struct DirectionSet {
    std::set<std::uint32_t> slopes;  // finite slopes, by element code
    bool has_infinity = false;

    std::size_t size() const { return slopes.size() + (has_infinity ? 1 : 0); }
};

/// A linear set L_U given by its defining subspace U of F_{q^n}^r,
/// optionally carrying the (V, f) graph it came from.
struct LinearSetSpec {
    int r = 0;
    Subspace u;
    std::optional<Subspace> graph_v;
    std::optional<LinPoly> graph_f;

    int rank() const { return u.dim(); }
};

/// Builds U = {(x, f(x)) : x in V} in F_{q^n}^2.  Rejects rank > n.
LinearSetSpec from_graph(const Subspace& v, const LinPoly& f);

/// A linear set from an arbitrary subspace of F_{q^n}^r.
LinearSetSpec from_subspace(const Subspace& u);

/// Deduplicated normalized points with their weights.
std::vector<WeightedPoint> points(const LinearSetSpec& spec);

/// dim_q(<v>_{q^n} cap U); zero for non-members.
int weight(const LinearSetSpec& spec, const ProjPoint& p);

/// W = {f(x)/x : x in V*}.
DirectionSet directions(const Subspace& v, const LinPoly& f);

/// The F_q-span of the F_{q^n}-multiples of a projective point
/// (the spread element through it, as a subspace of arity r).
Subspace point_span_subspace(const ProjPoint& p);

struct LineReport {
    int size = 0;
    bool has_weight_one = false;
    int bound = 0;           // q^{k-1} + 1
    bool congruence_ok = false;  // size == 1 mod q
    bool bound_ok = false;       // vacuously true without a weight-one point
    bool pass = false;
};

/// Checks the rank-k line bound and the 1 mod q congruence.
LineReport verify_line_bound(const LinearSetSpec& spec);

/// True iff U is spanned by its weight-one vectors.  Requires at least
/// one weight-one point.
bool span_of_weight_one(const LinearSetSpec& spec);

/// Lines of PG(2,q^n) as normalized dual triples.
std::vector<ProjPoint> all_lines(const FieldCtx& ctx);
/// The line through two distinct points, as its dual triple.
ProjPoint line_through(const ProjPoint& a, const ProjPoint& b);
bool on_line(const ProjPoint& line, const ProjPoint& p);

/// Intersection size -> number of lines, over lines meeting the set in
/// at least one point.  Full line enumeration when the plane is small;
/// above `full_enum_cap` points the multisecants come from point pairs
/// and the tangent count is derived from the incidence count.
std::map<int, long> secant_spectrum(const std::vector<ProjPoint>& pts,
                                    std::uint32_t full_enum_cap = 64);
std::map<int, long> secant_spectrum(const LinearSetSpec& spec);

struct PlaneReport {
    int size = 0;
    bool has_q_plus_1_secant = false;
    int bound = 0;           // q^{k-1} + q^{k-2} + 1
    bool bound_ok = false;   // vacuously true without the hypothesis
    bool congruence_ok = false;
    bool pass = false;
};

PlaneReport verify_plane_bound(const LinearSetSpec& spec);

struct BlockingReport {
    bool blocking = false;
    bool trivial = false;   // contains a line
    bool small = false;     // fewer than 3(q^n+1)/2 points
};

/// Brute-force line check in PG(2,q^n).
BlockingReport is_blocking_set(const FieldCtx& ctx, const std::vector<ProjPoint>& pts);

/// Largest e >= 0 with every secant size == 1 mod p^e.
int max_linearity_modulus(const FieldCtx& ctx, const std::map<int, long>& spectrum);

struct HyperplaneReport {
    int size = 0;
    bool hypothesis = false;  // some hyperplane meets L in exactly
                              // (q^{r-1}-1)/(q-1) points spanning it
    long bound = 0;
    bool bound_ok = false;
    bool pass = false;
};

/// Theorem-style hyperplane bound for r = 3 (and r = 4 when the
/// hyperplane enumeration stays desk scale).
HyperplaneReport verify_hyperplane_bound(const LinearSetSpec& spec);

}  // namespace linset

#endif
