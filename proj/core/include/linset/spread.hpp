#ifndef LINSET_SPREAD_HPP
#define LINSET_SPREAD_HPP

/**
 * Field reduction: the Desarguesian (n-1)-spread of PG(rn-1,q), the
 * B(.) operator and the explicit spread-side constructions attaining
 * the size bounds.
 */

#include <set>
#include <vector>

#include "linset/linear_set.hpp"

namespace linset {

struct RankOutOfRange : Error { using Error::Error; };
struct UnsupportedQ : Error { using Error::Error; };
struct PointNotInSubspace : Error { using Error::Error; };

/// The (n-1)-spread element through a point of PG(r-1,q^n): the
/// F_q-subspace {lambda v : lambda in F_{q^n}} of F_q-dimension n.
struct SpreadElement {
    ProjPoint base_point;
    Subspace as_subspace;
};

SpreadElement spread_element(const ProjPoint& p);

/// B(mu) = {P : spread_element(P) meets mu nontrivially}, computed by
/// normalizing the nonzero vectors of mu.
std::set<ProjPoint> b_operator(const Subspace& mu);

/// dim_q(mu cap spread_element(P)).
int weight_via_spread(const Subspace& mu, const ProjPoint& p);

/// Rank-k subspace of F_{q^n}^2 whose linear set has q^{k-1}+1 points:
/// a (k-1)-dim piece of the spread element of <(1,0)> extended by (0,1).
Subspace construct_vbtrace(const FieldCtx& ctx, int k);

/// Rank-k subspace of F_{q^n}^3 whose linear set has
/// q^{k-1}+q^{k-2}+1 points.
Subspace construct_vbvlak(const FieldCtx& ctx, int k);

/// The F_{q^2}-rational subplane PG(2,q^2) of PG(2,q^4) as B(mu) for a
/// rank-5 mu.  The context must satisfy n = 4 (so the subfield chain
/// F_q < F_{q^2} < F_{q^4} exists).
Subspace construct_subplane(const FieldCtx& ctx);

/// The rank-6 set of size q^5+q^3+1 in PG(2,q^9) built from a subline
/// PG(1,q^3); needs n = 9.  All points of the part at infinity have
/// weight at least 2.
Subspace construct_ambetant(const FieldCtx& ctx);

/// F_{q^n}-linear projection of pi from <p1> onto the span of the two
/// target vectors; p1 must lie in pi.
Subspace project_from_point(const Subspace& pi, const Vec& p1,
                            const Vec& target1, const Vec& target2);

}  // namespace linset

#endif
