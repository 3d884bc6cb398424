#ifndef LINSET_ENUMERATION_HPP
#define LINSET_ENUMERATION_HPP

/// Exhaustive enumeration of subspaces and F_q-linear maps for the
/// desk-scale sweeps.

#include <vector>

#include "linset/linpoly.hpp"

namespace linset {

/// All k-dimensional F_q-subspaces of F_{q^n}, deduplicated by
/// canonical form, in a deterministic order.
std::vector<Subspace> all_subspaces(const FieldCtx& ctx, int k);

/// All k-dimensional F_q-subspaces of F_{q^n}^arity, by incremental
/// extension with canonical deduplication.  Desk scale only.
std::vector<Subspace> all_subspaces_r(const FieldCtx& ctx, int arity, int k);

/// The linearized polynomial of symbolic degree < n taking the given
/// values at the given (F_q-independent) points; zero on an extension
/// of the points to a full basis.
LinPoly interpolate_linpoly(const FieldCtx& ctx, const std::vector<FieldElem>& xs,
                            const std::vector<FieldElem>& values);

/// All F_q-linear maps V -> F_{q^n}, one LinPoly per map (the map is
/// determined by the images of a basis of V).
std::vector<LinPoly> all_linear_maps(const Subspace& v);

}  // namespace linset

#endif
