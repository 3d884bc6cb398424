#ifndef LINSET_SAMPLING_HPP
#define LINSET_SAMPLING_HPP

/// Seeded random generation of F_q-subspaces and linearized maps for
/// the randomized sweeps.

#include <random>

#include "linset/linpoly.hpp"

namespace linset {

/// Uniformly random k-dimensional F_q-subspace of F_{q^n} (rejection
/// sampling on k independent vectors).
inline Subspace random_subspace(const FieldCtx& ctx, int k, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, ctx.order() - 1);
    while (true) {
        std::vector<Vec> vecs;
        for (int i = 0; i < k; ++i) vecs.push_back({ctx.from_code(dist(rng))});
        Subspace s = Subspace::span(ctx, 1, vecs);
        if (s.dim() == k) return s;
    }
}

/// Uniformly random k-dimensional F_q-subspace of F_{q^n}^r.
inline Subspace random_subspace_r(const FieldCtx& ctx, int arity, int k, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, ctx.order() - 1);
    while (true) {
        std::vector<Vec> vecs;
        for (int i = 0; i < k; ++i) {
            Vec v;
            for (int s = 0; s < arity; ++s) v.push_back(ctx.from_code(dist(rng)));
            vecs.push_back(std::move(v));
        }
        Subspace s = Subspace::span(ctx, arity, vecs);
        if (s.dim() == k) return s;
    }
}

/// Random linearized polynomial of symbolic degree < n.
inline LinPoly random_linpoly(const FieldCtx& ctx, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, ctx.order() - 1);
    std::vector<FieldElem> coeffs;
    for (int i = 0; i < ctx.n(); ++i) coeffs.push_back(ctx.from_code(dist(rng)));
    return LinPoly(ctx, std::move(coeffs));
}

}  // namespace linset

#endif
