#pragma once

#include <string>
#include <vector>

#include "symdet/symmetric_space.hpp"

namespace symdet {

/// Symmetric determinantal germ X = F^{-1}(S_r) at the origin of C^q:
/// a symmetric n x n polynomial matrix with F(0) = 0 plus a target rank r.
struct DeterminantalGerm {
    int n = 0;
    int r = 0;
    int q = 0;
    RingPtr ring; // germ variables z_1..z_q, degrevlex
    PolyMatrix F;
    Ideal ideal_X;         // the (r+1)-minors of F
    int expected_dim = 0;  // q - stratum_codim(n, r)
    int local_dim = 0;     // dimension of the germ at 0
    bool has_expected_codim = false;
};

inline void check_symmetric_vanishing(const PolyMatrix& F) {
    size_t n = F.size();
    if (n == 0) throw InputError("empty matrix");
    for (size_t i = 0; i < n; ++i) {
        if (F[i].size() != n) throw InputError("matrix is not square");
        for (size_t j = 0; j < n; ++j) {
            if (F[i][j] != F[j][i]) throw InputError("matrix is not symmetric");
        }
        if (!F[i][i].constant_term().is_zero())
            throw InputError("F(0) != 0 (caller must translate coordinates first)");
        for (size_t j = i + 1; j < n; ++j)
            if (!F[i][j].constant_term().is_zero())
                throw InputError("F(0) != 0 (caller must translate coordinates first)");
    }
}

/// Builds the germ and records whether it has the expected codimension
/// (non-expected codimension is flagged, not silently accepted).
inline DeterminantalGerm pullback_germ(const PolyMatrix& F, int r,
                                       const Budget& budget = Budget()) {
    check_symmetric_vanishing(F);
    int n = static_cast<int>(F.size());
    if (r < 0 || r >= n) throw InputError("target rank out of range");
    DeterminantalGerm g;
    g.n = n;
    g.r = r;
    g.ring = F[0][0].ring();
    g.q = g.ring->nvars();
    g.F = F;
    g.ideal_X = Ideal(g.ring, symmetric_minors(F, r + 1));
    g.expected_dim = g.q - stratum_codim(n, r);
    g.local_dim = dimension_local(g.ideal_X, budget);
    g.has_expected_codim =
        g.expected_dim >= 0 ? (g.local_dim == g.expected_dim) : (g.local_dim <= 0);
    return g;
}

/// Ideals of the chain _0X, _1X, ..., _rX = X (each _iX = F^{-1}(S_i), cut by
/// the (i+1)-minors of F).
inline std::vector<Ideal> strata_chain(const DeterminantalGerm& g) {
    std::vector<Ideal> out;
    out.reserve(static_cast<size_t>(g.r) + 1);
    for (int i = 0; i <= g.r; ++i)
        out.push_back(Ideal(g.ring, symmetric_minors(g.F, i + 1)));
    return out;
}

} // namespace symdet
