#pragma once

#include <vector>

#include "symdet/germ.hpp"

namespace symdet {

namespace module_detail {

/// Full canonical minor list of the germ, zeros kept: the ambient rank p and
/// the component pairing of JM(X) and N(X) depend on this fixed list.
inline std::vector<Polynomial> canonical_minor_list(const DeterminantalGerm& g) {
    return symmetric_minors(g.F, g.r + 1);
}

} // namespace module_detail

/// Number of canonical (r+1)-minors: the ambient rank p of the module pair.
inline int ambient_rank(const DeterminantalGerm& g) {
    return static_cast<int>(symmetric_minor_index_pairs(g.n, g.r + 1).size());
}

/// Jacobian module JM(X) in O_X^p: the q columns (dh_1/dz_j, ..., dh_p/dz_j)
/// of the canonical minor list, with base ideal ideal_X.
inline Submodule jacobian_module(const DeterminantalGerm& g) {
    std::vector<Polynomial> h = module_detail::canonical_minor_list(g);
    int p = static_cast<int>(h.size());
    std::vector<FreeModuleElement> gens;
    for (int j = 0; j < g.q; ++j) {
        FreeModuleElement col;
        col.reserve(static_cast<size_t>(p));
        for (int i = 0; i < p; ++i) col.push_back(h[static_cast<size_t>(i)].derivative(j));
        gens.push_back(std::move(col));
    }
    return Submodule(g.ring, p, std::move(gens), g.ideal_X);
}

/// Universal module N(X) = F^*(JM(S_r)): differentiate the generic minors by
/// each a_ij and substitute a_ij -> f_ij(z). Uses the same canonical minor
/// list, so components pair with jacobian_module(g).
inline Submodule n_module(const DeterminantalGerm& g) {
    SymmetricMatrixSpace space = make_symmetric_space(g.n);
    std::vector<Polynomial> H = symmetric_minors(space.generic, g.r + 1);
    int p = static_cast<int>(H.size());
    int N = space.var_count();

    std::vector<Polynomial> images;
    images.reserve(static_cast<size_t>(N));
    for (int i = 0; i < g.n; ++i)
        for (int j = i; j < g.n; ++j)
            images.push_back(g.F[static_cast<size_t>(i)][static_cast<size_t>(j)]);

    std::vector<FreeModuleElement> gens;
    for (int b = 0; b < N; ++b) {
        FreeModuleElement col;
        col.reserve(static_cast<size_t>(p));
        for (int i = 0; i < p; ++i)
            col.push_back(H[static_cast<size_t>(i)].derivative(b).substitute(g.ring, images));
        gens.push_back(std::move(col));
    }
    return Submodule(g.ring, p, std::move(gens), g.ideal_X);
}

/// m_Y * M: all products z_k * (generator of M). The scaling ideal must be
/// generated by single variables (the germ variables defining Y).
inline Submodule scale_by_parameter_ideal(const Submodule& M, const Ideal& m_Y) {
    std::vector<int> vars;
    for (const auto& p : m_Y.gens) {
        if (p.size() != 1 || !p.leading_coefficient().is_one() ||
            p.leading_monomial().pure_power_var() < 0 || p.leading_monomial().degree() != 1)
            throw InputError("scaling ideal must be generated by ring variables");
        vars.push_back(p.leading_monomial().pure_power_var());
    }
    std::vector<FreeModuleElement> gens;
    for (const auto& e : M.gens)
        for (int v : vars) {
            Polynomial zv = Polynomial::variable(M.ring, v);
            FreeModuleElement scaled;
            scaled.reserve(e.size());
            for (const auto& comp : e) scaled.push_back(comp * zv);
            gens.push_back(std::move(scaled));
        }
    return Submodule(M.ring, M.ambient_rank, std::move(gens), M.base);
}

/// Generator matrix (p rows, one column per generator).
inline PolyMatrix generator_matrix(const Submodule& M) {
    PolyMatrix mat(static_cast<size_t>(M.ambient_rank));
    for (auto& row : mat) row.reserve(M.gens.size());
    for (const auto& g : M.gens)
        for (int i = 0; i < M.ambient_rank; ++i)
            mat[static_cast<size_t>(i)].push_back(g[static_cast<size_t>(i)]);
    if (M.gens.empty())
        for (auto& row : mat) row.push_back(Polynomial::zero(M.ring));
    return mat;
}

inline PolyMatrix concat_columns(const PolyMatrix& A, const PolyMatrix& B) {
    PolyMatrix out = A;
    for (size_t i = 0; i < out.size(); ++i)
        out[i].insert(out[i].end(), B[i].begin(), B[i].end());
    return out;
}

/// Largest k with some k-minor nonzero modulo the base ideal: the generic
/// rank proxy used by the Fitting-style agreement test.
inline int detect_generic_rank(const PolyMatrix& mat, const std::optional<Ideal>& base,
                               const Budget& budget = Budget()) {
    int p = static_cast<int>(mat.size());
    int s = p ? static_cast<int>(mat[0].size()) : 0;
    StandardBasis B;
    if (base) B = standard_basis(*base, budget);
    for (int k = std::min(p, s); k >= 1; --k) {
        for (auto& m : all_minors(mat, k)) {
            if (base ? !normal_form(m, B, budget).is_zero() : !m.is_zero()) return k;
        }
    }
    return 0;
}

/// True iff every generator of M reduces to zero against a standard basis of
/// N (+ base relations): componentwise containment M <= N over O_X.
inline bool module_contains(const Submodule& N, const Submodule& M,
                            const Budget& budget = Budget()) {
    StandardBasis B = standard_basis(N, budget);
    if (B.ring == nullptr) { // N is the zero module
        for (const auto& g : M.gens)
            for (const auto& c : g)
                if (!c.is_zero()) return false;
        return true;
    }
    for (const auto& g : M.gens)
        if (!reduces_to_zero(VecPoly::from_components(g), B, budget)) return false;
    return true;
}

/// The pair (M, N) with M <= N agrees off the origin iff the Fitting-style
/// disagreement locus {rank M < rank [M|N]} is supported at the origin: the
/// g-minors of M, saturated by the g-minors of [M|N] (both over the base),
/// must have finite local colength. g is the shared generic rank.
inline bool pair_agrees_off_origin(const Submodule& M, const Submodule& N,
                                   int generic_rank = -1,
                                   const Budget& budget = Budget()) {
    if (!module_contains(N, M, budget))
        throw MathError("pair_agrees_off_origin: M is not contained in N");
    PolyMatrix matM = generator_matrix(M);
    PolyMatrix matMN = concat_columns(matM, generator_matrix(N));
    int g = generic_rank > 0 ? generic_rank : detect_generic_rank(matMN, N.base, budget);
    if (g == 0) return true; // both effectively zero over the base

    std::vector<Polynomial> gensA = M.base ? M.base->gens : std::vector<Polynomial>{};
    for (auto& m : all_minors(matM, g)) gensA.push_back(std::move(m));
    Ideal A(M.ring, std::move(gensA));

    std::vector<Polynomial> gensB = M.base ? M.base->gens : std::vector<Polynomial>{};
    for (auto& m : all_minors(matMN, g)) gensB.push_back(std::move(m));
    Ideal B(M.ring, std::move(gensB));

    Ideal sat = saturation(A, B, budget);
    return support_at_origin(sat, budget);
}

} // namespace symdet
