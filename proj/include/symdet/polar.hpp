#pragma once

#include <vector>

#include "symdet/family.hpp"
#include "symdet/modules.hpp"

namespace symdet {

namespace polar_detail {

/// Multiply a polynomial matrix (p x s) by a rational matrix (s x w).
inline PolyMatrix times_rational(const PolyMatrix& M,
                                 const std::vector<std::vector<Rational>>& K) {
    size_t p = M.size();
    size_t s = p ? M[0].size() : 0;
    size_t w = K.empty() ? 0 : K[0].size();
    if (K.size() != s) throw MathError("matrix product shape mismatch");
    RingPtr ring = M[0][0].ring();
    PolyMatrix out(p, std::vector<Polynomial>(w, Polynomial(ring)));
    for (size_t i = 0; i < p; ++i)
        for (size_t j = 0; j < w; ++j) {
            Polynomial acc(ring);
            for (size_t k = 0; k < s; ++k)
                if (!M[i][k].is_zero()) acc += M[i][k].scaled(K[k][j]);
            out[i][j] = std::move(acc);
        }
    return out;
}

inline std::vector<Polynomial> substitute_all(const std::vector<Polynomial>& polys,
                                              const RingPtr& target,
                                              const std::vector<Polynomial>& images) {
    std::vector<Polynomial> out;
    out.reserve(polys.size());
    for (const auto& p : polys) out.push_back(p.substitute(target, images));
    return out;
}

/// Images a_ij -> F[i][j] in row-major upper-triangle order.
inline std::vector<Polynomial> matrix_images(const PolyMatrix& F) {
    std::vector<Polynomial> images;
    size_t n = F.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) images.push_back(F[i][j]);
    return images;
}

} // namespace polar_detail

/// Multiplicity over the parameter line of a curve ideal C in the
/// stabilization ring: components inside the special fiber and the listed
/// side loci are saturated away, then the degree of the branched cover of the
/// curve germ over the t-line is the local colength of C + (t).
inline long long multiplicity_over_parameter(const Ideal& C, int t_index,
                                             const std::vector<Ideal>& kill,
                                             RandomSource& src,
                                             const Budget& budget = Budget()) {
    Polynomial g = Polynomial::variable(C.ring, t_index);
    for (const auto& K : kill) {
        if (K.is_zero_ideal()) continue;
        g = g * src.combination(K.gens);
    }
    // pre-reduce before the (more expensive) saturation
    StandardBasis CB = standard_basis(C, budget);
    std::vector<Polynomial> gens;
    for (const auto& e : CB.elems) gens.push_back(e.components()[0]);
    Ideal Cred(C.ring, std::move(gens));

    Ideal sat = saturate_wrt_poly(Cred, g, budget);
    std::vector<Polynomial> fiber = sat.gens;
    fiber.push_back(Polynomial::variable(C.ring, t_index));
    Colength col = colength(Ideal(C.ring, std::move(fiber)), /*local=*/true, budget);
    if (!col.finite)
        throw MathError("polar locus is not finite over the parameter line");
    return col.value;
}

/// m_d via the relative polar curve of JM_z over the stabilization: critical
/// locus of a generic linear form on the smooth part of the fibers, i.e.
/// fiber equations plus the (codim+1)-minors of the z-Jacobian augmented by
/// the form's differential, saturated by the relative singular locus.
inline long long relative_polar_multiplicity(const Stabilization& st, RandomSource& src,
                                             const Budget& budget = Budget()) {
    int c = stratum_codim(st.base.n, st.base.r);
    std::vector<int> zvars = st.germ_vars();
    PolyMatrix Jz = seids_detail::jacobian(st.minors, zvars);

    Polynomial ell = src.linear_form(st.ring, zvars);
    std::vector<Polynomial> dell;
    for (int v : zvars) dell.push_back(ell.derivative(v));

    // (c+1)-minors of [Jz; dl]. Minors not using the dl row are (c+1)-minors
    // of Jz alone, which vanish identically on the stratified total space;
    // only the dl-row minors carry the critical condition.
    std::vector<Polynomial> gens = st.minors;
    int p = static_cast<int>(Jz.size());
    int q = static_cast<int>(zvars.size());
    PolyMatrix aug = Jz;
    aug.push_back(dell);
    for (const auto& R : index_subsets(p, c))
        for (const auto& C_ : index_subsets(q, c + 1)) {
            std::vector<int> rows = R;
            rows.push_back(p); // the dl row
            Polynomial d = minor_det(aug, rows, C_);
            if (!d.is_zero()) gens.push_back(std::move(d));
        }
    Ideal C(st.ring, std::move(gens));

    // on a stabilization the relative singular locus of the fibers is the
    // deeper stratum preimage
    std::vector<Ideal> kill;
    if (st.base.r > 0)
        kill.push_back(Ideal(st.ring, symmetric_minors(st.F, st.base.r)));
    return multiplicity_over_parameter(C, st.t_index, kill, src, budget);
}

/// Polar multiplicity over the parameter line of a module M given by its
/// generator matrix over the stabilization: rank of g+k-1 generic
/// combinations drops below the generic rank g along the polar of
/// codimension k. Side loci where M itself degenerates are passed as kill
/// ideals.
inline long long module_polar_multiplicity(const Stabilization& st, const PolyMatrix& M,
                                           int generic_rank, int polar_codim,
                                           const std::vector<Ideal>& kill,
                                           RandomSource& src,
                                           const Budget& budget = Budget()) {
    int s = static_cast<int>(M[0].size());
    int w = generic_rank + polar_codim - 1;
    if (w < 1 || w > s) throw MathError("module polar: bad combination count");
    auto K = src.rational_matrix(s, w);
    PolyMatrix W = polar_detail::times_rational(M, K);
    std::vector<Polynomial> gens = st.minors;
    for (auto& m : all_minors(W, generic_rank)) gens.push_back(std::move(m));
    Ideal C(st.ring, std::move(gens));
    return multiplicity_over_parameter(C, st.t_index, kill, src, budget);
}

/// Intersection number f~_y(C^q) . Gamma_d(S_i): the polar of the generic
/// stratum is pulled back along the stabilized family and counted over the
/// parameter line. The polar's rank condition is compressed through a
/// generic flag K: c-minors of (Jacobian of the generic minors) * K.
inline long long intersection_multiplicity(const Stabilization& st, int i, int dcodim,
                                           RandomSource& src,
                                           const Budget& budget = Budget()) {
    int n = st.base.n;
    int c = stratum_codim(n, i);
    std::vector<Polynomial> gens = symmetric_minors(st.F, i + 1); // pullback of S_i
    if (dcodim > 0) {
        SymmetricMatrixSpace space = make_symmetric_space(n);
        std::vector<Polynomial> Ha = symmetric_minors(space.generic, i + 1);
        std::vector<int> avars;
        for (int v = 0; v < space.var_count(); ++v) avars.push_back(v);
        PolyMatrix Ja = seids_detail::jacobian(Ha, avars);
        auto K = src.rational_matrix(space.var_count(), c + dcodim - 1);
        PolyMatrix W = polar_detail::times_rational(Ja, K);
        std::vector<Polynomial> rank_drop = all_minors(W, c);
        std::vector<Polynomial> images = polar_detail::matrix_images(st.F);
        for (auto& m : polar_detail::substitute_all(rank_drop, st.ring, images))
            gens.push_back(std::move(m));
    }
    Ideal P(st.ring, std::move(gens));
    std::vector<Ideal> kill;
    if (i > 0) kill.push_back(Ideal(st.ring, symmetric_minors(st.F, i)));
    return multiplicity_over_parameter(P, st.t_index, kill, src, budget);
}

/// The codimension-dcodim polar variety of the rank stratum S_i inside
/// hom_s(C^n,C^n), with honest saturation by the singular locus S_{i-1}.
/// Gamma_0 is S_i itself by convention.
inline Ideal polar_variety_generic(int n, int i, int dcodim, RandomSource& src,
                                   const Budget& budget = Budget()) {
    if (i < 0 || i >= n) throw InputError("rank bound out of range");
    SymmetricMatrixSpace space = make_symmetric_space(n);
    int c = stratum_codim(n, i);
    int dimS = space.var_count() - c;
    if (dcodim < 0 || dcodim > dimS)
        throw InputError("polar codimension out of range for the stratum");
    std::vector<Polynomial> Ha = symmetric_minors(space.generic, i + 1);
    if (dcodim == 0) return Ideal(space.ring, std::move(Ha));

    std::vector<int> avars;
    for (int v = 0; v < space.var_count(); ++v) avars.push_back(v);
    PolyMatrix Ja = seids_detail::jacobian(Ha, avars);
    auto K = src.rational_matrix(space.var_count(), c + dcodim - 1);
    PolyMatrix W = polar_detail::times_rational(Ja, K);
    std::vector<Polynomial> gens = Ha;
    for (auto& m : all_minors(W, c)) gens.push_back(std::move(m));
    Ideal raw(space.ring, std::move(gens));

    // dcodim > 0 forces i > 0 here: dim S_0 = 0 was rejected above
    Ideal deeper(space.ring, symmetric_minors(space.generic, i));
    Ideal result = saturation(raw, deeper, budget);
    int dim = dimension_global(result, budget);
    if (dim > dimS - dcodim)
        throw GenericityError("polar variety came out too large for a generic flag");
    return result;
}

} // namespace symdet
