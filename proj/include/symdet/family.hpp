#pragma once

#include <string>
#include <vector>

#include "symdet/genericity.hpp"
#include "symdet/seids.hpp"

namespace symdet {

/// Family of symmetric determinantal germs F(z, y) over parameters y: the
/// germ variables come first in the ring, the parameters form the suffix.
/// F(0, y) = 0 identically, so the parameter space Y sits inside every
/// stratum preimage as a linear subspace.
struct GermFamily {
    int n = 0;
    int r = 0;
    int q = 0;      // germ variables
    int params = 0; // parameter variables
    RingPtr ring;   // z_1..z_q, y_1..y_k
    PolyMatrix F;
    std::vector<std::vector<Rational>> samples;

    std::vector<int> germ_vars() const {
        std::vector<int> v;
        for (int i = 0; i < q; ++i) v.push_back(i);
        return v;
    }
    std::vector<int> param_vars() const {
        std::vector<int> v;
        for (int i = 0; i < params; ++i) v.push_back(q + i);
        return v;
    }
};

inline GermFamily make_germ_family(const PolyMatrix& F, int r, int q, int params,
                                   std::vector<std::vector<Rational>> samples) {
    size_t n = F.size();
    if (n == 0) throw InputError("empty matrix");
    GermFamily fam;
    fam.n = static_cast<int>(n);
    fam.r = r;
    fam.q = q;
    fam.params = params;
    fam.ring = F[0][0].ring();
    if (fam.ring->nvars() != q + params)
        throw InputError("family ring must have q + parameter variables");
    if (r < 0 || r >= fam.n) throw InputError("target rank out of range");
    for (size_t i = 0; i < n; ++i) {
        if (F[i].size() != n) throw InputError("matrix is not square");
        for (size_t j = 0; j < n; ++j)
            if (F[i][j] != F[j][i]) throw InputError("matrix is not symmetric");
        for (size_t j = i; j < n; ++j)
            for (const auto& t : F[i][j].terms()) {
                int zdeg = 0;
                for (int v = 0; v < q; ++v) zdeg += t.mon[v];
                if (zdeg == 0)
                    throw InputError(
                        "F(0, y) != 0: every entry term must involve a germ variable");
            }
    }
    for (const auto& s : samples)
        if (static_cast<int>(s.size()) != params)
            throw InputError("sample dimension differs from parameter count");
    fam.F = F;
    fam.samples = std::move(samples);
    return fam;
}

/// Specializes the parameters at a sample point, producing an honest germ in
/// the z-variables.
inline DeterminantalGerm specialize(const GermFamily& fam, const std::vector<Rational>& y,
                                    const Budget& budget = Budget()) {
    if (static_cast<int>(y.size()) != fam.params)
        throw InputError("sample dimension differs from parameter count");
    std::vector<std::string> znames;
    for (int v = 0; v < fam.q; ++v) znames.push_back(fam.ring->name(v));
    RingPtr zring = make_ring_degrevlex(znames);
    std::vector<Polynomial> images;
    for (int v = 0; v < fam.q; ++v) images.push_back(Polynomial::variable(zring, v));
    for (int k = 0; k < fam.params; ++k)
        images.push_back(Polynomial::constant(zring, y[static_cast<size_t>(k)]));
    PolyMatrix Fz(fam.F.size());
    for (size_t i = 0; i < fam.F.size(); ++i)
        for (const auto& e : fam.F[i]) Fz[i].push_back(e.substitute(zring, images));
    return pullback_germ(Fz, fam.r, budget);
}

/// One-parameter stabilization F(z) + t*G(z) of a germ, with the audit that
/// the total space is transverse to the rank stratification off a finite set.
struct Stabilization {
    DeterminantalGerm base;
    RingPtr ring; // z_1..z_q, t
    int t_index = 0;
    PolyMatrix F;
    std::vector<Polynomial> minors; // canonical (r+1)-minor list of F over (z,t)

    std::vector<int> germ_vars() const {
        std::vector<int> v;
        for (int i = 0; i < base.q; ++i) v.push_back(i);
        return v;
    }
};

namespace family_detail {

/// Strata of the total space must have expected codimension and be smooth off
/// the deeper stratum, away from a finite set.
inline bool total_space_transverse_off_finite(const Stabilization& st, RandomSource& src,
                                              const Budget& budget) {
    int ambient = st.ring->nvars();
    std::vector<int> all_vars;
    for (int v = 0; v < ambient; ++v) all_vars.push_back(v);
    for (int i = 0; i <= st.base.r; ++i) {
        Ideal Bi(st.ring, symmetric_minors(st.F, i + 1));
        int codim = stratum_codim(st.base.n, i);
        int dim = dimension_global(Bi, budget);
        if (dim <= 0) continue; // failures on a finite set are allowed
        if (dim != ambient - codim) return false;
        Ideal bad = seids_detail::non_smooth_locus(Bi, codim, all_vars);
        if (dimension_global(bad, budget) <= 0) continue;
        if (i == 0) return false;
        Ideal deeper(st.ring, symmetric_minors(st.F, i));
        if (deeper.is_zero_ideal()) return false;
        bad = saturate_wrt_poly(bad, src.combination(deeper.gens), budget);
        if (dimension_global(bad, budget) > 0) return false;
    }
    return true;
}

} // namespace family_detail

/// Builds a stabilization with a random symmetric matrix of affine-linear
/// entries, redrawing (bounded) until the transversality audit passes.
inline Stabilization stabilize(const DeterminantalGerm& g, RandomSource& src,
                               const Budget& budget = Budget()) {
    std::vector<std::string> names = g.ring->names();
    names.push_back("@t");
    RingPtr ring = make_ring_degrevlex(names);
    std::vector<Polynomial> images;
    for (int v = 0; v < g.q; ++v) images.push_back(Polynomial::variable(ring, v));
    Polynomial t = Polynomial::variable(ring, g.q);
    std::vector<int> zvars;
    for (int v = 0; v < g.q; ++v) zvars.push_back(v);

    const int max_retries = 5;
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        Stabilization st;
        st.base = g;
        st.ring = ring;
        st.t_index = g.q;
        st.F.assign(g.F.size(), {});
        PolyMatrix G(g.F.size(), std::vector<Polynomial>(g.F.size(), Polynomial(ring)));
        for (size_t i = 0; i < g.F.size(); ++i)
            for (size_t j = i; j < g.F.size(); ++j) {
                G[i][j] = src.affine_form(ring, zvars);
                G[j][i] = G[i][j];
            }
        for (size_t i = 0; i < g.F.size(); ++i)
            for (size_t j = 0; j < g.F.size(); ++j)
                st.F[i].push_back(g.F[i][j].substitute(ring, images) + t * G[i][j]);
        st.minors = symmetric_minors(st.F, g.r + 1);
        if (family_detail::total_space_transverse_off_finite(st, src, budget)) return st;
    }
    throw GenericityError("stabilization failed the transversality audit after retries");
}

/// Good-family audit, half one: the chosen sample's member is a SEIDS.
inline SeidsReport sample_seids_audit(const GermFamily& fam, const std::vector<Rational>& y,
                                      const Budget& budget = Budget()) {
    return seids_check(specialize(fam, y, budget), budget);
}

/// Good-family audit, half two: fiberwise transversality off the origin holds
/// uniformly near Y. The relative (z-derivative) non-transversality locus of
/// every stratum, saturated by the deeper stratum, must lie inside Y.
inline bool family_relative_transversality(const GermFamily& fam, RandomSource& src,
                                           const Budget& budget = Budget()) {
    std::vector<int> zvars = fam.germ_vars();
    for (int i = 0; i <= fam.r; ++i) {
        Ideal Bi(fam.ring, symmetric_minors(fam.F, i + 1));
        if (Bi.is_zero_ideal()) continue;
        int codim = stratum_codim(fam.n, i);
        // relative audit: fibers of expected dimension q - codim; nothing to
        // check when the fibers' stratum is expected (and verified per
        // sample) to be at most the origin
        if (fam.q - codim <= 0) continue;
        Ideal bad = seids_detail::non_smooth_locus(Bi, codim, zvars);
        if (i > 0) {
            Ideal deeper(fam.ring, symmetric_minors(fam.F, i));
            if (!deeper.is_zero_ideal())
                bad = saturate_wrt_poly(bad, src.combination(deeper.gens), budget);
        }
        for (int v = 0; v < fam.q; ++v)
            if (!radical_contains(bad, Polynomial::variable(fam.ring, v), budget))
                return false;
    }
    return true;
}

} // namespace symdet
