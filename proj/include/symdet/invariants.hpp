#pragma once

#include <future>
#include <string>
#include <thread>
#include <vector>

#include "symdet/hilbert_samuel.hpp"
#include "symdet/polar.hpp"

namespace symdet {

namespace inv_detail {

struct MdAndIntersection {
    long long m_d = 0;
    long long intersection = 0;
    bool operator==(const MdAndIntersection& o) const {
        return m_d == o.m_d && intersection == o.intersection;
    }
};

/// One validated draw of the (m_d, intersection) pair: the stabilization is
/// shared between the two multiplicities so the identity e + I = m_d refers
/// to one family.
inline MdAndIntersection md_and_intersection_draw(const DeterminantalGerm& g,
                                                  RandomSource& src,
                                                  const Budget& budget) {
    Stabilization st = stabilize(g, src, budget);
    MdAndIntersection out;
    out.m_d = relative_polar_multiplicity(st, src, budget);
    out.intersection = intersection_multiplicity(st, g.r, g.local_dim, src, budget);
    return out;
}

/// Scaled-module generator matrix of m_Y * JM_z over the stabilization:
/// columns z_a * (dh_i/dz_j).
inline PolyMatrix scaled_jm_matrix(const Stabilization& st) {
    std::vector<int> zvars = st.germ_vars();
    PolyMatrix Jz = seids_detail::jacobian(st.minors, zvars);
    size_t p = Jz.size();
    PolyMatrix out(p);
    for (size_t i = 0; i < p; ++i) {
        for (int a : zvars) {
            Polynomial za = Polynomial::variable(st.ring, a);
            for (size_t j = 0; j < zvars.size(); ++j) out[i].push_back(Jz[i][j] * za);
        }
    }
    return out;
}

} // namespace inv_detail

/// m_d(X): multiplicity of the relative polar curve of JM_z over the
/// parameter of a stabilization; the number of critical points a generic
/// linear form has on the smooth part of a generic fiber near the origin.
/// Precondition: the germ is a SEIDS with positive-dimensional X.
inline long long relative_polar_multiplicity_md(const DeterminantalGerm& g,
                                                const GenericityContext& ctx) {
    if (g.local_dim <= 0) return 0;
    return ctx.validated("m_d", [&](RandomSource& src) {
        Stabilization st = stabilize(g, src, ctx.budget());
        return relative_polar_multiplicity(st, src, ctx.budget());
    });
}

/// f(C^q) . Gamma_d(S_r) for a single germ, through its own stabilization.
inline long long intersection_number(const DeterminantalGerm& g,
                                     const GenericityContext& ctx) {
    if (g.local_dim <= 0) {
        Colength c = colength(g.ideal_X, /*local=*/true, ctx.budget());
        return c.finite ? c.value : throw MathError("unexpected infinite colength");
    }
    return ctx.validated("intersection", [&](RandomSource& src) {
        Stabilization st = stabilize(g, src, ctx.budget());
        return intersection_multiplicity(st, g.r, g.local_dim, src, ctx.budget());
    });
}

struct PairMultiplicity {
    long long e = 0;
    long long m_d = 0;
    long long intersection = 0;
    bool hs_oracle_checked = false;
    bool operator==(const PairMultiplicity& o) const {
        return e == o.e && m_d == o.m_d && intersection == o.intersection;
    }
};

/// e(JM(X), N(X)) by the multiplicity-polar identity e = m_d - intersection.
/// In the ideal case (p = 1) with both JM and N m-primary on X the
/// independent Hilbert-Samuel difference oracle must agree.
inline PairMultiplicity e_pair_full(const DeterminantalGerm& g,
                                    const GenericityContext& ctx) {
    PairMultiplicity out;
    if (g.local_dim <= 0) return out;
    inv_detail::MdAndIntersection mi =
        ctx.validated("e_pair", [&](RandomSource& src) {
            return inv_detail::md_and_intersection_draw(g, src, ctx.budget());
        });
    if (mi.m_d < mi.intersection)
        throw MathError("negative pair multiplicity: saturation or genericity defect");
    out.m_d = mi.m_d;
    out.intersection = mi.intersection;
    out.e = mi.m_d - mi.intersection;

    if (ambient_rank(g) == 1) {
        Submodule JM = jacobian_module(g);
        Submodule N = n_module(g);
        auto as_ideal = [&](const Submodule& M) {
            std::vector<Polynomial> gens;
            for (const auto& e : M.gens) gens.push_back(e[0]);
            return Ideal(g.ring, std::move(gens));
        };
        Ideal jm = as_ideal(JM), nn = as_ideal(N);
        bool jm_fin = colength(ideal_sum(jm, g.ideal_X), true, ctx.budget()).finite;
        bool nn_fin = colength(ideal_sum(nn, g.ideal_X), true, ctx.budget()).finite;
        if (jm_fin && nn_fin) {
            long long ejm = hilbert_samuel_multiplicity(jm, &g.ideal_X, ctx.budget());
            long long enn = hilbert_samuel_multiplicity(nn, &g.ideal_X, ctx.budget());
            if (ejm - enn != out.e)
                throw MathError("multiplicity oracle mismatch: polar identity gave " +
                                std::to_string(out.e) + ", Hilbert-Samuel difference " +
                                std::to_string(ejm - enn));
            out.hs_oracle_checked = true;
        }
    }
    return out;
}

inline long long e_pair(const DeterminantalGerm& g, const GenericityContext& ctx) {
    return e_pair_full(g, ctx).e;
}

/// Per-stratum invariant of a family member, Theorem-style:
/// e(m_Y JM(_iX(y)), N(_iX(y))) + f~_y(C^q) . Gamma_{d(i)}(S_i), which is the
/// polar multiplicity of the scaled Jacobian module over a stabilization of
/// the member. Zero-dimensional strata contribute the colength term alone.
struct StratumInvariant {
    int stratum = 0;
    int dim = 0;
    bool zero_dimensional = false;
    long long value = 0;        // the invariant compared across samples
    long long e_term = 0;       // e(m_Y JM, N) (polar route only)
    long long intersection = 0; // intersection / colength term
    bool operator==(const StratumInvariant& o) const {
        return stratum == o.stratum && dim == o.dim &&
               zero_dimensional == o.zero_dimensional && value == o.value &&
               e_term == o.e_term && intersection == o.intersection;
    }
};

inline StratumInvariant stratum_invariant_of_germ(const DeterminantalGerm& member,
                                                  int stratum,
                                                  const GenericityContext& ctx,
                                                  uint64_t sample_tag) {
    DeterminantalGerm sub = pullback_germ(member.F, stratum, ctx.budget());
    StratumInvariant out;
    out.stratum = stratum;
    out.dim = std::max(sub.local_dim, 0);
    if (sub.local_dim <= 0) {
        out.zero_dimensional = true;
        Colength c = colength(sub.ideal_X, /*local=*/true, ctx.budget());
        if (!c.finite) throw MathError("zero-dimensional stratum with infinite colength");
        out.value = out.intersection = c.value;
        return out;
    }
    struct Parts {
        long long scaled_polar;
        long long intersection;
        bool operator==(const Parts& o) const {
            return scaled_polar == o.scaled_polar && intersection == o.intersection;
        }
    };
    Parts parts = ctx.validated(
        "stratum-invariant",
        [&](RandomSource& src) {
            Stabilization st = stabilize(sub, src, ctx.budget());
            int c = stratum_codim(sub.n, stratum);
            PolyMatrix M = inv_detail::scaled_jm_matrix(st);
            std::vector<int> zvars = st.germ_vars();
            std::vector<Polynomial> zgens;
            for (int v : zvars) zgens.push_back(Polynomial::variable(st.ring, v));
            // m_Y * JM degenerates along Y and along the relative singular
            // locus, which on a stabilization is the deeper stratum preimage
            std::vector<Ideal> kill;
            kill.push_back(Ideal(st.ring, std::move(zgens)));
            if (stratum > 0)
                kill.push_back(Ideal(st.ring, symmetric_minors(st.F, stratum)));
            Parts p;
            p.scaled_polar = module_polar_multiplicity(st, M, c, sub.local_dim, kill, src,
                                                       ctx.budget());
            p.intersection =
                intersection_multiplicity(st, stratum, sub.local_dim, src, ctx.budget());
            return p;
        },
        sample_tag, static_cast<uint64_t>(stratum));
    if (parts.scaled_polar < parts.intersection)
        throw MathError("negative scaled pair multiplicity at stratum " +
                        std::to_string(stratum));
    out.value = parts.scaled_polar;
    out.e_term = parts.scaled_polar - parts.intersection;
    out.intersection = parts.intersection;
    return out;
}

inline StratumInvariant stratum_invariant(const GermFamily& fam, int stratum,
                                          size_t sample_idx,
                                          const GenericityContext& ctx) {
    DeterminantalGerm member =
        specialize(fam, fam.samples.at(sample_idx), ctx.budget());
    return stratum_invariant_of_germ(member, stratum, ctx,
                                     static_cast<uint64_t>(sample_idx));
}

/// Per-stratum record of the single-germ invariants (unscaled pair).
struct GermStratumRecord {
    int stratum = 0;
    int dim = 0;
    bool zero_dimensional = false;
    long long colength_term = 0;
    long long m_d = 0;
    long long intersection = 0;
    long long e_pair = 0;
    bool hs_oracle_checked = false;
};

struct GermInvariants {
    SeidsReport audit;
    std::vector<GermStratumRecord> strata;
};

inline GermInvariants germ_invariants(const DeterminantalGerm& g,
                                      const GenericityContext& ctx) {
    GermInvariants out;
    out.audit = seids_check(g, ctx.budget());
    if (!out.audit.is_seids)
        throw MathError("germ is not a SEIDS (stratum " +
                        std::to_string(out.audit.first_failing_stratum()) +
                        " fails the transversality certificate)");
    for (int i = 0; i <= g.r; ++i) {
        GermStratumRecord rec;
        rec.stratum = i;
        DeterminantalGerm sub = i == g.r ? g : pullback_germ(g.F, i, ctx.budget());
        rec.dim = std::max(sub.local_dim, 0);
        if (sub.local_dim <= 0) {
            rec.zero_dimensional = true;
            Colength c = colength(sub.ideal_X, /*local=*/true, ctx.budget());
            if (!c.finite)
                throw MathError("zero-dimensional stratum with infinite colength");
            rec.colength_term = c.value;
        } else {
            GenericityContext sub_ctx(ctx.sub_seed("stratum", static_cast<uint64_t>(i)),
                                      ctx.coefficient_bound(), ctx.resamples(),
                                      ctx.budget());
            PairMultiplicity pm = e_pair_full(sub, sub_ctx);
            rec.m_d = pm.m_d;
            rec.intersection = pm.intersection;
            rec.e_pair = pm.e;
            rec.hs_oracle_checked = pm.hs_oracle_checked;
        }
        out.strata.push_back(rec);
    }
    return out;
}

enum class VerdictKind { Equisingular, NotEquisingular, Indeterminate };

inline const char* to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::Equisingular: return "equisingular";
        case VerdictKind::NotEquisingular: return "not-equisingular";
        case VerdictKind::Indeterminate: return "indeterminate";
    }
    return "?";
}

struct ConstancyCertificate {
    int stratum = 0;
    size_t sample_a = 0;
    size_t sample_b = 0;
    long long value_a = 0;
    long long value_b = 0;
};

struct EquisingularityVerdict {
    VerdictKind kind = VerdictKind::Indeterminate;
    std::string scope = "family"; // or "top-stratum-pair"
    bool good_family = false;
    std::vector<int> strata_audited;
    std::vector<SeidsReport> sample_audits;
    // values[k] = invariants of audited stratum k across samples
    std::vector<std::vector<StratumInvariant>> values;
    std::vector<ConstancyCertificate> certificates;
    std::string failure_reason;
};

struct VerdictOptions {
    bool top_stratum_only = false;
    bool parallel_samples = true;
};

/// Whitney-equisingularity decision for a good family: all per-stratum
/// invariant sequences must be constant across the samples. Families of
/// isolated singularities with smoothings are decided by the top stratum
/// alone; without a smoothing the zero-dimensional deeper stratum's colength
/// joins in.
inline EquisingularityVerdict whitney_verdict(const GermFamily& fam,
                                              const GenericityContext& ctx,
                                              const VerdictOptions& opt = {}) {
    EquisingularityVerdict v;
    if (fam.samples.size() < 2)
        throw InputError("family-check needs at least two samples");

    for (size_t s = 0; s < fam.samples.size(); ++s) {
        SeidsReport rep = sample_seids_audit(fam, fam.samples[s], ctx.budget());
        v.sample_audits.push_back(rep);
        if (!rep.is_seids) {
            v.kind = VerdictKind::Indeterminate;
            v.failure_reason = "sample " + std::to_string(s) +
                               " is not a SEIDS: the family is not good there";
            return v;
        }
    }
    bool relative_ok = ctx.validated("good-family", [&](RandomSource& src) {
        return family_relative_transversality(fam, src, ctx.budget());
    });
    if (!relative_ok) {
        v.kind = VerdictKind::Indeterminate;
        v.failure_reason = "family is not good: fiberwise transversality escapes Y";
        return v;
    }
    v.good_family = true;

    if (opt.top_stratum_only) {
        v.strata_audited = {fam.r};
        v.scope = "top-stratum-pair";
    } else if (0 < fam.r && fam.r < fam.n && is_isolated_singularity(fam.n, fam.r, fam.q)) {
        if (has_smoothing(fam.n, fam.r, fam.q))
            v.strata_audited = {fam.r};
        else
            v.strata_audited = {fam.r - 1, fam.r};
    } else {
        for (int i = 0; i <= fam.r; ++i) v.strata_audited.push_back(i);
    }

    size_t nsamples = fam.samples.size();
    std::vector<std::vector<StratumInvariant>> per_sample(nsamples);
    auto compute_sample = [&](size_t s) {
        std::vector<StratumInvariant> recs;
        DeterminantalGerm member = specialize(fam, fam.samples[s], ctx.budget());
        for (int i : v.strata_audited)
            recs.push_back(
                stratum_invariant_of_germ(member, i, ctx, static_cast<uint64_t>(s)));
        return recs;
    };

    try {
        if (opt.parallel_samples && nsamples > 1 &&
            std::thread::hardware_concurrency() > 1) {
            std::vector<std::future<std::vector<StratumInvariant>>> futs;
            for (size_t s = 0; s < nsamples; ++s)
                futs.push_back(
                    std::async(std::launch::async, [&, s]() { return compute_sample(s); }));
            for (size_t s = 0; s < nsamples; ++s) per_sample[s] = futs[s].get();
        } else {
            for (size_t s = 0; s < nsamples; ++s) per_sample[s] = compute_sample(s);
        }
    } catch (const GenericityError& e) {
        v.kind = VerdictKind::Indeterminate;
        v.failure_reason = e.what();
        return v;
    }

    for (size_t k = 0; k < v.strata_audited.size(); ++k) {
        std::vector<StratumInvariant> row;
        for (size_t s = 0; s < nsamples; ++s) row.push_back(per_sample[s][k]);
        for (size_t s = 1; s < nsamples; ++s) {
            if (row[s].value != row[0].value) {
                v.certificates.push_back(ConstancyCertificate{
                    v.strata_audited[k], 0, s, row[0].value, row[s].value});
                break;
            }
        }
        v.values.push_back(std::move(row));
    }
    v.kind = v.certificates.empty() ? VerdictKind::Equisingular
                                    : VerdictKind::NotEquisingular;
    return v;
}

/// Pullback consistency of polars: Gamma_i(N(X)) computed directly on X and
/// the pullback of Gamma_i(S_r), with a shared generic flag, agree as ideals
/// after saturating both by the degeneracy locus of N(X).
inline bool polar_pullback_agrees(const DeterminantalGerm& g, int polar_codim,
                                  const GenericityContext& ctx) {
    if (polar_codim == 0) return true; // both sides are X itself
    return ctx.validated(
        "polar-pullback",
        [&](RandomSource& src) {
            SymmetricMatrixSpace space = make_symmetric_space(g.n);
            int c = stratum_codim(g.n, g.r);
            int N = space.var_count();
            std::vector<Polynomial> Ha = symmetric_minors(space.generic, g.r + 1);
            std::vector<int> avars;
            for (int v = 0; v < N; ++v) avars.push_back(v);
            PolyMatrix Ja = seids_detail::jacobian(Ha, avars);
            auto K = src.rational_matrix(N, c + polar_codim - 1);

            // upstairs: honest polar of S_r, saturated by S_{r-1}, then pulled back
            PolyMatrix Wa = polar_detail::times_rational(Ja, K);
            std::vector<Polynomial> up = Ha;
            for (auto& m : all_minors(Wa, c)) up.push_back(std::move(m));
            Ideal upstairs(space.ring, std::move(up));
            if (g.r > 0)
                upstairs = saturation(
                    upstairs, Ideal(space.ring, symmetric_minors(space.generic, g.r)),
                    ctx.budget());
            std::vector<Polynomial> images = polar_detail::matrix_images(g.F);
            std::vector<Polynomial> pulled = g.ideal_X.gens;
            for (const auto& p : upstairs.gens)
                pulled.push_back(p.substitute(g.ring, images));
            Ideal A(g.ring, std::move(pulled));

            // downstairs: polar of the module N(X) with the same flag
            Submodule Nmod = n_module(g);
            PolyMatrix Nmat = generator_matrix(Nmod);
            PolyMatrix Wz = polar_detail::times_rational(Nmat, K);
            std::vector<Polynomial> down = g.ideal_X.gens;
            for (auto& m : all_minors(Wz, c)) down.push_back(std::move(m));
            Ideal B(g.ring, std::move(down));

            // common saturation: degeneracy locus of N(X)
            std::vector<Polynomial> deg = g.ideal_X.gens;
            for (auto& m : all_minors(Nmat, c)) deg.push_back(std::move(m));
            Ideal J(g.ring, std::move(deg));
            Ideal satA = saturation(A, J, ctx.budget());
            Ideal satB = saturation(B, J, ctx.budget());
            return equal_ideals(satA, satB, ctx.budget());
        },
        static_cast<uint64_t>(polar_codim));
}

} // namespace symdet
