#pragma once

#include <string>
#include <vector>

#include "symdet/germ.hpp"

namespace symdet {

enum class StratumStatus {
    OriginOnly,        // stratum germ supported at the origin: nothing to check off 0
    Pass,              // expected codimension and smooth off the deeper stratum
    WrongDimension,    // stratum preimage has non-expected codimension
    NotSmoothOffDeeper // singular locus escapes the deeper stratum off the origin
};

inline const char* to_string(StratumStatus s) {
    switch (s) {
        case StratumStatus::OriginOnly: return "origin-only";
        case StratumStatus::Pass: return "pass";
        case StratumStatus::WrongDimension: return "wrong-dimension";
        case StratumStatus::NotSmoothOffDeeper: return "not-smooth-off-deeper-stratum";
    }
    return "?";
}

struct StratumAudit {
    int stratum = 0;
    int expected_dim = 0;
    int local_dim = 0;
    StratumStatus status = StratumStatus::Pass;
    bool passed = false;
};

/// Transversality certificate for a germ: sufficient conditions verified
/// stratum by stratum (expected codimension plus smoothness of each stratum
/// preimage off the deeper one, off the origin).
struct SeidsReport {
    bool is_seids = false;
    std::vector<StratumAudit> strata;

    int first_failing_stratum() const {
        for (const auto& a : strata)
            if (!a.passed) return a.stratum;
        return -1;
    }
};

namespace seids_detail {

inline PolyMatrix jacobian(const std::vector<Polynomial>& gens,
                           const std::vector<int>& vars) {
    PolyMatrix J;
    J.reserve(gens.size());
    for (const auto& g : gens) {
        std::vector<Polynomial> row;
        row.reserve(vars.size());
        for (int v : vars) row.push_back(g.derivative(v));
        J.push_back(std::move(row));
    }
    return J;
}

/// Ideal of the locus where V(B) fails to be smooth of codimension c:
/// B plus the c-minors of the Jacobian of its generators.
inline Ideal non_smooth_locus(const Ideal& B, int codim, const std::vector<int>& vars) {
    PolyMatrix J = jacobian(B.gens, vars);
    std::vector<Polynomial> gens = B.gens;
    for (auto& m : all_minors(J, codim)) gens.push_back(std::move(m));
    return Ideal(B.ring, std::move(gens));
}

} // namespace seids_detail

/// Audits the SEIDS property: for every stratum preimage _iX, off the origin,
/// expected codimension and smoothness of _iX away from _{i-1}X. When the
/// deeper stratum is itself supported at the origin the saturation step is a
/// no-op and is skipped.
inline SeidsReport seids_check(const DeterminantalGerm& g, const Budget& budget = Budget()) {
    SeidsReport report;
    report.is_seids = true;
    std::vector<Ideal> chain = strata_chain(g);
    std::vector<int> all_vars;
    for (int v = 0; v < g.q; ++v) all_vars.push_back(v);

    for (int i = 0; i <= g.r; ++i) {
        StratumAudit audit;
        audit.stratum = i;
        int codim = stratum_codim(g.n, i);
        audit.expected_dim = g.q - codim;
        const Ideal& B = chain[static_cast<size_t>(i)];

        Colength cl = colength(B, /*local=*/true, budget);
        if (cl.finite) {
            audit.local_dim = cl.value == 0 ? -1 : 0;
            audit.status = StratumStatus::OriginOnly;
            audit.passed = true;
            report.strata.push_back(audit);
            continue;
        }

        audit.local_dim = dimension_local(B, budget);
        if (audit.local_dim != audit.expected_dim) {
            audit.status = StratumStatus::WrongDimension;
            audit.passed = false;
            report.is_seids = false;
            report.strata.push_back(audit);
            continue;
        }

        Ideal bad = seids_detail::non_smooth_locus(B, codim, all_vars);
        bool deeper_is_finite =
            i == 0 || colength(chain[static_cast<size_t>(i - 1)], true, budget).finite;
        if (!deeper_is_finite)
            bad = saturation(bad, chain[static_cast<size_t>(i - 1)], budget);
        if (support_at_origin(bad, budget)) {
            audit.status = StratumStatus::Pass;
            audit.passed = true;
        } else {
            audit.status = StratumStatus::NotSmoothOffDeeper;
            audit.passed = false;
            report.is_seids = false;
        }
        report.strata.push_back(audit);
    }
    return report;
}

} // namespace symdet
