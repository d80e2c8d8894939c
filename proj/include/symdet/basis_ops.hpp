#pragma once

#include <limits>
#include <string>
#include <vector>

#include "symdet/standard_basis.hpp"

namespace symdet {

struct Colength {
    bool finite = false;
    long long value = 0; // meaningful only when finite

    bool operator==(const Colength& o) const {
        return finite == o.finite && (!finite || value == o.value);
    }
};

namespace ops_detail {

/// Counts monomials outside the leading module, one component at a time.
/// Finite iff every component's leading set contains a pure power of every
/// variable.
inline Colength count_standard_monomials(const std::vector<std::pair<Monomial, int>>& lead,
                                         int nvars, int rank) {
    long long total = 0;
    for (int c = 0; c < rank; ++c) {
        std::vector<const Monomial*> lms;
        for (const auto& [m, comp] : lead) {
            if (comp != c) continue;
            if (m.is_one()) { lms.clear(); lms.push_back(&m); break; }
            lms.push_back(&m);
        }
        if (!lms.empty() && lms[0]->is_one()) continue; // unit component: nothing
        std::vector<int> bound(static_cast<size_t>(nvars), -1);
        for (const auto* m : lms) {
            int v = m->pure_power_var();
            if (v >= 0 && (bound[static_cast<size_t>(v)] < 0 ||
                           (*m)[v] < bound[static_cast<size_t>(v)]))
                bound[static_cast<size_t>(v)] = (*m)[v];
        }
        for (int v = 0; v < nvars; ++v)
            if (bound[static_cast<size_t>(v)] < 0) return {false, 0};

        long long cells = 1;
        for (int v = 0; v < nvars; ++v) {
            cells *= bound[static_cast<size_t>(v)];
            if (cells > 50'000'000)
                throw MathError("standard-monomial enumeration too large");
        }
        std::vector<int> exps(static_cast<size_t>(nvars), 0);
        long long count = 0;
        // odometer over the bounding box
        for (;;) {
            Monomial m(exps);
            bool divisible = false;
            for (const auto* lm : lms)
                if (lm->divides(m)) { divisible = true; break; }
            if (!divisible) ++count;
            int v = 0;
            while (v < nvars) {
                if (++exps[static_cast<size_t>(v)] < bound[static_cast<size_t>(v)]) break;
                exps[static_cast<size_t>(v)] = 0;
                ++v;
            }
            if (v == nvars) break;
        }
        total += count;
    }
    return {true, total};
}

inline const char* aux_var_name() { return "@w"; }

} // namespace ops_detail

inline Colength colength_of_basis(const StandardBasis& B) {
    if (B.ring == nullptr) return {false, 0}; // zero ideal in an unknown ring
    return ops_detail::count_standard_monomials(B.leading_terms(), B.ring->nvars(), B.rank);
}

/// Vector-space dimension of O^p / M at the origin (local = true, Mora) or of
/// the affine quotient (local = false, Groebner).
inline Colength colength(const Ideal& I, bool local, const Budget& budget = Budget()) {
    RingPtr r = with_order(I.ring, local ? MonomialOrder::negdegrevlex(I.ring->nvars())
                                         : MonomialOrder::degrevlex(I.ring->nvars()));
    StandardBasis B = standard_basis(I.mapped_to(r), budget);
    return colength_of_basis(B);
}

inline Colength colength(const Submodule& M, bool local, const Budget& budget = Budget()) {
    RingPtr r = with_order(M.ring, local ? MonomialOrder::negdegrevlex(M.ring->nvars())
                                         : MonomialOrder::degrevlex(M.ring->nvars()));
    Submodule moved(r, M.ambient_rank, {}, std::nullopt);
    for (const auto& g : M.gens) {
        FreeModuleElement e;
        for (const auto& p : g) e.push_back(p.mapped_to(r));
        moved.gens.push_back(std::move(e));
    }
    if (M.base) moved.base = M.base->mapped_to(r);
    StandardBasis B = standard_basis(moved, budget);
    if (B.ring == nullptr) return {false, 0};
    return ops_detail::count_standard_monomials(B.leading_terms(), r->nvars(), M.ambient_rank);
}

/// True iff the germ V(I) is contained in {0}: finite local colength. The
/// unit ideal (empty germ) counts as supported at the origin.
inline bool support_at_origin(const Ideal& I, const Budget& budget = Budget()) {
    return colength(I, /*local=*/true, budget).finite;
}

namespace ops_detail {

inline int dimension_from_leading(const std::vector<std::pair<Monomial, int>>& lead,
                                  int nvars) {
    for (const auto& [m, c] : lead) {
        (void)c;
        if (m.is_one()) return -1; // unit: empty
    }
    if (nvars > 24) throw MathError("too many variables for independent-set search");
    int best = -1;
    for (unsigned mask = 0; mask < (1u << nvars); ++mask) {
        int size = __builtin_popcount(mask);
        if (size <= best) continue;
        std::vector<bool> in(static_cast<size_t>(nvars), false);
        for (int v = 0; v < nvars; ++v)
            if (mask & (1u << v)) in[static_cast<size_t>(v)] = true;
        bool independent = true;
        for (const auto& [m, c] : lead) {
            (void)c;
            if (m.supported_in(in)) { independent = false; break; }
        }
        if (independent) best = size;
    }
    return best;
}

} // namespace ops_detail

/// Krull dimension of the germ of V(I) at the origin, via the leading ideal
/// of a local standard basis; -1 for the (locally) unit ideal.
inline int dimension_local(const Ideal& I, const Budget& budget = Budget()) {
    RingPtr r = with_order(I.ring, MonomialOrder::negdegrevlex(I.ring->nvars()));
    StandardBasis B = standard_basis(I.mapped_to(r), budget);
    return ops_detail::dimension_from_leading(B.leading_terms(), I.ring->nvars());
}

/// Affine Krull dimension of V(I); -1 when empty.
inline int dimension_global(const Ideal& I, const Budget& budget = Budget()) {
    RingPtr r = with_order(I.ring, MonomialOrder::degrevlex(I.ring->nvars()));
    StandardBasis B = standard_basis(I.mapped_to(r), budget);
    return ops_detail::dimension_from_leading(B.leading_terms(), I.ring->nvars());
}

inline Ideal ideal_sum(const Ideal& A, const Ideal& B) {
    std::vector<Polynomial> gens = A.gens;
    for (const auto& p : B.gens) gens.push_back(p.ring().get() == A.ring.get()
                                                    ? p
                                                    : p.mapped_to(A.ring));
    return Ideal(A.ring, std::move(gens));
}

inline Ideal ideal_product(const Ideal& A, const Ideal& B) {
    std::vector<Polynomial> gens;
    for (const auto& a : A.gens)
        for (const auto& b : B.gens) gens.push_back(a * b);
    return Ideal(A.ring, std::move(gens));
}

inline Ideal ideal_power(const Ideal& I, int k) {
    if (k <= 0) return Ideal(I.ring, {Polynomial::constant(I.ring, 1)});
    Ideal r = I;
    for (int i = 1; i < k; ++i) r = ideal_product(r, I);
    return r;
}

/// Exact polynomial division g / f; throws MathError when not divisible.
inline Polynomial exact_divide(const Polynomial& g, const Polynomial& f) {
    if (f.is_zero()) throw MathError("division by the zero polynomial");
    Polynomial h = g;
    Polynomial q(g.ring());
    while (!h.is_zero()) {
        const Term& lt = h.leading_term();
        const Term& lf = f.leading_term();
        if (!lf.mon.divides(lt.mon)) throw MathError("polynomial division is not exact");
        Rational c = lt.coef / lf.coef;
        Monomial m = lf.mon.divide_into(lt.mon);
        q += Polynomial::from_monomial(g.ring(), m, c);
        h -= f.term_multiplied(c, m);
    }
    return q;
}

/// I ∩ J via one auxiliary variable: eliminate w from w*I + (1-w)*J.
inline Ideal intersect(const Ideal& I, const Ideal& J, const Budget& budget = Budget()) {
    if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal(I.ring, {});
    RingPtr ext = prepend_vars(I.ring, {ops_detail::aux_var_name()}, OrderKind::DegRevLex);
    Polynomial w = Polynomial::variable(ext, 0);
    Polynomial one_minus_w = Polynomial::constant(ext, 1) - w;
    std::vector<Polynomial> gens;
    for (const auto& p : I.gens) gens.push_back(w * p.mapped_to(ext));
    for (const auto& p : J.gens) gens.push_back(one_minus_w * p.mapped_to(ext));
    StandardBasis B = standard_basis(Ideal(ext, std::move(gens)), budget);
    std::vector<Polynomial> out;
    for (const auto& e : B.elems) {
        Polynomial p = e.components()[0];
        bool free_of_w = true;
        for (const auto& t : p.terms())
            if (t.mon[0] > 0) { free_of_w = false; break; }
        if (free_of_w) out.push_back(p.mapped_to(I.ring));
    }
    return Ideal(I.ring, std::move(out));
}

/// I : f, by intersecting with (f) and dividing out f.
inline Ideal quotient(const Ideal& I, const Polynomial& f, const Budget& budget = Budget()) {
    if (f.is_zero()) throw InputError("ideal quotient by the zero polynomial");
    if (f.is_constant()) return I;
    Ideal cap = intersect(I, Ideal(I.ring, {f}), budget);
    std::vector<Polynomial> out;
    for (const auto& p : cap.gens) out.push_back(exact_divide(p, f));
    return Ideal(I.ring, std::move(out));
}

inline bool equal_ideals(const Ideal& A, const Ideal& B, const Budget& budget = Budget());

/// I : J = ∩ over the generators of J.
inline Ideal quotient(const Ideal& I, const Ideal& J, const Budget& budget = Budget()) {
    if (J.is_zero_ideal()) throw InputError("ideal quotient by the zero ideal");
    bool first = true;
    Ideal acc(I.ring, {});
    for (const auto& f : J.gens) {
        Ideal qi = quotient(I, f, budget);
        acc = first ? qi : intersect(acc, qi, budget);
        first = false;
    }
    return acc;
}

/// I : J^∞ by iterating the quotient until it stabilizes.
inline Ideal saturation(const Ideal& I, const Ideal& J, const Budget& budget = Budget()) {
    Ideal cur = I;
    for (;;) {
        Ideal next = quotient(cur, J, budget);
        if (equal_ideals(next, cur, budget)) return cur;
        cur = next;
    }
}

/// I : f^∞ in one shot (Rabinowitsch): contract I + (1 - w f) to the w-free part.
inline Ideal saturate_wrt_poly(const Ideal& I, const Polynomial& f,
                               const Budget& budget = Budget()) {
    if (f.is_zero()) throw InputError("saturation by the zero polynomial");
    if (f.is_constant()) return I;
    RingPtr ext = prepend_vars(I.ring, {ops_detail::aux_var_name()}, OrderKind::DegRevLex);
    Polynomial w = Polynomial::variable(ext, 0);
    std::vector<Polynomial> gens;
    for (const auto& p : I.gens) gens.push_back(p.mapped_to(ext));
    gens.push_back(Polynomial::constant(ext, 1) - w * f.mapped_to(ext));
    StandardBasis B = standard_basis(Ideal(ext, std::move(gens)), budget);
    std::vector<Polynomial> out;
    for (const auto& e : B.elems) {
        Polynomial p = e.components()[0];
        bool free_of_w = true;
        for (const auto& t : p.terms())
            if (t.mon[0] > 0) { free_of_w = false; break; }
        if (free_of_w) out.push_back(p.mapped_to(I.ring));
    }
    return Ideal(I.ring, std::move(out));
}

/// f ∈ √I, again via Rabinowitsch.
inline bool radical_contains(const Ideal& I, const Polynomial& f,
                             const Budget& budget = Budget()) {
    if (f.is_zero()) return true;
    RingPtr ext = prepend_vars(I.ring, {ops_detail::aux_var_name()}, OrderKind::DegRevLex);
    std::vector<Polynomial> gens;
    for (const auto& p : I.gens) gens.push_back(p.mapped_to(ext));
    gens.push_back(Polynomial::constant(ext, 1) -
                   Polynomial::variable(ext, 0) * f.mapped_to(ext));
    StandardBasis B = standard_basis(Ideal(ext, std::move(gens)), budget);
    return B.contains_unit();
}

/// I ∩ k[complementary variables], eliminating the given variable indices.
/// Returns an ideal over the subring on the kept variables.
inline Ideal eliminate(const Ideal& I, const std::vector<int>& vars_to_eliminate,
                       const Budget& budget = Budget()) {
    int n = I.ring->nvars();
    std::vector<bool> elim(static_cast<size_t>(n), false);
    for (int v : vars_to_eliminate) {
        if (v < 0 || v >= n) throw InputError("eliminate: variable index out of range");
        elim[static_cast<size_t>(v)] = true;
    }
    std::vector<std::string> head, tail;
    for (int v = 0; v < n; ++v)
        (elim[static_cast<size_t>(v)] ? head : tail).push_back(I.ring->name(v));
    if (head.empty()) return I;
    std::vector<std::string> names = head;
    names.insert(names.end(), tail.begin(), tail.end());
    RingPtr ext = make_ring(names, MonomialOrder::elimination(static_cast<int>(head.size()),
                                                              n, OrderKind::DegRevLex));
    StandardBasis B = standard_basis(I.mapped_to(ext), budget);
    RingPtr sub = make_ring_degrevlex(tail);
    std::vector<Polynomial> out;
    int h = static_cast<int>(head.size());
    for (const auto& e : B.elems) {
        Polynomial p = e.components()[0];
        bool free_of_head = true;
        for (const auto& t : p.terms())
            for (int v = 0; v < h && free_of_head; ++v)
                if (t.mon[v] > 0) free_of_head = false;
        if (free_of_head) out.push_back(p.mapped_to(sub));
    }
    return Ideal(sub, std::move(out));
}

/// Ideal membership through a precomputed basis.
inline bool basis_contains(const StandardBasis& B, const Polynomial& f,
                           const Budget& budget = Budget()) {
    if (f.is_zero()) return true;
    if (B.elems.empty()) return false;
    return reduces_to_zero(VecPoly::from_polynomial(f.mapped_to(B.ring), B.rank), B, budget);
}

inline bool equal_ideals(const Ideal& A, const Ideal& B, const Budget& budget) {
    StandardBasis SA = standard_basis(A, budget);
    StandardBasis SB = standard_basis(B.ring.get() == A.ring.get() ? B : B.mapped_to(A.ring),
                                      budget);
    for (const auto& p : B.gens)
        if (!basis_contains(SA, p.ring().get() == A.ring.get() ? p : p.mapped_to(A.ring),
                            budget))
            return false;
    for (const auto& p : A.gens)
        if (!basis_contains(SB, p, budget)) return false;
    return true;
}

} // namespace symdet
