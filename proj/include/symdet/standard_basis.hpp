#pragma once

#include <deque>
#include <set>
#include <tuple>
#include <vector>

#include "symdet/budget.hpp"
#include "symdet/ideal.hpp"
#include "symdet/vecpoly.hpp"

namespace symdet {

/// Standard basis of an ideal or submodule. Under a global order this is a
/// reduced Groebner basis (canonical); under a local order a minimal Mora
/// standard basis (leading module canonical, tails not).
struct StandardBasis {
    RingPtr ring;
    int rank = 1;
    bool local = false;
    std::vector<VecPoly> elems;

    bool contains_unit() const {
        for (const auto& e : elems)
            if (e.leading().mon.is_one()) return true;
        return false;
    }

    std::vector<std::pair<Monomial, int>> leading_terms() const {
        std::vector<std::pair<Monomial, int>> out;
        out.reserve(elems.size());
        for (const auto& e : elems) out.push_back({e.leading().mon, e.leading().comp});
        return out;
    }
};

namespace sb_detail {

inline VecPoly term_multiplied(const VecPoly& f, const Rational& c, const Monomial& m) {
    // subtracting from zero keeps one code path for scaled monomial multiples
    VecPoly zero(f.ring(), f.rank());
    return zero.minus_scaled(-c, m, f);
}

inline VecPoly spoly(const VecPoly& f, const VecPoly& g, const Budget& budget) {
    budget.count_reduction();
    const ModTerm& lf = f.leading();
    const ModTerm& lg = g.leading();
    Monomial u = lf.mon.lcm(lg.mon);
    Monomial mf = lf.mon.divide_into(u);
    Monomial mg = lg.mon.divide_into(u);
    VecPoly a = term_multiplied(f, lg.coef, mf);
    VecPoly s = a.minus_scaled(lf.coef, mg, g);
    s.normalize_primitive();
    return s;
}

/// Fully reduced normal form up to a positive scalar, fraction-free: each
/// step is lc(g)*tail - lc(tail)*(m*g) followed by content normalization.
/// Irreducible terms move to a done list with the cumulative scale recorded,
/// so reduction work only ever touches the active tail. Requires a global
/// order.
inline VecPoly nf_global(const VecPoly& f, const std::vector<VecPoly>& G,
                         const Budget& budget, const VecPoly* skip = nullptr) {
    VecPoly tail = f;
    std::vector<ModTerm> done; // coefficients divided by the scale at freeze time
    Rational scale(1);         // cumulative multiplier applied to the tail
    while (!tail.is_zero()) {
        const ModTerm& lt = tail.leading();
        const VecPoly* red = nullptr;
        for (const auto& g : G) {
            if (&g == skip || g.is_zero()) continue;
            const ModTerm& lg = g.leading();
            if (lg.comp == lt.comp && lg.mon.divides(lt.mon)) {
                red = &g;
                break;
            }
        }
        if (!red) {
            done.push_back({lt.mon, lt.comp, lt.coef / scale});
            tail = tail.drop_leading();
            continue;
        }
        budget.count_reduction();
        const ModTerm& lg = red->leading();
        tail = tail.combine(lg.coef, lt.coef, lg.mon.divide_into(lt.mon), *red);
        scale *= lg.coef;
        scale /= tail.normalize_content();
    }
    VecPoly r = VecPoly::from_sorted_terms(f.ring(), f.rank(), std::move(done));
    r.normalize_primitive();
    return r;
}

/// Fully reduced normal form with exact coefficient division: the honest
/// remainder, no scalar ambiguity. Used by the public normal-form operation.
inline VecPoly nf_global_exact(const VecPoly& f, const std::vector<VecPoly>& G,
                               const Budget& budget) {
    VecPoly h = f;
    size_t frozen = 0;
    while (frozen < h.terms().size()) {
        const ModTerm& lt = h.terms()[frozen];
        const VecPoly* red = nullptr;
        for (const auto& g : G) {
            if (g.is_zero()) continue;
            const ModTerm& lg = g.leading();
            if (lg.comp == lt.comp && lg.mon.divides(lt.mon)) {
                red = &g;
                break;
            }
        }
        if (!red) {
            ++frozen;
            continue;
        }
        budget.count_reduction();
        const ModTerm& lg = red->leading();
        h = h.combine(Rational(1), lt.coef / lg.coef, lg.mon.divide_into(lt.mon), *red);
    }
    return h;
}

/// Mora weak normal form with ecart-based reducer selection; terminates for
/// any order. The returned remainder has an irreducible leading term and is
/// a unit-scalar multiple of f modulo the span of G (locally).
inline VecPoly nf_mora(const VecPoly& f, const std::vector<VecPoly>& G,
                       const Budget& budget) {
    std::vector<const VecPoly*> T;
    std::vector<int> T_ecart;
    T.reserve(G.size());
    for (const auto& g : G) {
        if (g.is_zero()) continue;
        T.push_back(&g);
        T_ecart.push_back(g.ecart());
    }
    std::deque<VecPoly> extras; // deque: stable addresses
    VecPoly h = f;
    while (!h.is_zero()) {
        const ModTerm& lt = h.leading();
        int best = -1;
        for (size_t k = 0; k < T.size(); ++k) {
            const ModTerm& lg = T[k]->leading();
            if (lg.comp != lt.comp || !lg.mon.divides(lt.mon)) continue;
            if (best < 0 || T_ecart[k] < T_ecart[static_cast<size_t>(best)])
                best = static_cast<int>(k);
        }
        if (best < 0) break;
        int h_ecart = h.ecart();
        if (T_ecart[static_cast<size_t>(best)] > h_ecart) {
            extras.push_back(h);
            T.push_back(&extras.back());
            T_ecart.push_back(h_ecart);
        }
        budget.count_reduction();
        const VecPoly& g = *T[static_cast<size_t>(best)];
        const ModTerm& lg = g.leading();
        h = h.combine(lg.coef, lt.coef, lg.mon.divide_into(lt.mon), g);
        h.normalize_primitive();
    }
    return h;
}

inline VecPoly reduce(const VecPoly& f, const std::vector<VecPoly>& G, bool local,
                      const Budget& budget) {
    return local ? nf_mora(f, G, budget) : nf_global(f, G, budget);
}



} // namespace sb_detail

/// Buchberger / Mora standard-basis computation, unified over ideals and
/// submodules (rank-1 elements are the ideal case). Local orders route every
/// reduction through the Mora weak normal form.
inline StandardBasis standard_basis(std::vector<VecPoly> gens, const Budget& budget = Budget()) {
    StandardBasis B;
    std::vector<VecPoly> G;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        g.normalize_primitive();
        if (B.ring == nullptr) {
            B.ring = g.ring();
            B.rank = g.rank();
        }
        G.push_back(std::move(g));
    }
    if (B.ring == nullptr) {
        // zero ideal/module: keep an empty basis (ring unknown is fine for callers
        // that built it from a typed Ideal/Submodule and pass the ring along)
        return B;
    }
    B.local = !B.ring->is_global();
    const bool global = !B.local;

    // inter-reduce the input: redundant generators multiply the pair count
    {
        const auto& ord = B.ring->order();
        std::sort(G.begin(), G.end(), [&](const VecPoly& a, const VecPoly& b) {
            const ModTerm& la = a.leading();
            const ModTerm& lb = b.leading();
            if (la.mon.degree() != lb.mon.degree())
                return la.mon.degree() < lb.mon.degree();
            Cmp c = compare_modterms(ord, la.mon, la.comp, lb.mon, lb.comp);
            if (c != Cmp::Equal) return c == Cmp::Less;
            return a.terms().size() < b.terms().size();
        });
        std::vector<VecPoly> red;
        for (auto& g : G) {
            VecPoly h = red.empty() ? std::move(g)
                                    : sb_detail::reduce(g, red, B.local, budget);
            if (h.is_zero()) continue;
            h.normalize_primitive();
            red.push_back(std::move(h));
        }
        G = std::move(red);
    }

    struct PairKey {
        int deg;
        Monomial lcm;
        int i, j;
        bool operator<(const PairKey& o) const {
            if (deg != o.deg) return deg < o.deg;
            if (!(lcm == o.lcm)) return lcm.lex_less(o.lcm);
            if (i != o.i) return i < o.i;
            return j < o.j;
        }
    };
    std::set<PairKey> queue;
    std::set<std::pair<int, int>> pending;

    auto push_pairs_for = [&](int t) {
        const ModTerm& lt = G[static_cast<size_t>(t)].leading();
        for (int i = 0; i < t; ++i) {
            const ModTerm& li = G[static_cast<size_t>(i)].leading();
            if (li.comp != lt.comp) continue;
            Monomial u = li.mon.lcm(lt.mon);
            queue.insert(PairKey{u.degree(), u, i, t});
            pending.insert({i, t});
        }
    };
    for (int t = 0; t < static_cast<int>(G.size()); ++t) push_pairs_for(t);

    while (!queue.empty()) {
        PairKey pk = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({pk.i, pk.j});
        budget.count_spair();

        const VecPoly& f = G[static_cast<size_t>(pk.i)];
        const VecPoly& g = G[static_cast<size_t>(pk.j)];
        const Monomial& lmf = f.leading().mon;
        const Monomial& lmg = g.leading().mon;

        // Buchberger's product criterion (polynomials, global orders only)
        if (global && B.rank == 1 && lmf.coprime_with(lmg)) continue;

        // chain criterion: some basis element divides the lcm and both
        // flanking pairs were already handled
        Monomial u = lmf.lcm(lmg);
        bool skip = false;
        for (int k = 0; k < static_cast<int>(G.size()) && !skip; ++k) {
            if (k == pk.i || k == pk.j) continue;
            const ModTerm& lk = G[static_cast<size_t>(k)].leading();
            if (lk.comp != f.leading().comp || !lk.mon.divides(u)) continue;
            auto key = [&](int a, int b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (!pending.count(key(pk.i, k)) && !pending.count(key(pk.j, k))) skip = true;
        }
        if (skip) continue;

        VecPoly s = sb_detail::spoly(f, g, budget);
        VecPoly h = sb_detail::reduce(s, G, B.local, budget);
        if (!h.is_zero()) {
            h.normalize_primitive();
            G.push_back(std::move(h));
            push_pairs_for(static_cast<int>(G.size()) - 1);
        }
    }

    // minimalize: keep only elements whose leading term is not a multiple of
    // another kept leading term (divisors have smaller total degree)
    std::vector<int> idx(G.size());
    for (size_t i = 0; i < G.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        const ModTerm& la = G[static_cast<size_t>(a)].leading();
        const ModTerm& lb = G[static_cast<size_t>(b)].leading();
        if (la.mon.degree() != lb.mon.degree()) return la.mon.degree() < lb.mon.degree();
        if (la.comp != lb.comp) return la.comp < lb.comp;
        if (!(la.mon == lb.mon)) return la.mon.lex_less(lb.mon);
        return a < b;
    });
    std::vector<VecPoly> kept;
    for (int i : idx) {
        const ModTerm& li = G[static_cast<size_t>(i)].leading();
        bool divisible = false;
        for (const auto& k : kept) {
            const ModTerm& lk = k.leading();
            if (lk.comp == li.comp && lk.mon.divides(li.mon)) {
                divisible = true;
                break;
            }
        }
        if (!divisible) kept.push_back(G[static_cast<size_t>(i)]);
    }

    if (global) {
        // tail-reduce to the canonical reduced basis
        for (size_t i = 0; i < kept.size(); ++i) {
            VecPoly r = sb_detail::nf_global(kept[i], kept, budget, &kept[i]);
            r.normalize_primitive();
            kept[i] = std::move(r);
        }
    }

    const auto& ord = B.ring->order();
    std::sort(kept.begin(), kept.end(), [&](const VecPoly& a, const VecPoly& b) {
        const ModTerm& la = a.leading();
        const ModTerm& lb = b.leading();
        Cmp c = compare_modterms(ord, la.mon, la.comp, lb.mon, lb.comp);
        if (c != Cmp::Equal) return c == Cmp::Greater;
        return false;
    });
    B.elems = std::move(kept);
    return B;
}

inline StandardBasis standard_basis(const Ideal& I, const Budget& budget = Budget()) {
    StandardBasis B = standard_basis(to_vecpolys(I), budget);
    if (B.ring == nullptr) {
        B.ring = I.ring;
        B.local = !I.ring->is_global();
    }
    return B;
}

inline StandardBasis standard_basis(const Submodule& M, const Budget& budget = Budget()) {
    StandardBasis B = standard_basis(to_vecpolys(M), budget);
    if (B.ring == nullptr) {
        B.ring = M.ring;
        B.rank = M.ambient_rank;
        B.local = !M.ring->is_global();
    }
    return B;
}

/// Normal form against a standard basis: fully reduced (exact coefficients)
/// for global orders, Mora weak normal form for local ones (zero iff f lies
/// in the local span; determined up to a unit, returned primitive).
inline VecPoly normal_form(const VecPoly& f, const StandardBasis& B,
                           const Budget& budget = Budget()) {
    if (B.elems.empty()) return f;
    if (B.local) return sb_detail::nf_mora(f, B.elems, budget);
    return sb_detail::nf_global_exact(f, B.elems, budget);
}

inline Polynomial normal_form(const Polynomial& f, const StandardBasis& B,
                              const Budget& budget = Budget()) {
    VecPoly r = normal_form(VecPoly::from_polynomial(f), B, budget);
    return r.components()[0];
}

inline bool reduces_to_zero(const VecPoly& f, const StandardBasis& B,
                            const Budget& budget = Budget()) {
    return normal_form(f, B, budget).is_zero();
}

} // namespace symdet
