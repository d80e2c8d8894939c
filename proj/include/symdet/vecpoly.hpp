#pragma once

#include <algorithm>
#include <cassert>
#include <vector>

#include "symdet/polynomial.hpp"

namespace symdet {

struct ModTerm {
    Monomial mon;
    int comp;
    Rational coef;
};

/// Compares module terms: ring order on the monomial, then lower component
/// wins ties (a TOP order, e_0 > e_1 > ...).
inline Cmp compare_modterms(const MonomialOrder& ord, const Monomial& am, int ac,
                            const Monomial& bm, int bc) {
    Cmp c = ord.compare(am, bm);
    if (c != Cmp::Equal) return c;
    if (ac != bc) return ac < bc ? Cmp::Greater : Cmp::Less;
    return Cmp::Equal;
}

/// Element of a free module R^p, stored as a flat term list sorted strictly
/// descending in the module order. Rank 1 doubles as the ideal case.
class VecPoly {
public:
    VecPoly() = default;
    VecPoly(RingPtr ring, int rank) : ring_(std::move(ring)), rank_(rank) {}

    static VecPoly from_polynomial(const Polynomial& p, int rank = 1, int comp = 0) {
        VecPoly v(p.ring(), rank);
        v.t_.reserve(p.size());
        for (const auto& t : p.terms()) v.t_.push_back({t.mon, comp, t.coef});
        return v;
    }

    /// Terms must already be strictly descending in the module order.
    static VecPoly from_sorted_terms(RingPtr ring, int rank, std::vector<ModTerm> terms) {
        VecPoly v(std::move(ring), rank);
        v.t_ = std::move(terms);
        return v;
    }

    static VecPoly from_components(const std::vector<Polynomial>& comps) {
        assert(!comps.empty());
        VecPoly v(comps[0].ring(), static_cast<int>(comps.size()));
        for (int c = 0; c < v.rank_; ++c)
            for (const auto& t : comps[static_cast<size_t>(c)].terms())
                v.t_.push_back({t.mon, c, t.coef});
        v.sort_terms();
        return v;
    }

    std::vector<Polynomial> components() const {
        std::vector<std::vector<Term>> buckets(static_cast<size_t>(rank_));
        for (const auto& t : t_)
            buckets[static_cast<size_t>(t.comp)].push_back({t.mon, t.coef});
        std::vector<Polynomial> out;
        out.reserve(static_cast<size_t>(rank_));
        for (auto& b : buckets) out.push_back(Polynomial::from_terms(ring_, std::move(b)));
        return out;
    }

    const RingPtr& ring() const { return ring_; }
    int rank() const { return rank_; }
    bool is_zero() const { return t_.empty(); }
    const std::vector<ModTerm>& terms() const { return t_; }

    const ModTerm& leading() const {
        assert(!t_.empty());
        return t_.front();
    }

    /// Ecart drives Mora's reducer selection: total spread between the top
    /// degree and the leading monomial's degree.
    int ecart() const {
        assert(!t_.empty());
        int maxdeg = 0;
        for (const auto& t : t_) maxdeg = std::max(maxdeg, t.mon.degree());
        return maxdeg - t_.front().mon.degree();
    }

    VecPoly scaled(const Rational& c) const {
        VecPoly r(*this);
        for (auto& t : r.t_) t.coef *= c;
        return r;
    }

    /// a * this - b * (m * g), merged in module order. With a = 1 this is a
    /// plain reduction step; a = lc(g) gives the fraction-free pseudo-step.
    VecPoly combine(const Rational& a, const Rational& b, const Monomial& m,
                    const VecPoly& g) const {
        assert(ring_.get() == g.ring_.get() && rank_ == g.rank_);
        VecPoly r(ring_, rank_);
        r.t_.reserve(t_.size() + g.t_.size());
        const auto& ord = ring_->order();
        size_t i = 0, j = 0;
        while (i < t_.size() && j < g.t_.size()) {
            Monomial gm = g.t_[j].mon * m;
            Cmp cv = compare_modterms(ord, t_[i].mon, t_[i].comp, gm, g.t_[j].comp);
            if (cv == Cmp::Greater) {
                r.t_.push_back({t_[i].mon, t_[i].comp, a * t_[i].coef});
                ++i;
            } else if (cv == Cmp::Less) {
                r.t_.push_back({std::move(gm), g.t_[j].comp, -(b * g.t_[j].coef)});
                ++j;
            } else {
                Rational coef = a * t_[i].coef - b * g.t_[j].coef;
                if (!coef.is_zero()) r.t_.push_back({t_[i].mon, t_[i].comp, std::move(coef)});
                ++i;
                ++j;
            }
        }
        for (; i < t_.size(); ++i)
            r.t_.push_back({t_[i].mon, t_[i].comp, a * t_[i].coef});
        for (; j < g.t_.size(); ++j)
            r.t_.push_back({g.t_[j].mon * m, g.t_[j].comp, -(b * g.t_[j].coef)});
        return r;
    }

    /// this - (c * m) * g, merged in module order.
    VecPoly minus_scaled(const Rational& c, const Monomial& m, const VecPoly& g) const {
        return combine(Rational(1), c, m, g);
    }

    VecPoly drop_leading() const {
        VecPoly r(ring_, rank_);
        r.t_.assign(t_.begin() + 1, t_.end());
        return r;
    }

    /// Scales to coprime integer coefficients with positive leading sign.
    void normalize_primitive() {
        if (t_.empty()) return;
        mpz_class den_lcm = 1, num_gcd = 0;
        for (const auto& t : t_) {
            den_lcm = lcm_z(den_lcm, t.coef.denominator());
            num_gcd = gcd_z(num_gcd, t.coef.numerator());
        }
        Rational scale{den_lcm, num_gcd};
        if (t_.front().coef.sign() < 0) scale = -scale;
        if (scale.is_one()) return;
        for (auto& t : t_) t.coef *= scale;
    }

    /// Divides out the rational content (making coefficients coprime
    /// integers, leading sign positive) and returns the applied multiplier's
    /// inverse: old = returned * new. Returns 1 for the zero element.
    Rational normalize_content() {
        if (t_.empty()) return Rational(1);
        mpz_class den_lcm = 1, num_gcd = 0;
        for (const auto& t : t_) {
            den_lcm = lcm_z(den_lcm, t.coef.denominator());
            num_gcd = gcd_z(num_gcd, t.coef.numerator());
        }
        Rational scale{den_lcm, num_gcd};
        if (t_.front().coef.sign() < 0) scale = -scale;
        if (!scale.is_one())
            for (auto& t : t_) t.coef *= scale;
        return scale.inverse();
    }

    /// Scales so the leading coefficient is exactly 1.
    void make_monic() {
        if (t_.empty()) return;
        Rational inv = t_.front().coef.inverse();
        if (inv.is_one()) return;
        for (auto& t : t_) t.coef *= inv;
    }

    bool operator==(const VecPoly& o) const {
        if (t_.size() != o.t_.size()) return false;
        for (size_t i = 0; i < t_.size(); ++i)
            if (t_[i].comp != o.t_[i].comp || t_[i].coef != o.t_[i].coef ||
                !(t_[i].mon == o.t_[i].mon))
                return false;
        return true;
    }

private:
    void sort_terms() {
        const auto& ord = ring_->order();
        std::sort(t_.begin(), t_.end(), [&](const ModTerm& a, const ModTerm& b) {
            return compare_modterms(ord, a.mon, a.comp, b.mon, b.comp) == Cmp::Greater;
        });
    }

    RingPtr ring_;
    int rank_ = 1;
    std::vector<ModTerm> t_;
};

} // namespace symdet
