#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "symdet/monomial.hpp"
#include "symdet/rational.hpp"
#include "symdet/ring.hpp"

namespace symdet {

struct Term {
    Monomial mon;
    Rational coef;
};

/// Sparse multivariate polynomial over the rationals. Terms are kept sorted
/// strictly descending in the ring's monomial order, with no zero
/// coefficients stored.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }

    static Polynomial constant(RingPtr ring, Rational c) {
        Polynomial p(std::move(ring));
        if (!c.is_zero()) p.t_.push_back({Monomial::one(p.ring_->nvars()), std::move(c)});
        return p;
    }

    static Polynomial variable(const RingPtr& ring, int i, int power = 1) {
        Polynomial p(ring);
        if (i < 0 || i >= ring->nvars()) throw InputError("variable index out of range");
        p.t_.push_back({Monomial::var(ring->nvars(), i, power), Rational(1)});
        return p;
    }

    static Polynomial from_monomial(RingPtr ring, Monomial m, Rational c) {
        Polynomial p(std::move(ring));
        if (!c.is_zero()) p.t_.push_back({std::move(m), std::move(c)});
        return p;
    }

    /// Builds from an unsorted term list, combining duplicates.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms) {
        Polynomial p(std::move(ring));
        const auto& ord = p.ring_->order();
        std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
            return ord.compare(a.mon, b.mon) == Cmp::Greater;
        });
        for (auto& t : terms) {
            if (t.coef.is_zero()) continue;
            if (!p.t_.empty() && p.t_.back().mon == t.mon)
                p.t_.back().coef += t.coef;
            else
                p.t_.push_back(std::move(t));
            if (!p.t_.empty() && p.t_.back().coef.is_zero()) p.t_.pop_back();
        }
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }

    const Term& leading_term() const {
        assert(!t_.empty());
        return t_.front();
    }
    const Monomial& leading_monomial() const { return leading_term().mon; }
    const Rational& leading_coefficient() const { return leading_term().coef; }

    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].mon.is_one()); }

    Rational constant_term() const {
        if (!t_.empty() && t_.back().mon.is_one()) return t_.back().coef;
        return Rational(0);
    }

    int total_degree() const {
        int d = -1;
        for (const auto& t : t_) d = std::max(d, t.mon.degree());
        return d; // -1 for the zero polynomial
    }

    /// Smallest total degree among the terms: the order of the germ at 0.
    int order_at_origin() const {
        int d = -1;
        for (const auto& t : t_) d = (d < 0) ? t.mon.degree() : std::min(d, t.mon.degree());
        return d;
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& t : r.t_) t.coef = -t.coef;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        return merge(a, b, false);
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        return merge(a, b, true);
    }
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

    Polynomial scaled(const Rational& c) const {
        if (c.is_zero()) return Polynomial(ring_);
        Polynomial r(*this);
        for (auto& t : r.t_) t.coef *= c;
        return r;
    }

    /// this * (c * m)
    Polynomial term_multiplied(const Rational& c, const Monomial& m) const {
        if (c.is_zero()) return Polynomial(ring_);
        Polynomial r(ring_);
        r.t_.reserve(t_.size());
        for (const auto& t : t_) r.t_.push_back({t.mon * m, t.coef * c});
        return r; // multiplying by a fixed monomial preserves the term order
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check_same_ring(a, b);
        if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
        if (b.t_.size() == 1) return a.term_multiplied(b.t_[0].coef, b.t_[0].mon);
        if (a.t_.size() == 1) return b.term_multiplied(a.t_[0].coef, a.t_[0].mon);
        const auto* ringp = a.ring_.get();
        auto cmp = [ringp](const Monomial& x, const Monomial& y) {
            return ringp->order().compare(x, y) == Cmp::Greater;
        };
        std::map<Monomial, Rational, decltype(cmp)> acc(cmp);
        for (const auto& ta : a.t_)
            for (const auto& tb : b.t_) {
                Monomial m = ta.mon * tb.mon;
                auto [it, fresh] = acc.emplace(std::move(m), ta.coef * tb.coef);
                if (!fresh) it->second += ta.coef * tb.coef;
            }
        Polynomial r(a.ring_);
        r.t_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!c.is_zero()) r.t_.push_back({m, c});
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial pow(int e) const {
        if (e < 0) throw MathError("negative polynomial power");
        Polynomial r = constant(ring_, 1);
        Polynomial base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = (e >>= 1) ? base * base : base;
        }
        return r;
    }

    bool operator==(const Polynomial& o) const {
        if (t_.size() != o.t_.size()) return false;
        for (size_t i = 0; i < t_.size(); ++i)
            if (t_[i].coef != o.t_[i].coef || !(t_[i].mon == o.t_[i].mon)) return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Formal partial derivative with respect to variable v.
    Polynomial derivative(int v) const {
        if (v < 0 || v >= ring_->nvars()) throw InputError("unknown variable in derivative");
        std::vector<Term> out;
        for (const auto& t : t_) {
            int e = t.mon[v];
            if (e == 0) continue;
            std::vector<int> exps = t.mon.exponents();
            exps[static_cast<size_t>(v)] -= 1;
            out.push_back({Monomial(exps), t.coef * Rational(e)});
        }
        return from_terms(ring_, std::move(out));
    }

    /// Image under the ring map sending variable i to images[i]; all images
    /// must share one target ring.
    Polynomial substitute(const RingPtr& target,
                          const std::vector<Polynomial>& images) const {
        if (static_cast<int>(images.size()) != ring_->nvars())
            throw MathError("substitute: one image per variable required");
        std::vector<std::vector<Polynomial>> powers(images.size());
        auto power_of = [&](int var, int e) -> const Polynomial& {
            auto& tab = powers[static_cast<size_t>(var)];
            if (tab.empty()) tab.push_back(Polynomial::constant(target, 1));
            while (static_cast<int>(tab.size()) <= e)
                tab.push_back(tab.back() * images[static_cast<size_t>(var)]);
            return tab[static_cast<size_t>(e)];
        };
        Polynomial acc(target);
        for (const auto& t : t_) {
            Polynomial prod = Polynomial::constant(target, t.coef);
            for (int v = 0; v < ring_->nvars(); ++v) {
                int e = t.mon[v];
                if (e > 0) prod = prod * power_of(v, e);
            }
            acc += prod;
        }
        return acc;
    }

    /// Moves the polynomial to a ring containing (by name) every variable
    /// occurring in it; used for order changes and ring extensions.
    Polynomial mapped_to(const RingPtr& target) const {
        std::vector<int> where(static_cast<size_t>(ring_->nvars()), -1);
        for (int i = 0; i < ring_->nvars(); ++i)
            where[static_cast<size_t>(i)] = target->find(ring_->name(i));
        std::vector<Term> out;
        out.reserve(t_.size());
        for (const auto& t : t_) {
            std::vector<int> exps(static_cast<size_t>(target->nvars()), 0);
            for (int v = 0; v < ring_->nvars(); ++v) {
                if (t.mon[v] == 0) continue;
                int w = where[static_cast<size_t>(v)];
                if (w < 0)
                    throw MathError("mapped_to: variable " + ring_->name(v) +
                                    " missing in target ring");
                exps[static_cast<size_t>(w)] = t.mon[v];
            }
            out.push_back({Monomial(std::move(exps)), t.coef});
        }
        return from_terms(target, std::move(out));
    }

    /// Scales to integer coefficients with content 1 and positive leading
    /// coefficient; returns zero unchanged.
    Polynomial primitive_part() const {
        if (is_zero()) return *this;
        mpz_class den_lcm = 1, num_gcd = 0;
        for (const auto& t : t_) {
            den_lcm = lcm_z(den_lcm, t.coef.denominator());
            num_gcd = gcd_z(num_gcd, t.coef.numerator());
        }
        Rational scale{den_lcm, num_gcd}; // positive: mpz_gcd is nonnegative
        if (t_.front().coef.sign() < 0) scale = -scale;
        return scaled(scale);
    }

    std::string to_string() const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& t : t_) {
            Rational c = t.coef;
            if (first) {
                if (c.sign() < 0) {
                    os << "-";
                    c = -c;
                }
                first = false;
            } else {
                os << (c.sign() < 0 ? " - " : " + ");
                if (c.sign() < 0) c = -c;
            }
            bool printed_coef = false;
            if (!c.is_one() || t.mon.is_one()) {
                os << c.str();
                printed_coef = true;
            }
            bool first_var = !printed_coef;
            for (int v = 0; v < ring_->nvars(); ++v) {
                int e = t.mon[v];
                if (e == 0) continue;
                if (!first_var || printed_coef) os << "*";
                os << ring_->name(v);
                if (e > 1) os << "^" << e;
                first_var = false;
            }
        }
        return os.str();
    }

private:
    static void check_same_ring(const Polynomial& a, const Polynomial& b) {
        if (a.ring_.get() != b.ring_.get())
            throw MathError("polynomial arithmetic across distinct rings");
    }

    static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
        check_same_ring(a, b);
        Polynomial r(a.ring_);
        r.t_.reserve(a.t_.size() + b.t_.size());
        const auto& ord = a.ring_->order();
        size_t i = 0, j = 0;
        while (i < a.t_.size() && j < b.t_.size()) {
            Cmp c = ord.compare(a.t_[i].mon, b.t_[j].mon);
            if (c == Cmp::Greater) {
                r.t_.push_back(a.t_[i++]);
            } else if (c == Cmp::Less) {
                Term t = b.t_[j++];
                if (subtract) t.coef = -t.coef;
                r.t_.push_back(std::move(t));
            } else {
                Rational coef =
                    subtract ? a.t_[i].coef - b.t_[j].coef : a.t_[i].coef + b.t_[j].coef;
                if (!coef.is_zero()) r.t_.push_back({a.t_[i].mon, std::move(coef)});
                ++i;
                ++j;
            }
        }
        for (; i < a.t_.size(); ++i) r.t_.push_back(a.t_[i]);
        for (; j < b.t_.size(); ++j) {
            Term t = b.t_[j];
            if (subtract) t.coef = -t.coef;
            r.t_.push_back(std::move(t));
        }
        return r;
    }

    RingPtr ring_;
    std::vector<Term> t_;
};

/// Spec-facing derivative by variable name.
inline Polynomial partial_derivative(const Polynomial& p, const std::string& var) {
    int v = p.ring()->find(var);
    if (v < 0) throw InputError("unknown variable: " + var);
    return p.derivative(v);
}

} // namespace symdet
