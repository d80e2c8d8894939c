#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "symdet/errors.hpp"

namespace symdet {

/// Exponent vector of a power product; length equals the ambient ring's
/// variable count. Stored inline (no heap) with the total degree cached;
/// rings are capped at kMaxVars variables.
class Monomial {
public:
    static constexpr int kMaxVars = 16;

    Monomial() = default;
    explicit Monomial(int nvars) : n_(check_nvars(nvars)) { e_.fill(0); }
    explicit Monomial(const std::vector<int>& exps) : n_(check_nvars(static_cast<int>(exps.size()))) {
        e_.fill(0);
        int d = 0;
        for (int i = 0; i < n_; ++i) {
            e_[static_cast<size_t>(i)] = static_cast<int16_t>(exps[static_cast<size_t>(i)]);
            d += exps[static_cast<size_t>(i)];
        }
        deg_ = static_cast<int16_t>(d);
    }

    static Monomial one(int nvars) { return Monomial(nvars); }
    static Monomial var(int nvars, int i, int power = 1) {
        Monomial m(nvars);
        m.e_[static_cast<size_t>(i)] = static_cast<int16_t>(power);
        m.deg_ = static_cast<int16_t>(power);
        return m;
    }

    int nvars() const { return n_; }
    int degree() const { return deg_; }
    int operator[](int i) const { return e_[static_cast<size_t>(i)]; }
    bool is_one() const { return deg_ == 0; }

    std::vector<int> exponents() const {
        return std::vector<int>(e_.begin(), e_.begin() + n_);
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (int i = 0; i < n_; ++i) r.e_[static_cast<size_t>(i)] += o.e_[static_cast<size_t>(i)];
        r.deg_ = static_cast<int16_t>(deg_ + o.deg_);
        return r;
    }

    bool divides(const Monomial& o) const {
        if (deg_ > o.deg_) return false;
        for (int i = 0; i < n_; ++i)
            if (e_[static_cast<size_t>(i)] > o.e_[static_cast<size_t>(i)]) return false;
        return true;
    }

    /// o / *this; caller must ensure divisibility.
    Monomial divide_into(const Monomial& o) const {
        Monomial r(o);
        for (int i = 0; i < n_; ++i) r.e_[static_cast<size_t>(i)] -= e_[static_cast<size_t>(i)];
        r.deg_ = static_cast<int16_t>(o.deg_ - deg_);
        return r;
    }

    Monomial lcm(const Monomial& o) const {
        Monomial r(*this);
        int d = 0;
        for (int i = 0; i < n_; ++i) {
            r.e_[static_cast<size_t>(i)] =
                std::max(e_[static_cast<size_t>(i)], o.e_[static_cast<size_t>(i)]);
            d += r.e_[static_cast<size_t>(i)];
        }
        r.deg_ = static_cast<int16_t>(d);
        return r;
    }

    bool coprime_with(const Monomial& o) const {
        for (int i = 0; i < n_; ++i)
            if (e_[static_cast<size_t>(i)] > 0 && o.e_[static_cast<size_t>(i)] > 0) return false;
        return true;
    }

    /// Index of the unique variable if this is a pure power x_i^k (k >= 1),
    /// -1 otherwise.
    int pure_power_var() const {
        int found = -1;
        for (int i = 0; i < n_; ++i) {
            if (e_[static_cast<size_t>(i)] > 0) {
                if (found >= 0) return -1;
                found = i;
            }
        }
        return found;
    }

    /// True if every variable occurring here lies in the given set.
    bool supported_in(const std::vector<bool>& vars) const {
        for (int i = 0; i < n_; ++i)
            if (e_[static_cast<size_t>(i)] > 0 && !vars[static_cast<size_t>(i)]) return false;
        return true;
    }

    /// Plain exponent-lexicographic comparison, as a deterministic tiebreak.
    bool lex_less(const Monomial& o) const {
        for (int i = 0; i < n_; ++i)
            if (e_[static_cast<size_t>(i)] != o.e_[static_cast<size_t>(i)])
                return e_[static_cast<size_t>(i)] < o.e_[static_cast<size_t>(i)];
        return false;
    }

    bool operator==(const Monomial& o) const {
        if (n_ != o.n_ || deg_ != o.deg_) return false;
        for (int i = 0; i < n_; ++i)
            if (e_[static_cast<size_t>(i)] != o.e_[static_cast<size_t>(i)]) return false;
        return true;
    }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    size_t hash() const {
        size_t h = 0x9e3779b97f4a7c15ull;
        for (int i = 0; i < n_; ++i)
            h = h * 1099511628211ull + static_cast<size_t>(e_[static_cast<size_t>(i)]) + 1;
        return h;
    }

private:
    static int check_nvars(int n) {
        if (n < 0 || n > kMaxVars)
            throw InputError("rings are limited to " + std::to_string(kMaxVars) +
                             " variables");
        return n;
    }

    std::array<int16_t, kMaxVars> e_{};
    int16_t deg_ = 0;
    int16_t n_ = 0;
};

} // namespace symdet

template <>
struct std::hash<symdet::Monomial> {
    size_t operator()(const symdet::Monomial& m) const { return m.hash(); }
};
