#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symdet/budget.hpp"
#include "symdet/polynomial.hpp"

namespace symdet {

namespace rng_detail {

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline uint64_t fnv1a(std::string_view s) {
    uint64_t h = 0xCBF29CE484222325ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ull;
    }
    return h;
}

inline uint64_t mix(uint64_t a, uint64_t b) {
    uint64_t s = a ^ (b + 0x9E3779B97F4A7C15ull + (a << 6) + (a >> 2));
    return splitmix64(s);
}

} // namespace rng_detail

class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}
    uint64_t next() { return rng_detail::splitmix64(state_); }
    long long uniform(long long lo, long long hi) { // inclusive
        return lo + static_cast<long long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

private:
    uint64_t state_;
};

/// Seeded source of the "generic" rational data the invariants draw:
/// coefficients of linear forms, perturbation matrices, projection flags,
/// saturation combinations. All streams derive deterministically from one
/// root, so a draw is reproducible independent of evaluation order.
class RandomSource {
public:
    RandomSource(uint64_t root, long long coeff_bound)
        : root_(root), bound_(coeff_bound) {}

    /// Fresh deterministic stream; successive calls get independent streams.
    Rng stream() { return Rng(rng_detail::mix(root_, ++counter_)); }

    Rational coefficient(Rng& rng) {
        return Rational(static_cast<long>(rng.uniform(-bound_, bound_)));
    }

    Rational nonzero_coefficient(Rng& rng) {
        for (;;) {
            long long v = rng.uniform(-bound_, bound_);
            if (v != 0) return Rational(static_cast<long>(v));
        }
    }

    std::vector<std::vector<Rational>> rational_matrix(int rows, int cols) {
        Rng rng = stream();
        std::vector<std::vector<Rational>> m(static_cast<size_t>(rows));
        for (auto& row : m) {
            row.reserve(static_cast<size_t>(cols));
            for (int j = 0; j < cols; ++j) row.push_back(coefficient(rng));
        }
        return m;
    }

    /// Random linear form in the listed variables (no constant term).
    Polynomial linear_form(const RingPtr& ring, const std::vector<int>& vars) {
        Rng rng = stream();
        Polynomial p(ring);
        for (int v : vars)
            p += Polynomial::variable(ring, v).scaled(nonzero_coefficient(rng));
        return p;
    }

    /// Random affine-linear polynomial c_0 + sum c_v z_v over the listed vars.
    Polynomial affine_form(const RingPtr& ring, const std::vector<int>& vars) {
        Rng rng = stream();
        Polynomial p = Polynomial::constant(ring, nonzero_coefficient(rng));
        for (int v : vars)
            p += Polynomial::variable(ring, v).scaled(coefficient(rng));
        return p;
    }

    /// Random combination of the given polynomials; redraws on the unlikely
    /// exact cancellation to zero. Combination coefficients stay small: they
    /// only need to miss finitely many proper subspaces, and small entries
    /// keep the downstream basis arithmetic lean.
    Polynomial combination(const std::vector<Polynomial>& polys) {
        if (polys.empty()) throw MathError("combination of an empty family");
        long long b = std::min<long long>(bound_, 97);
        for (int attempt = 0; attempt < 16; ++attempt) {
            Rng rng = stream();
            Polynomial acc(polys[0].ring());
            for (const auto& p : polys) {
                long long v = rng.uniform(-b, b);
                while (v == 0) v = rng.uniform(-b, b);
                acc += p.scaled(Rational(static_cast<long>(v)));
            }
            if (!acc.is_zero()) return acc;
        }
        throw GenericityError("random combination vanished repeatedly");
    }

private:
    uint64_t root_;
    long long bound_;
    uint64_t counter_ = 0;
};

/// Seeded genericity policy: every generic computation is repeated with
/// independent draws and the results must agree; disagreement is an error,
/// never a silently returned value.
class GenericityContext {
public:
    // Zariski-open genericity only needs the draws to miss finitely many
    // low-degree hypersurfaces; a two-digit range keeps exact-arithmetic
    // basis computations lean while the double-sample policy catches the
    // rare unlucky draw.
    static constexpr long long kDefaultCoefficientBound = 99;

    GenericityContext() = default;
    explicit GenericityContext(uint64_t seed, long long coeff_bound = kDefaultCoefficientBound,
                               int resamples = 2, Budget budget = Budget())
        : seed_(seed), bound_(coeff_bound), resamples_(resamples),
          budget_(std::move(budget)) {}

    uint64_t seed() const { return seed_; }
    long long coefficient_bound() const { return bound_; }
    int resamples() const { return resamples_; }
    const Budget& budget() const { return budget_; }

    uint64_t sub_seed(std::string_view tag, uint64_t a = 0, uint64_t b = 0,
                      uint64_t c = 0) const {
        uint64_t h = rng_detail::mix(seed_, rng_detail::fnv1a(tag));
        h = rng_detail::mix(h, a);
        h = rng_detail::mix(h, b);
        h = rng_detail::mix(h, c);
        return h;
    }

    RandomSource source(std::string_view tag, uint64_t a = 0, uint64_t b = 0,
                        uint64_t c = 0) const {
        return RandomSource(sub_seed(tag, a, b, c), bound_);
    }

    /// Runs fn once per resample with independent draw sources; all results
    /// must agree exactly.
    template <typename F>
    auto validated(const std::string& tag, F&& fn, uint64_t a = 0, uint64_t b = 0) const {
        using R = decltype(fn(std::declval<RandomSource&>()));
        std::optional<R> first;
        for (int i = 0; i < resamples_; ++i) {
            RandomSource src = source(tag, a, b, static_cast<uint64_t>(i));
            R r = fn(src);
            if (!first) {
                first = std::move(r);
            } else if (!(*first == r)) {
                throw GenericityError("genericity disagreement between draws in '" + tag +
                                      "'");
            }
        }
        return *first;
    }

private:
    uint64_t seed_ = 0;
    long long bound_ = kDefaultCoefficientBound;
    int resamples_ = 2;
    Budget budget_;
};

} // namespace symdet
