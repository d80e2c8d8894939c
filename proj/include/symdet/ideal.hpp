#pragma once

#include <optional>
#include <vector>

#include "symdet/polynomial.hpp"
#include "symdet/vecpoly.hpp"

namespace symdet {

/// Finitely generated ideal; zero generators are dropped on construction.
struct Ideal {
    RingPtr ring;
    std::vector<Polynomial> gens;

    Ideal() = default;
    Ideal(RingPtr r, std::vector<Polynomial> g) : ring(std::move(r)) {
        gens.reserve(g.size());
        for (auto& p : g)
            if (!p.is_zero()) gens.push_back(std::move(p));
    }

    bool is_zero_ideal() const { return gens.empty(); }

    Ideal mapped_to(const RingPtr& target) const {
        std::vector<Polynomial> out;
        out.reserve(gens.size());
        for (const auto& p : gens) out.push_back(p.mapped_to(target));
        return Ideal(target, std::move(out));
    }
};

using FreeModuleElement = std::vector<Polynomial>; // fixed length p

/// Submodule of a free module O^p, optionally over a quotient ring: when
/// base is set, all membership and colength computations are taken modulo
/// base * O^p (the relations of the ambient quotient).
struct Submodule {
    RingPtr ring;
    int ambient_rank = 1;
    std::vector<FreeModuleElement> gens;
    std::optional<Ideal> base;

    Submodule() = default;
    Submodule(RingPtr r, int rank, std::vector<FreeModuleElement> g,
              std::optional<Ideal> base_ideal = std::nullopt)
        : ring(std::move(r)), ambient_rank(rank), base(std::move(base_ideal)) {
        for (auto& e : g) {
            if (static_cast<int>(e.size()) != rank)
                throw InputError("submodule generator length differs from ambient rank");
            bool nonzero = false;
            for (const auto& p : e) nonzero = nonzero || !p.is_zero();
            if (nonzero) gens.push_back(std::move(e));
        }
    }
};

/// Flattens an ideal into rank-1 engine elements.
inline std::vector<VecPoly> to_vecpolys(const Ideal& I) {
    std::vector<VecPoly> out;
    out.reserve(I.gens.size());
    for (const auto& p : I.gens) out.push_back(VecPoly::from_polynomial(p));
    return out;
}

/// Flattens a submodule, appending base-ideal relations in every component.
inline std::vector<VecPoly> to_vecpolys(const Submodule& M) {
    std::vector<VecPoly> out;
    for (const auto& g : M.gens) out.push_back(VecPoly::from_components(g));
    if (M.base) {
        for (const auto& b : M.base->gens)
            for (int c = 0; c < M.ambient_rank; ++c)
                out.push_back(VecPoly::from_polynomial(b, M.ambient_rank, c));
    }
    return out;
}

} // namespace symdet
