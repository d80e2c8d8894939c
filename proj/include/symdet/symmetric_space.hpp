#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "symdet/basis_ops.hpp"

namespace symdet {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Determinant by Laplace expansion memoized over column subsets. Rows are
/// internally reordered so sparse rows are expanded first.
inline Polynomial det(const PolyMatrix& m) {
    size_t k = m.size();
    if (k == 0) throw MathError("determinant of an empty matrix");
    for (const auto& row : m)
        if (row.size() != k) throw MathError("determinant of a non-square matrix");
    RingPtr ring = m[0][0].ring();
    if (k > 20) throw MathError("determinant too large");

    std::vector<size_t> rows(k);
    for (size_t i = 0; i < k; ++i) rows[i] = i;
    std::stable_sort(rows.begin(), rows.end(), [&](size_t a, size_t b) {
        size_t ca = 0, cb = 0;
        for (const auto& p : m[a]) ca += p.size();
        for (const auto& p : m[b]) cb += p.size();
        return ca < cb;
    });
    int parity = 1;
    {
        std::vector<size_t> perm = rows;
        for (size_t i = 0; i < k; ++i)
            for (size_t j = i + 1; j < k; ++j)
                if (perm[i] > perm[j]) parity = -parity;
    }

    std::unordered_map<uint32_t, Polynomial> memo;
    uint32_t full = (k >= 32) ? 0 : ((1u << k) - 1);
    auto rec = [&](auto&& self, uint32_t colmask) -> Polynomial {
        auto it = memo.find(colmask);
        if (it != memo.end()) return it->second;
        int row_idx = static_cast<int>(k) - __builtin_popcount(colmask);
        if (colmask == 0) return Polynomial::constant(ring, 1);
        const auto& row = m[rows[static_cast<size_t>(row_idx)]];
        Polynomial acc(ring);
        int sign = 1;
        for (size_t c = 0; c < k; ++c) {
            if (!(colmask & (1u << c))) continue;
            if (!row[c].is_zero()) {
                Polynomial sub = self(self, colmask & ~(1u << c));
                Polynomial contrib = row[c] * sub;
                acc = (sign > 0) ? acc + contrib : acc - contrib;
            }
            sign = -sign;
        }
        memo.emplace(colmask, acc);
        return acc;
    };
    Polynomial d = rec(rec, full);
    return parity > 0 ? d : -d;
}

inline Polynomial minor_det(const PolyMatrix& m, const std::vector<int>& rows,
                            const std::vector<int>& cols) {
    PolyMatrix sub;
    sub.reserve(rows.size());
    for (int r : rows) {
        std::vector<Polynomial> row;
        row.reserve(cols.size());
        for (int c : cols) row.push_back(m[static_cast<size_t>(r)][static_cast<size_t>(c)]);
        sub.push_back(std::move(row));
    }
    return det(sub);
}

inline std::vector<std::vector<int>> index_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= n - (k - static_cast<int>(cur.size())); ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/// All k x k minors of a rectangular polynomial matrix, row-major over the
/// (row set, column set) pairs; zero minors are dropped.
inline std::vector<Polynomial> all_minors(const PolyMatrix& m, int k) {
    int nr = static_cast<int>(m.size());
    int nc = nr ? static_cast<int>(m[0].size()) : 0;
    std::vector<Polynomial> out;
    if (k <= 0 || k > nr || k > nc) return out;
    auto rsets = index_subsets(nr, k);
    auto csets = index_subsets(nc, k);
    for (const auto& R : rsets)
        for (const auto& C : csets) {
            Polynomial d = minor_det(m, R, C);
            if (!d.is_zero()) out.push_back(std::move(d));
        }
    return out;
}

/// Deterministic minor list for symmetric matrices: all (R, C) with R <= C
/// lexicographically, row-major. minor(R,C) = minor(C,R), so this enumerates
/// each distinct minor once, in a fixed order shared by the Jacobian-module
/// constructions.
inline std::vector<std::pair<std::vector<int>, std::vector<int>>>
symmetric_minor_index_pairs(int n, int k) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    auto sets = index_subsets(n, k);
    for (size_t a = 0; a < sets.size(); ++a)
        for (size_t b = a; b < sets.size(); ++b) out.push_back({sets[a], sets[b]});
    return out;
}

inline std::vector<Polynomial> symmetric_minors(const PolyMatrix& m, int k) {
    std::vector<Polynomial> out;
    for (const auto& [R, C] : symmetric_minor_index_pairs(static_cast<int>(m.size()), k))
        out.push_back(minor_det(m, R, C));
    return out;
}

/// hom_s(C^n, C^n) with its coordinate ring on N = n(n+1)/2 variables a_ij
/// (i <= j); the generic symmetric matrix identifies a_ij = a_ji.
struct SymmetricMatrixSpace {
    int n = 0;
    RingPtr ring;       // a-variables, degrevlex
    PolyMatrix generic; // n x n with entries the a_ij variables

    int var_count() const { return n * (n + 1) / 2; }
};

inline int symmetric_var_index(int n, int i, int j) {
    if (i > j) std::swap(i, j);
    // row-major over the upper triangle
    return i * n - i * (i - 1) / 2 + (j - i);
}

inline SymmetricMatrixSpace make_symmetric_space(int n) {
    if (n < 1) throw InputError("matrix size must be positive");
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            names.push_back("a" + std::to_string(i + 1) + std::to_string(j + 1));
    SymmetricMatrixSpace s;
    s.n = n;
    s.ring = make_ring_degrevlex(names);
    s.generic.assign(static_cast<size_t>(n), std::vector<Polynomial>());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            s.generic[static_cast<size_t>(i)].push_back(
                Polynomial::variable(s.ring, symmetric_var_index(n, i, j)));
    return s;
}

/// Codimension of the rank stratum S_i in hom_s: (n-i)(n-i+1)/2.
inline int stratum_codim(int n, int i) {
    if (i < 0 || i > n) throw InputError("stratum index out of range");
    return (n - i) * (n - i + 1) / 2;
}

struct RankStratumSpec {
    int n = 0;
    int i = 0;
    Ideal ideal; // (i+1)-minors of the generic symmetric matrix
    int codim = 0;
};

/// Ideal of S_i inside hom_s(C^n,C^n). With audit_dimension the stated
/// codimension is verified against the standard-basis engine.
inline RankStratumSpec rank_stratum_ideal(int n, int i, bool audit_dimension = false,
                                          const Budget& budget = Budget()) {
    if (i < 0 || i >= n) throw InputError("rank bound out of range for rank_stratum_ideal");
    SymmetricMatrixSpace s = make_symmetric_space(n);
    RankStratumSpec spec;
    spec.n = n;
    spec.i = i;
    spec.codim = stratum_codim(n, i);
    spec.ideal = Ideal(s.ring, symmetric_minors(s.generic, i + 1));
    if (audit_dimension) {
        int dim = dimension_global(spec.ideal, budget);
        if (dim != s.var_count() - spec.codim)
            throw MathError("rank stratum has unexpected dimension");
    }
    return spec;
}

/// A SEIDS X = F^{-1}(S_r) in C^q has an isolated singularity at the origin
/// iff q <= (n-r+1)(n-r+2)/2.
inline bool is_isolated_singularity(int n, int r, int q) {
    if (!(0 < r && r < n)) throw InputError("is_isolated_singularity requires 0 < r < n");
    if (q < 1) throw InputError("source dimension must be positive");
    return q <= stratum_codim(n, r - 1);
}

/// X has a (symmetric) smoothing iff q < (n-r+1)(n-r+2)/2.
inline bool has_smoothing(int n, int r, int q) {
    if (!(0 < r && r < n)) throw InputError("has_smoothing requires 0 < r < n");
    if (q < 1) throw InputError("source dimension must be positive");
    return q < stratum_codim(n, r - 1);
}

} // namespace symdet
