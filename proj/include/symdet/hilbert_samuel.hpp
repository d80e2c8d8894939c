#pragma once

#include <vector>

#include "symdet/basis_ops.hpp"

namespace symdet {

/// Hilbert-Samuel multiplicity of an m-primary ideal I in the local ring at
/// the origin of V(base) (the ambient regular local ring when base is empty):
/// the normalized leading coefficient of k -> colength(I^k).
///
/// The fit slides a window of dim+1 consecutive power-colengths until the
/// interpolating polynomial of degree dim predicts the next two values
/// exactly; the multiplicity is then the top forward difference.
inline long long hilbert_samuel_multiplicity(const Ideal& I, const Ideal* base = nullptr,
                                             const Budget& budget = Budget()) {
    Ideal zero(I.ring, {});
    const Ideal& rel = base ? *base : zero;

    int dim = dimension_local(rel, budget);
    if (dim < 0) throw MathError("hilbert_samuel: empty base germ");

    auto power_colength = [&](int k) -> long long {
        Ideal Ik = ideal_power(I, k);
        Colength c = colength(ideal_sum(Ik, rel), /*local=*/true, budget);
        if (!c.finite)
            throw MathError("hilbert_samuel: ideal is not m-primary (infinite colength)");
        return c.value;
    };

    std::vector<long long> vals; // vals[k-1] = colength(I^k)
    auto value_at = [&](int k) {
        while (static_cast<int>(vals.size()) < k)
            vals.push_back(power_colength(static_cast<int>(vals.size()) + 1));
        return vals[static_cast<size_t>(k - 1)];
    };

    const int max_shift = 6;
    for (int s = 1; s <= max_shift; ++s) {
        // difference table over window k = s .. s+dim
        std::vector<std::vector<long long>> diff(static_cast<size_t>(dim) + 1);
        for (int k = s; k <= s + dim; ++k) diff[0].push_back(value_at(k));
        for (int r = 1; r <= dim; ++r)
            for (size_t i = 0; i + 1 < diff[static_cast<size_t>(r - 1)].size(); ++i)
                diff[static_cast<size_t>(r)].push_back(
                    diff[static_cast<size_t>(r - 1)][i + 1] -
                    diff[static_cast<size_t>(r - 1)][i]);

        // extrapolate two steps assuming degree <= dim
        bool ok = true;
        std::vector<long long> last(static_cast<size_t>(dim) + 1);
        for (int r = 0; r <= dim; ++r) last[static_cast<size_t>(r)] =
            diff[static_cast<size_t>(r)].back();
        for (int step = 1; step <= 2 && ok; ++step) {
            for (int r = dim - 1; r >= 0; --r)
                last[static_cast<size_t>(r)] += last[static_cast<size_t>(r + 1)];
            if (last[0] != value_at(s + dim + step)) ok = false;
        }
        if (ok) {
            long long e = diff[static_cast<size_t>(dim)].back();
            if (e < 0) throw MathError("hilbert_samuel: negative leading difference");
            return e;
        }
    }
    throw MathError("hilbert_samuel: colength growth did not stabilize to a polynomial");
}

} // namespace symdet
