#pragma once

#include <vector>

#include "symdet/monomial.hpp"

namespace symdet {

enum class Cmp { Less = -1, Equal = 0, Greater = 1 };

enum class OrderKind {
    DegRevLex,    // global: well-order, 1 smallest
    NegDegRevLex, // local: 1 largest in its degree class (anti-well-ordered by degree)
};

/// Monomial order as a sequence of contiguous blocks, each ordered by one of
/// the base orders; comparison is blockwise. A single block gives the plain
/// global/local orders, two blocks give elimination orders.
class MonomialOrder {
public:
    struct Block {
        OrderKind kind;
        int begin;
        int end; // half-open
    };

    static MonomialOrder degrevlex(int nvars) {
        return MonomialOrder({Block{OrderKind::DegRevLex, 0, nvars}});
    }
    static MonomialOrder negdegrevlex(int nvars) {
        return MonomialOrder({Block{OrderKind::NegDegRevLex, 0, nvars}});
    }
    /// Eliminates the first `head` variables: they dominate the comparison.
    static MonomialOrder elimination(int head, int nvars,
                                     OrderKind tail_kind = OrderKind::DegRevLex) {
        return MonomialOrder({Block{OrderKind::DegRevLex, 0, head},
                              Block{tail_kind, head, nvars}});
    }
    static MonomialOrder blocks(std::vector<Block> bs) { return MonomialOrder(std::move(bs)); }

    int nvars() const { return blocks_.empty() ? 0 : blocks_.back().end; }

    bool is_global() const {
        for (const auto& b : blocks_)
            if (b.kind != OrderKind::DegRevLex) return false;
        return true;
    }

    const std::vector<Block>& block_list() const { return blocks_; }

    Cmp compare(const Monomial& a, const Monomial& b) const {
        for (const auto& blk : blocks_) {
            Cmp c = compare_block(blk, a, b);
            if (c != Cmp::Equal) return c;
        }
        return Cmp::Equal;
    }

    bool greater(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == Cmp::Greater;
    }

private:
    explicit MonomialOrder(std::vector<Block> bs) : blocks_(std::move(bs)) {}

    static Cmp compare_block(const Block& blk, const Monomial& a, const Monomial& b) {
        long da = 0, db = 0;
        for (int i = blk.begin; i < blk.end; ++i) {
            da += a[i];
            db += b[i];
        }
        if (da != db) {
            bool bigger_degree_wins = (blk.kind == OrderKind::DegRevLex);
            if (da > db) return bigger_degree_wins ? Cmp::Greater : Cmp::Less;
            return bigger_degree_wins ? Cmp::Less : Cmp::Greater;
        }
        // revlex tie-break: the last differing exponent decides, smaller wins
        for (int i = blk.end - 1; i >= blk.begin; --i) {
            if (a[i] != b[i]) return a[i] < b[i] ? Cmp::Greater : Cmp::Less;
        }
        return Cmp::Equal;
    }

    std::vector<Block> blocks_;
};

/// Spec-facing comparison: total order consistent with the order kind.
inline Cmp compare_monomials(const MonomialOrder& order, const Monomial& a,
                             const Monomial& b) {
    return order.compare(a, b);
}

} // namespace symdet
