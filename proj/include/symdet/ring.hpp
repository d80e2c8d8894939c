#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "symdet/errors.hpp"
#include "symdet/order.hpp"

namespace symdet {

class PolynomialRing;
using RingPtr = std::shared_ptr<const PolynomialRing>;

/// Variable names plus a monomial order. Rings are immutable and shared;
/// polynomial arithmetic requires operands from the same ring object.
class PolynomialRing {
public:
    PolynomialRing(std::vector<std::string> names, MonomialOrder order)
        : names_(std::move(names)), order_(std::move(order)) {
        if (order_.nvars() != static_cast<int>(names_.size()))
            throw InputError("monomial order size does not match variable count");
        for (size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty()) throw InputError("empty variable name");
            auto [it, fresh] = index_.emplace(names_[i], static_cast<int>(i));
            (void)it;
            if (!fresh) throw InputError("duplicate variable name: " + names_[i]);
        }
    }

    int nvars() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_[static_cast<size_t>(i)]; }
    const std::vector<std::string>& names() const { return names_; }
    const MonomialOrder& order() const { return order_; }
    bool is_global() const { return order_.is_global(); }

    int find(const std::string& name) const {
        auto it = index_.find(name);
        return it == index_.end() ? -1 : it->second;
    }

private:
    std::vector<std::string> names_;
    MonomialOrder order_;
    std::unordered_map<std::string, int> index_;
};

inline RingPtr make_ring(std::vector<std::string> names, MonomialOrder order) {
    return std::make_shared<PolynomialRing>(std::move(names), std::move(order));
}

inline RingPtr make_ring_degrevlex(std::vector<std::string> names) {
    int n = static_cast<int>(names.size());
    return make_ring(std::move(names), MonomialOrder::degrevlex(n));
}

inline RingPtr make_ring_local(std::vector<std::string> names) {
    int n = static_cast<int>(names.size());
    return make_ring(std::move(names), MonomialOrder::negdegrevlex(n));
}

/// Same variables, different order.
inline RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
    return make_ring(ring->names(), std::move(order));
}

/// Ring extended by fresh variables placed in front (elimination position).
inline RingPtr prepend_vars(const RingPtr& ring, const std::vector<std::string>& extra,
                            OrderKind tail_kind) {
    std::vector<std::string> names = extra;
    names.insert(names.end(), ring->names().begin(), ring->names().end());
    int head = static_cast<int>(extra.size());
    int total = static_cast<int>(names.size());
    return make_ring(std::move(names), MonomialOrder::elimination(head, total, tail_kind));
}

/// Ring extended by fresh variables appended at the end, single degrevlex block.
inline RingPtr append_vars_degrevlex(const RingPtr& ring,
                                     const std::vector<std::string>& extra) {
    std::vector<std::string> names = ring->names();
    names.insert(names.end(), extra.begin(), extra.end());
    return make_ring_degrevlex(std::move(names));
}

} // namespace symdet
