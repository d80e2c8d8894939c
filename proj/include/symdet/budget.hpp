#pragma once

#include <atomic>
#include <cstdint>
#include <memory>

#include "symdet/errors.hpp"

namespace symdet {

/// Shared computation budget. Standard-basis runs count S-pairs and single
/// reduction steps against it; on overrun they abort with BudgetError rather
/// than return a possibly wrong answer. Copies share the same counters, so a
/// whole CLI run can be capped by one budget while concurrent tasks draw from
/// it safely.
class Budget {
public:
    Budget() : state_(std::make_shared<State>()) {}
    explicit Budget(long long spair_limit) : Budget() {
        state_->spair_limit = spair_limit;
    }

    void count_spair() const {
        if (++state_->spairs > state_->spair_limit)
            throw BudgetError("S-pair budget exceeded (" +
                              std::to_string(state_->spair_limit) + ")");
    }

    void count_reduction() const {
        if (++state_->reductions > state_->reduction_limit)
            throw BudgetError("reduction-step budget exceeded");
    }

    long long spairs_used() const { return state_->spairs.load(); }
    long long reductions_used() const { return state_->reductions.load(); }
    long long spair_limit() const { return state_->spair_limit; }

private:
    struct State {
        long long spair_limit = 1'000'000;
        long long reduction_limit = 2'000'000'000;
        std::atomic<long long> spairs{0};
        std::atomic<long long> reductions{0};
    };
    std::shared_ptr<State> state_;
};

} // namespace symdet
