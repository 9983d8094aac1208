// turing: a Turing machine toolkit
// Copyright 2026 The turing Authors.
// SPDX-License-Identifier: Apache-2.0

#include "turing/halting.hpp"

#include "turing/codec.hpp"
#include "turing/error.hpp"
#include "turing/run.hpp"

namespace turing
{
bool halts_within(const Machine& m, const Nat& y, std::uint64_t k)
{
    return run(m, bar(str_of_nat(y)), k).halted();
}

Nat halt_pair_code(GodelIndex x, const Nat& y)
{
    return nat_of_str(pair(str_of_nat(Nat(x.value)), str_of_nat(y)));
}

Dovetailer::Dovetailer(std::uint64_t stages, EnumerationLimits limits)
  : stages_(stages),
    enumerator_(limits.max_code_len, limits)
{}

const Machine& Dovetailer::machine(std::uint64_t x)
{
    while (machines_.size() < x)
    {
        auto item = enumerator_.next();
        if (!item)
            throw Error(ErrorKind::BudgetExceeded,
                        "stage " + std::to_string(stage_) + " needs machine " + std::to_string(x) +
                            " but only " + std::to_string(machines_.size()) +
                            " fit the enumeration budget");
        machines_.push_back(std::move(item->machine));
    }
    return machines_[x - 1];
}

void Dovetailer::run_stage()
{
    const std::uint64_t t = stage_;
    if (emitted_.size() < t)
        emitted_.resize(t);
    for (std::uint64_t x = 1; x <= t; ++x)
    {
        const Machine& m = machine(x);
        auto& seen = emitted_[x - 1];
        if (seen.size() < t + 1)
            seen.resize(t + 1, false);
        for (std::uint64_t y = 0; y <= t; ++y)
        {
            if (seen[y] || !halts_within(m, Nat(y), t))
                continue;
            seen[y] = true;
            pending_.push_back({GodelIndex{x}, Nat(y), halt_pair_code(GodelIndex{x}, Nat(y)), t});
        }
    }
}

std::optional<HaltPair> Dovetailer::next()
{
    while (cursor_ >= pending_.size())
    {
        if (stage_ >= stages_)
            return std::nullopt;
        pending_.clear();
        cursor_ = 0;
        ++stage_;
        run_stage();
    }
    return pending_[cursor_++];
}

}  // namespace turing
