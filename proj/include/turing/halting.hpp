// turing: a Turing machine toolkit
// Copyright 2026 The turing Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "turing/bits.hpp"
#include "turing/enumeration.hpp"
#include "turing/machine.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace turing
{
/// Bounded halting query: does m halt on bar(str_of_nat(y)) within k steps?
/// There is deliberately no unbounded counterpart.
bool halts_within(const Machine& m, const Nat& y, std::uint64_t k);

struct HaltPair
{
    GodelIndex x;
    Nat y;
    Nat code;             ///< nat_of_str(pair(str_of_nat(x), str_of_nat(y)))
    std::uint64_t stage;  ///< first stage at which T_x was seen halting on y
};

Nat halt_pair_code(GodelIndex x, const Nat& y);

/// Semi-decision procedure for the halting set by dovetailing.
///
/// Stage t runs T_1 .. T_t on inputs 0 .. t for t steps each and emits every
/// pair seen halting for the first time, ordered by stage, then x, then y.
class Dovetailer
{
public:
    explicit Dovetailer(std::uint64_t stages, EnumerationLimits limits = {});

    /// Next pair, or nullopt after the last stage. Throws
    /// Error(BudgetExceeded) when a stage needs a machine beyond the
    /// enumeration budget.
    std::optional<HaltPair> next();

private:
    const Machine& machine(std::uint64_t x);
    void run_stage();

    std::uint64_t stages_;
    std::uint64_t stage_ = 0;
    MachineEnumerator enumerator_;
    std::vector<Machine> machines_;
    std::vector<std::vector<bool>> emitted_;
    std::vector<HaltPair> pending_;
    std::size_t cursor_ = 0;
};

}  // namespace turing
