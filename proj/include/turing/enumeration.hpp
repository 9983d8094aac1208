// turing: a Turing machine toolkit
// Copyright 2026 The turing Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "turing/bits.hpp"
#include "turing/codec.hpp"
#include "turing/machine.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>

namespace turing
{
/// Position of a valid machine code in length-then-lexicographic order,
/// starting at 1.
struct GodelIndex
{
    std::uint64_t value = 1;

    friend auto operator<=>(const GodelIndex&, const GodelIndex&) = default;
};

/// Codes longer than `max_code_len` are never enumerated; requests that
/// would need them fail with Error(BudgetExceeded).
struct EnumerationLimits
{
    std::size_t max_code_len = 24;
};

/// Hard ceiling on any configured code-length budget.
inline constexpr std::size_t kMaxCodeLenCeiling = 64;

/// True iff `bits` is exactly one canonical machine code (nothing left over).
bool is_valid_code(BitView bits);

struct EnumeratedMachine
{
    GodelIndex index;
    BitString code;
    Machine machine;
};

/// Lazy stream of every machine whose code has length <= max_code_len, in
/// code order. Codes are generated directly per (s, r) header rather than by
/// filtering all strings.
class MachineEnumerator
{
public:
    /// Throws Error(BudgetExceeded) if max_code_len exceeds limits.max_code_len
    /// or kMaxCodeLenCeiling.
    explicit MachineEnumerator(std::size_t max_code_len, EnumerationLimits limits = {});
    ~MachineEnumerator();
    MachineEnumerator(MachineEnumerator&&) noexcept;
    MachineEnumerator& operator=(MachineEnumerator&&) noexcept;

    std::optional<EnumeratedMachine> next();

private:
    struct State;
    std::unique_ptr<State> state_;
};

/// T_i. Throws Error(BudgetExceeded) when the i-th code is longer than the
/// budget, Error(InvalidArgument) for i == 0.
Machine machine_of_index(GodelIndex i, EnumerationLimits limits = {});

/// n(T). Throws Error(BudgetExceeded) when |E(T)| exceeds the budget.
GodelIndex godel_number(const Machine& m, EnumerationLimits limits = {});

}  // namespace turing
