// turing: a Turing machine toolkit
// Copyright 2026 The turing Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "turing/bits.hpp"
#include "turing/machine.hpp"
#include "turing/tape.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace turing
{
enum class OutcomeKind
{
    Halted,
    FuelExhausted,
};

/// Result of a fuel-bounded run. `config` is the final configuration when
/// halted and the last one reached otherwise.
struct Outcome
{
    OutcomeKind kind = OutcomeKind::Halted;
    Configuration config;
    std::uint64_t steps = 0;

    bool halted() const noexcept { return kind == OutcomeKind::Halted; }

    friend bool operator==(const Outcome&, const Outcome&) = default;
};

/// Called before each executed step with its 1-based number and the
/// configuration the rule fires in.
using StepObserver = std::function<void(std::uint64_t step, const Configuration& before)>;

/// Input on cells 0 .. |input|-1, head on cell 0, start state.
Configuration initial_configuration(const Machine& m, BitView input);

/// The successor configuration, or nullopt when no rule matches (halt).
std::optional<Configuration> step(const Machine& m, const Configuration& c);

/// In-place variant of step(); returns false on halt and leaves `c` unchanged.
bool advance(const Machine& m, Configuration& c);

/// Runs from `start` for at most `fuel` steps.
Outcome run_from(const Machine& m, Configuration start, std::uint64_t fuel,
                 const StepObserver& observer = {});

Outcome run(const Machine& m, BitView input, std::uint64_t fuel,
            const StepObserver& observer = {});

/// `step=<n> state=<name> head=<i> scan=<sym>`
std::string trace_line(const Machine& m, std::uint64_t step, const Configuration& c);

}  // namespace turing
