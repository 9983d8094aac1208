// turing: a Turing machine toolkit
// Copyright 2026 The turing Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "turing/bits.hpp"
#include "turing/machine.hpp"
#include "turing/run.hpp"
#include "turing/tape.hpp"
#include "turing/text_format.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace turing
{
inline constexpr std::size_t kMaxTapes = 8;

/// (p, scanned[k], actions[k], q)
struct MultiRule
{
    StateId from = 0;
    std::vector<Symbol> scan;
    std::vector<Action> actions;
    StateId to = 0;

    friend bool operator==(const MultiRule&, const MultiRule&) = default;
};

/// k-tape machine that may have several rules per (state, scanned tuple).
///
/// Tape 0 holds the input. With a read-only input tape every rule must move
/// the input head (there is no stay action). State ids follow first
/// appearance, as for Machine.
class NDMachine
{
public:
    /// Throws Error(InvalidMachine) for k outside 1..kMaxTapes or a write on a
    /// read-only input tape, Error(EmptyMachine) for no rules.
    static NDMachine from_document(const MachineDocument& doc);
    static NDMachine from_machine(const Machine& m);

    std::size_t tapes() const noexcept { return tapes_; }
    bool readonly_input() const noexcept { return readonly_; }
    std::span<const MultiRule> rules() const noexcept { return rules_; }
    std::size_t state_count() const noexcept { return names_.size(); }
    const std::string& state_name(StateId id) const { return names_.at(id); }
    StateId start() const noexcept { return 0; }

    /// Indices into rules() applicable in (state, scanned).
    std::span<const std::uint32_t> matching(StateId state, std::span<const Symbol> scanned) const;

    bool deterministic() const noexcept;

    /// Tape read by the acceptance convention: 0 for k = 1, else 1.
    std::size_t output_tape() const noexcept { return tapes_ == 1 ? 0 : 1; }

    /// Whether tape t counts toward work space.
    bool counts_space(std::size_t t) const noexcept { return !(readonly_ && t == 0 && tapes_ > 1); }

    MachineDocument to_document() const;

private:
    std::size_t slot(StateId state, std::span<const Symbol> scanned) const noexcept;

    std::size_t tapes_ = 1;
    bool readonly_ = false;
    std::vector<MultiRule> rules_;
    std::vector<std::string> names_;
    std::vector<std::vector<std::uint32_t>> table_;
};

/// Deterministic k-tape machine.
class MultiMachine
{
public:
    /// Throws Error(Determinism) when two rules share (p, scanned).
    explicit MultiMachine(NDMachine m);

    static MultiMachine from_document(const MachineDocument& doc)
    {
        return MultiMachine(NDMachine::from_document(doc));
    }

    const NDMachine& nd() const noexcept { return m_; }
    std::size_t tapes() const noexcept { return m_.tapes(); }

    const MultiRule* find(StateId state, std::span<const Symbol> scanned) const
    {
        auto idx = m_.matching(state, scanned);
        return idx.empty() ? nullptr : &m_.rules()[idx.front()];
    }

private:
    NDMachine m_;
};

struct MTConfiguration
{
    StateId state = 0;
    std::vector<Cell> heads;
    std::vector<Tape> tapes;

    std::vector<Symbol> scanned() const;
    std::size_t hash() const noexcept;

    friend bool operator==(const MTConfiguration&, const MTConfiguration&) = default;
};

struct MTConfigurationHash
{
    std::size_t operator()(const MTConfiguration& c) const noexcept { return c.hash(); }
};

MTConfiguration initial_configuration(const NDMachine& m, BitView input);

/// Every configuration one rule away; empty when halted.
std::vector<MTConfiguration> successors(const NDMachine& m, const MTConfiguration& c);

/// Output natural read from the designated output tape.
Nat output_value(const NDMachine& m, const MTConfiguration& c);

/// Halted (no rule applies) with output 1.
bool is_accepting_halt(const NDMachine& m, const MTConfiguration& c);

/// Time and space of one run. `work_cells` sums, over the tapes that count
/// toward space, the number of distinct cells the head visited.
struct Metrics
{
    std::uint64_t steps = 0;
    std::uint64_t work_cells = 0;
};

struct MTOutcome
{
    OutcomeKind kind = OutcomeKind::Halted;
    MTConfiguration config;
    std::uint64_t steps = 0;
    Metrics metrics;

    bool halted() const noexcept { return kind == OutcomeKind::Halted; }
};

MTOutcome mt_run(const MultiMachine& m, BitView input, std::uint64_t fuel);

enum class Verdict
{
    Accept,
    Reject,
    FuelExhausted,
};

const char* to_string(Verdict v) noexcept;

Verdict accepts(const MultiMachine& m, BitView w, std::uint64_t fuel);

struct NDLimits
{
    /// Largest number of distinct configurations held in one BFS level.
    std::size_t max_frontier = std::size_t{1} << 20;
};

/// Level-by-level breadth-first search of the computation tree, deduplicating
/// configurations within each level. Accept as soon as any path halts with
/// output 1 within `fuel` steps; Reject when every path halts within `fuel`
/// steps without accepting; FuelExhausted otherwise. Throws
/// Error(BudgetExceeded) when a level outgrows limits.max_frontier.
Verdict nd_accepts(const NDMachine& m, BitView w, std::uint64_t fuel, NDLimits limits = {});

struct MeterRow
{
    std::size_t n = 0;
    std::uint64_t max_steps = 0;
    std::uint64_t max_work_cells = 0;
    std::size_t inputs = 0;
    bool all_halted = true;
};

/// Worst case time and space per input length, rows sorted by n.
std::vector<MeterRow> meter(const MultiMachine& m, std::span<const BitString> inputs,
                            std::uint64_t fuel);

/// Demonstration machines for the acceptance and metering APIs:
/// palindrome, write1_halt, readonly_scan, guess_bit, spread_accept, looper_nd.
const std::vector<std::string>& complexity_fixture_names();

/// Throws Error(UnknownName).
NDMachine complexity_fixture(std::string_view name);

}  // namespace turing
