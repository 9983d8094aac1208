// turing: a Turing machine toolkit
// Copyright 2026 The turing Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "turing/symbol.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace turing
{
using StateId = std::uint32_t;

/// Quadruple (p, s, a, q): in state p scanning s, perform a and enter q.
struct Rule
{
    StateId from;
    Symbol scan;
    Action action;
    StateId to;

    friend bool operator==(const Rule&, const Rule&) = default;
};

/// A rule whose states are referred to by display name.
struct NamedRule
{
    std::string from;
    Symbol scan;
    Action action;
    std::string to;
};

/// Single-tape deterministic machine.
///
/// State ids are assigned 0, 1, 2, ... in order of first appearance when the
/// rules are read as p1, q1, p2, q2, ...; the start state (the p of the first
/// rule) therefore always has id 0. Names are a display side table and do not
/// take part in equality.
class Machine
{
public:
    /// Throws Error(EmptyMachine) for an empty list and Error(Determinism)
    /// when two rules share a (state, symbol) pair.
    static Machine from_named(std::span<const NamedRule> rules);

    /// Builds from numeric rules. Ids may be arbitrary; they are renumbered by
    /// first appearance. Names default to q1, q2, ... in that order.
    static Machine from_rules(std::span<const Rule> rules);

    std::span<const Rule> rules() const noexcept { return rules_; }
    std::size_t rule_count() const noexcept { return rules_.size(); }
    std::size_t state_count() const noexcept { return names_.size(); }
    StateId start() const noexcept { return 0; }

    const std::string& state_name(StateId id) const { return names_.at(id); }

    /// The rule for (state, scanned), or nullptr when the machine halts there.
    const Rule* find(StateId state, Symbol scanned) const noexcept
    {
        const auto idx = table_[static_cast<std::size_t>(state) * kSymbolCount +
                                static_cast<std::size_t>(scanned)];
        return idx < 0 ? nullptr : &rules_[static_cast<std::size_t>(idx)];
    }

    /// Same rules with states renamed q1, q2, ... by id.
    Machine canonical() const;

    friend bool operator==(const Machine& a, const Machine& b) { return a.rules_ == b.rules_; }

private:
    Machine() = default;
    static Machine build(std::vector<Rule> rules, std::vector<std::string> names);

    std::vector<Rule> rules_;
    std::vector<std::string> names_;
    std::vector<std::int32_t> table_;
};

/// Incremental construction of named machines, used by the function library.
class MachineBuilder
{
public:
    /// `scan` is one of 0 1 B, `action` one of 0 1 B L R.
    MachineBuilder& rule(std::string_view from, char scan, char action, std::string_view to);

    /// Adds the same action for every symbol in `scans`.
    MachineBuilder& rules(std::string_view from, std::string_view scans, char action,
                          std::string_view to);

    Machine build() const { return Machine::from_named(rules_); }
    const std::vector<NamedRule>& named_rules() const noexcept { return rules_; }

private:
    std::vector<NamedRule> rules_;
};

}  // namespace turing
