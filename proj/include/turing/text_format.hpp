// turing: a Turing machine toolkit
// Copyright 2026 The turing Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "turing/machine.hpp"
#include "turing/symbol.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace turing
{
/// One rule line of a .tm document. For k tapes, `scan` and `actions` have k
/// entries each.
struct RuleLine
{
    std::string from;
    std::vector<Symbol> scan;
    std::vector<Action> actions;
    std::string to;
    std::size_t line = 0;
};

/// Parsed .tm document, before any machine-level validation.
///
///     # comment
///     tapes: 2              (optional, default 1)
///     readonly-input: yes   (optional, default no)
///     <p> <s1..sk> <a1..ak> <q>
///
/// Multitape symbols/actions may be written as one token ("0B") or as k
/// separate tokens ("0 B").
struct MachineDocument
{
    std::size_t tapes = 1;
    bool readonly_input = false;
    std::vector<RuleLine> rules;
};

/// Throws SyntaxError with line/column, or Error(EmptyMachine).
MachineDocument parse_document(std::string_view text);

/// Parses a single-tape deterministic machine. Rule order follows the source.
Machine parse_machine(std::string_view text);

/// One `<p> <s> <a> <q>` line per rule, in stored order.
std::string serialize(const Machine& m);

std::string serialize(const MachineDocument& doc);

/// Accepts names matching [A-Za-z_][A-Za-z0-9_]*.
bool is_state_name(std::string_view name) noexcept;

}  // namespace turing
