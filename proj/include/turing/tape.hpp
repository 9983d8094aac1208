// turing: a Turing machine toolkit
// Copyright 2026 The turing Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "turing/bits.hpp"
#include "turing/machine.hpp"
#include "turing/symbol.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace turing
{
using Cell = std::int64_t;

/// Two-way infinite tape holding finitely many non-blank cells.
///
/// The stored window is always trimmed to the minimal span whose end cells are
/// non-blank, so two tapes with the same contents compare equal and no blank
/// is ever kept at the window edges.
class Tape
{
public:
    Tape() = default;

    /// Writes `bits` on cells 0 .. |bits|-1.
    static Tape from_bits(BitView bits);

    Symbol read(Cell cell) const noexcept
    {
        const Cell i = cell - origin_;
        if (i < 0 || i >= static_cast<Cell>(cells_.size()))
            return Symbol::Blank;
        return cells_[static_cast<std::size_t>(i)];
    }

    void write(Cell cell, Symbol symbol);

    bool blank() const noexcept { return cells_.empty(); }

    /// Leftmost / rightmost non-blank cell. Precondition: !blank().
    Cell lo() const noexcept { return origin_; }
    Cell hi() const noexcept { return origin_ + static_cast<Cell>(cells_.size()) - 1; }

    /// Sparse form: every non-blank cell, no Blank entries.
    std::map<Cell, Symbol> sparse() const;

    /// Symbols of the window [lo, hi] as 0/1/B characters ("" when blank).
    std::string window() const;

    /// Same contents shifted by `offset` cells.
    Tape shifted(Cell offset) const;

    std::size_t hash() const noexcept;

    friend bool operator==(const Tape&, const Tape&) = default;

private:
    Cell origin_ = 0;
    std::vector<Symbol> cells_;
};

/// Instantaneous description of a single-tape machine.
struct Configuration
{
    StateId state = 0;
    Cell head = 0;
    Tape tape;

    Symbol scanned() const noexcept { return tape.read(head); }

    friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// Applies one action to a tape/head pair.
inline void apply_action(Tape& tape, Cell& head, Action action)
{
    switch (action)
    {
    case Action::MoveLeft:
        --head;
        break;
    case Action::MoveRight:
        ++head;
        break;
    default:
        tape.write(head, written_symbol(action));
        break;
    }
}

}  // namespace turing
