// turing: a Turing machine toolkit
// Copyright 2026 The turing Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>

namespace turing
{
/// Tape alphabet. Blank is the content of every cell never written.
enum class Symbol : std::uint8_t
{
    Zero = 0,
    One = 1,
    Blank = 2,
};

/// One operation per step: write a symbol in place, or move the head.
enum class Action : std::uint8_t
{
    Write0 = 0,
    Write1 = 1,
    WriteB = 2,
    MoveLeft = 3,
    MoveRight = 4,
};

inline constexpr int kSymbolCount = 3;
inline constexpr int kActionCount = 5;

constexpr char to_char(Symbol s) noexcept
{
    return s == Symbol::Zero ? '0' : s == Symbol::One ? '1' : 'B';
}

constexpr char to_char(Action a) noexcept
{
    constexpr char table[] = {'0', '1', 'B', 'L', 'R'};
    return table[static_cast<int>(a)];
}

constexpr std::optional<Symbol> symbol_from_char(char c) noexcept
{
    switch (c)
    {
    case '0':
        return Symbol::Zero;
    case '1':
        return Symbol::One;
    case 'B':
        return Symbol::Blank;
    default:
        return std::nullopt;
    }
}

constexpr std::optional<Action> action_from_char(char c) noexcept
{
    switch (c)
    {
    case '0':
        return Action::Write0;
    case '1':
        return Action::Write1;
    case 'B':
        return Action::WriteB;
    case 'L':
        return Action::MoveLeft;
    case 'R':
        return Action::MoveRight;
    default:
        return std::nullopt;
    }
}

constexpr bool is_move(Action a) noexcept
{
    return a == Action::MoveLeft || a == Action::MoveRight;
}

/// The symbol written by a write action. Precondition: !is_move(a).
constexpr Symbol written_symbol(Action a) noexcept
{
    return static_cast<Symbol>(static_cast<std::uint8_t>(a));
}

constexpr Action write_action(Symbol s) noexcept
{
    return static_cast<Action>(static_cast<std::uint8_t>(s));
}

constexpr Symbol bit_symbol(bool b) noexcept
{
    return b ? Symbol::One : Symbol::Zero;
}

}  // namespace turing
