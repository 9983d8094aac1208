// turing: a Turing machine toolkit
// Copyright 2026 The turing Authors.
// SPDX-License-Identifier: Apache-2.0

#include "turing/tape.hpp"

#include <functional>

namespace turing
{
Tape Tape::from_bits(BitView bits)
{
    Tape t;
    t.cells_.reserve(bits.size());
    for (char c : bits)
        t.cells_.push_back(c == '1' ? Symbol::One : Symbol::Zero);
    return t;
}

void Tape::write(Cell cell, Symbol symbol)
{
    if (cells_.empty())
    {
        if (symbol != Symbol::Blank)
        {
            origin_ = cell;
            cells_.push_back(symbol);
        }
        return;
    }

    Cell i = cell - origin_;
    const Cell size = static_cast<Cell>(cells_.size());
    if (symbol == Symbol::Blank)
    {
        if (i < 0 || i >= size)
            return;
        cells_[static_cast<std::size_t>(i)] = Symbol::Blank;
        // Re-trim so the window edges stay non-blank.
        if (i == size - 1)
        {
            while (!cells_.empty() && cells_.back() == Symbol::Blank)
                cells_.pop_back();
        }
        if (i == 0)
        {
            std::size_t k = 0;
            while (k < cells_.size() && cells_[k] == Symbol::Blank)
                ++k;
            cells_.erase(cells_.begin(), cells_.begin() + static_cast<std::ptrdiff_t>(k));
            origin_ += static_cast<Cell>(k);
        }
        if (cells_.empty())
            origin_ = 0;
        return;
    }

    if (i < 0)
    {
        cells_.insert(cells_.begin(), static_cast<std::size_t>(-i), Symbol::Blank);
        origin_ = cell;
        i = 0;
    }
    else if (i >= size)
    {
        cells_.resize(static_cast<std::size_t>(i) + 1, Symbol::Blank);
    }
    cells_[static_cast<std::size_t>(i)] = symbol;
}

std::map<Cell, Symbol> Tape::sparse() const
{
    std::map<Cell, Symbol> out;
    for (std::size_t i = 0; i < cells_.size(); ++i)
        if (cells_[i] != Symbol::Blank)
            out.emplace(origin_ + static_cast<Cell>(i), cells_[i]);
    return out;
}

std::string Tape::window() const
{
    std::string s;
    s.reserve(cells_.size());
    for (Symbol c : cells_)
        s.push_back(to_char(c));
    return s;
}

Tape Tape::shifted(Cell offset) const
{
    Tape t = *this;
    if (!t.cells_.empty())
        t.origin_ += offset;
    return t;
}

std::size_t Tape::hash() const noexcept
{
    std::size_t h = std::hash<Cell>{}(origin_);
    for (Symbol c : cells_)
        h = h * 1099511628211ULL + static_cast<std::size_t>(c) + 1;
    return h;
}

}  // namespace turing
