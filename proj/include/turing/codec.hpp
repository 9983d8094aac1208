// turing: a Turing machine toolkit
// Copyright 2026 The turing Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "turing/bits.hpp"
#include "turing/machine.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace turing
{
// ---------------------------------------------------------------------------
// Strings and naturals
//
// Bit strings are identified with naturals in length-then-lexicographic order:
// e <-> 0, 0 <-> 1, 1 <-> 2, 00 <-> 3, 01 <-> 4, ...
// Closed form: nat_of_str(x) = 2^|x| - 1 + binary(x).
// ---------------------------------------------------------------------------

BitString str_of_nat(const Nat& n);
Nat nat_of_str(BitView x);

/// Length of str_of_nat(n), i.e. floor(log2(n + 1)).
std::size_t numeral_length(std::uint64_t n) noexcept;

// ---------------------------------------------------------------------------
// Self-delimiting code: bar(x) = 1^|x| 0 x
// ---------------------------------------------------------------------------

BitString bar(BitView x);

struct Unbarred
{
    BitString value;
    BitString rest;
};

/// Splits `stream` into x and the rest, reading exactly 2|x|+1 bits.
/// Throws Error(MalformedCode) if there is no terminating 0 or too few bits
/// follow it.
Unbarred unbar(BitView stream);

/// Non-throwing form: length of the self-delimited value starting at `pos`,
/// with `value_start` set to the first payload bit.
std::optional<std::size_t> read_bar(BitView stream, std::size_t pos,
                                    std::size_t& value_start) noexcept;

/// <x, y> = bar(x) y
BitString pair(BitView x, BitView y);

enum class TupleScheme
{
    Nested,  ///< <n1, <n2, ... <n(k-1), nk>>>
    Flat,    ///< bar(n1) bar(n2) ... bar(nk)
};

/// Precondition: xs non-empty (Error(InvalidArgument) otherwise).
BitString tuple_encode(std::span<const BitString> xs, TupleScheme scheme);

/// Inverse of tuple_encode for a known arity. Throws Error(MalformedCode).
std::vector<BitString> tuple_decode(BitView code, std::size_t arity, TupleScheme scheme);

// ---------------------------------------------------------------------------
// Machine code E(T) = bar(s) bar(r) e(p1) e(t1) e(s1) e(q1) ... e(qr)
//
// s and r are rendered as strings via str_of_nat before self-delimiting.
// Symbol codes: 0 -> 0, 1 -> 1, B -> 2, L -> 3, R -> 4; states get 5, 6, ...
// in order of first appearance (start state = 5). Every field is s bits wide.
// ---------------------------------------------------------------------------

inline constexpr std::uint32_t kFirstStateCode = 5;

struct CodeLayout
{
    unsigned symbol_bits = 0;  ///< s = ceil(log2(|Q| + 5))
    std::size_t rule_count = 0;

    /// Exact |E(T)| for this layout.
    std::size_t code_length() const noexcept;
};

/// Minimal width s for a machine with `state_count` states.
unsigned symbol_bits_for(std::size_t state_count) noexcept;

CodeLayout layout_of(const Machine& m) noexcept;

BitString encode_machine(const Machine& m);

struct DecodedMachine
{
    Machine machine;
    BitString rest;
};

/// Throws Error(MalformedCode) when s, r or the 4rs code bits cannot be read
/// and Error(InvalidMachine) when the fields do not form a canonical machine.
DecodedMachine decode_machine(BitView stream);

/// Why a stream does not start with a canonical machine code.
enum class CodeDefect
{
    None,
    MalformedWidth,       ///< bar(s) unreadable
    MalformedCount,       ///< bar(r) unreadable
    TruncatedBody,        ///< fewer than 4rs bits after the header
    ZeroWidth,            ///< s == 0 or s too large to represent
    ZeroRules,            ///< r == 0
    SymbolField,          ///< scanned-symbol code >= 3
    ActionField,          ///< action code >= 5
    StateField,           ///< state code < 5
    NonContiguousState,   ///< state code skips ahead of first appearance order
    StartNotFirst,        ///< first rule's p is not code 5
    NonMinimalWidth,      ///< s != ceil(log2(|Q| + 5))
    DuplicatePair,        ///< two rules share (p, scanned)
};

const char* describe(CodeDefect d) noexcept;

/// Allocation-light validation of the code prefix of `stream`. On success
/// returns None and sets `consumed` to |E(T)|; `rules`, when given, receives
/// the decoded rules with state ids = code - 5.
CodeDefect scan_machine_code(BitView stream, std::size_t& consumed,
                             std::vector<Rule>* rules = nullptr);

}  // namespace turing
