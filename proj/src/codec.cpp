// turing: a Turing machine toolkit
// Copyright 2026 The turing Authors.
// SPDX-License-Identifier: Apache-2.0

#include "turing/codec.hpp"

#include "turing/error.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace turing
{
BitString str_of_nat(const Nat& n)
{
    const Nat m = n + 1;
    const std::size_t width = static_cast<std::size_t>(boost::multiprecision::msb(m));
    BitString out;
    for (std::size_t i = width; i-- > 0;)
        out.push_back(boost::multiprecision::bit_test(m, static_cast<unsigned>(i)));
    return out;
}

Nat nat_of_str(BitView x)
{
    Nat v = 1;
    for (char c : x)
    {
        v <<= 1;
        if (c == '1')
            v |= 1;
    }
    return v - 1;
}

std::size_t numeral_length(std::uint64_t n) noexcept
{
    if (n == UINT64_MAX)
        return 64;
    return static_cast<std::size_t>(std::bit_width(n + 1)) - 1;
}

BitString bar(BitView x)
{
    BitString out = BitString::ones(x.size());
    out.push_back(false);
    out += x;
    return out;
}

std::optional<std::size_t> read_bar(BitView stream, std::size_t pos,
                                    std::size_t& value_start) noexcept
{
    std::size_t n = 0;
    std::size_t i = pos;
    while (i < stream.size() && stream[i] == '1')
    {
        ++n;
        ++i;
    }
    if (i == stream.size())
        return std::nullopt;
    ++i;  // the terminating 0
    if (stream.size() - i < n)
        return std::nullopt;
    value_start = i;
    return 2 * n + 1;
}

Unbarred unbar(BitView stream)
{
    std::size_t start = 0;
    const auto len = read_bar(stream, 0, start);
    if (!len)
    {
        const bool no_zero = stream.find('0') == BitView::npos;
        throw Error(ErrorKind::MalformedCode,
                    no_zero ? "self-delimiting code has no terminating 0"
                            : "self-delimiting code is truncated");
    }
    const std::size_t n = (*len - 1) / 2;
    return {BitString(stream.substr(start, n)), BitString(stream.substr(start + n))};
}

BitString pair(BitView x, BitView y)
{
    return bar(x) + y;
}

BitString tuple_encode(std::span<const BitString> xs, TupleScheme scheme)
{
    if (xs.empty())
        throw Error(ErrorKind::InvalidArgument, "tuple must have at least one component");
    BitString out;
    if (scheme == TupleScheme::Flat)
    {
        for (const auto& x : xs)
            out += bar(x);
        return out;
    }
    // Right fold of pair: every component but the last is self-delimited.
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        out += bar(xs[i]);
    out += xs.back();
    return out;
}

std::vector<BitString> tuple_decode(BitView code, std::size_t arity, TupleScheme scheme)
{
    if (arity == 0)
        throw Error(ErrorKind::InvalidArgument, "arity must be at least 1");
    std::vector<BitString> out;
    BitString rest(code);
    const std::size_t barred = scheme == TupleScheme::Flat ? arity : arity - 1;
    for (std::size_t i = 0; i < barred; ++i)
    {
        auto [value, tail] = unbar(rest);
        out.push_back(std::move(value));
        rest = std::move(tail);
    }
    if (scheme == TupleScheme::Nested)
        out.push_back(std::move(rest));
    else if (!rest.empty())
        throw Error(ErrorKind::MalformedCode, "trailing bits after flat tuple");
    return out;
}

// ---------------------------------------------------------------------------

std::size_t CodeLayout::code_length() const noexcept
{
    return 2 * numeral_length(symbol_bits) + 1 + 2 * numeral_length(rule_count) + 1 +
           4 * rule_count * symbol_bits;
}

unsigned symbol_bits_for(std::size_t state_count) noexcept
{
    return static_cast<unsigned>(std::bit_width(state_count + kFirstStateCode - 1));
}

CodeLayout layout_of(const Machine& m) noexcept
{
    return {symbol_bits_for(m.state_count()), m.rule_count()};
}

BitString encode_machine(const Machine& m)
{
    const CodeLayout layout = layout_of(m);
    const unsigned s = layout.symbol_bits;
    BitString out = bar(str_of_nat(s)) + bar(str_of_nat(layout.rule_count));
    auto field = [&](std::uint32_t code) {
        for (unsigned i = s; i-- > 0;)
            out.push_back((code >> i) & 1U);
    };
    for (const Rule& r : m.rules())
    {
        field(kFirstStateCode + r.from);
        field(static_cast<std::uint32_t>(r.scan));
        field(static_cast<std::uint32_t>(r.action));
        field(kFirstStateCode + r.to);
    }
    return out;
}

const char* describe(CodeDefect d) noexcept
{
    switch (d)
    {
    case CodeDefect::None:
        return "valid";
    case CodeDefect::MalformedWidth:
        return "cannot read the self-delimited symbol width";
    case CodeDefect::MalformedCount:
        return "cannot read the self-delimited rule count";
    case CodeDefect::TruncatedBody:
        return "fewer than 4rs code bits follow the header";
    case CodeDefect::ZeroWidth:
        return "symbol width is zero";
    case CodeDefect::ZeroRules:
        return "rule count is zero";
    case CodeDefect::SymbolField:
        return "scanned-symbol field is not 0, 1 or B";
    case CodeDefect::ActionField:
        return "action field is not 0, 1, B, L or R";
    case CodeDefect::StateField:
        return "state field holds a tape or action code";
    case CodeDefect::NonContiguousState:
        return "state codes are not contiguous in order of first appearance";
    case CodeDefect::StartNotFirst:
        return "first rule does not start in state code 5";
    case CodeDefect::NonMinimalWidth:
        return "symbol width is not minimal for the number of states";
    case CodeDefect::DuplicatePair:
        return "two rules share the same state and scanned symbol";
    }
    return "?";
}

namespace
{
// Value of a numeral read through str_of_nat's inverse, or UINT64_MAX when it
// does not fit.
std::uint64_t small_nat_of_str(BitView x) noexcept
{
    if (x.size() > 62)
        return UINT64_MAX;
    std::uint64_t v = 1;
    for (char c : x)
        v = (v << 1) | (c == '1' ? 1U : 0U);
    return v - 1;
}

std::uint64_t read_field(BitView stream, std::size_t pos, unsigned width) noexcept
{
    std::uint64_t v = 0;
    for (unsigned i = 0; i < width; ++i)
        v = (v << 1) | (stream[pos + i] == '1' ? 1U : 0U);
    return v;
}

}  // namespace

CodeDefect scan_machine_code(BitView stream, std::size_t& consumed, std::vector<Rule>* rules)
{
    std::size_t s_start = 0, r_start = 0;
    const auto s_len = read_bar(stream, 0, s_start);
    if (!s_len)
        return CodeDefect::MalformedWidth;
    const auto r_len = read_bar(stream, *s_len, r_start);
    if (!r_len)
        return CodeDefect::MalformedCount;

    const std::uint64_t s = small_nat_of_str(stream.substr(s_start, (*s_len - 1) / 2));
    const std::uint64_t r = small_nat_of_str(stream.substr(r_start, (*r_len - 1) / 2));
    if (s == 0)
        return CodeDefect::ZeroWidth;
    if (r == 0)
        return CodeDefect::ZeroRules;

    const std::size_t header = *s_len + *r_len;
    const std::uint64_t available = stream.size() - header;
    if (s == UINT64_MAX || r == UINT64_MAX || r > available / 4 / s)
        return CodeDefect::TruncatedBody;
    if (s > 32)
        return CodeDefect::NonMinimalWidth;

    const auto width = static_cast<unsigned>(s);
    std::uint64_t states = 0;
    // Scanned symbols seen per state, as a 3-bit mask; grows with `states`.
    std::vector<std::uint8_t> used;
    if (rules)
        rules->clear();

    std::size_t pos = header;
    auto state_field = [&](std::uint64_t code, bool first) -> CodeDefect {
        if (code < kFirstStateCode)
            return CodeDefect::StateField;
        if (first && code != kFirstStateCode)
            return CodeDefect::StartNotFirst;
        const std::uint64_t id = code - kFirstStateCode;
        if (id > states)
            return CodeDefect::NonContiguousState;
        if (id == states)
        {
            ++states;
            used.push_back(0);
        }
        return CodeDefect::None;
    };

    for (std::uint64_t j = 0; j < r; ++j)
    {
        const std::uint64_t p = read_field(stream, pos, width);
        const std::uint64_t t = read_field(stream, pos + width, width);
        const std::uint64_t a = read_field(stream, pos + 2 * width, width);
        const std::uint64_t q = read_field(stream, pos + 3 * width, width);
        pos += 4 * static_cast<std::size_t>(width);

        if (auto d = state_field(p, j == 0); d != CodeDefect::None)
            return d;
        if (t >= static_cast<std::uint64_t>(kSymbolCount))
            return CodeDefect::SymbolField;
        if (a >= static_cast<std::uint64_t>(kActionCount))
            return CodeDefect::ActionField;
        if (auto d = state_field(q, false); d != CodeDefect::None)
            return d;

        auto& mask = used[p - kFirstStateCode];
        if (mask & (1U << t))
            return CodeDefect::DuplicatePair;
        mask = static_cast<std::uint8_t>(mask | (1U << t));

        if (rules)
            rules->push_back({static_cast<StateId>(p - kFirstStateCode), static_cast<Symbol>(t),
                              static_cast<Action>(a), static_cast<StateId>(q - kFirstStateCode)});
    }

    if (symbol_bits_for(states) != width)
        return CodeDefect::NonMinimalWidth;
    consumed = pos;
    return CodeDefect::None;
}

DecodedMachine decode_machine(BitView stream)
{
    std::vector<Rule> rules;
    std::size_t consumed = 0;
    const CodeDefect d = scan_machine_code(stream, consumed, &rules);
    switch (d)
    {
    case CodeDefect::None:
        break;
    case CodeDefect::MalformedWidth:
    case CodeDefect::MalformedCount:
    case CodeDefect::TruncatedBody:
        throw Error(ErrorKind::MalformedCode, describe(d));
    default:
        throw Error(ErrorKind::InvalidMachine, describe(d));
    }
    return {Machine::from_rules(rules), BitString(stream.substr(consumed))};
}

}  // namespace turing
