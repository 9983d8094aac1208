// turing: a Turing machine toolkit
// Copyright 2026 The turing Authors.
// SPDX-License-Identifier: Apache-2.0

#include "turing/funclib.hpp"

#include "turing/codec.hpp"
#include "turing/error.hpp"
#include "turing/run.hpp"

#include <map>
#include <string>

namespace turing
{
BitString encode_args(std::span<const Nat> args)
{
    if (args.empty())
        throw Error(ErrorKind::InvalidArgument, "a function takes at least one argument");
    BitString out;
    for (const Nat& x : args)
        out += bar(str_of_nat(x));
    return out;
}

Nat read_output(const Tape& tape, Cell head)
{
    if (tape.read(head) == Symbol::Blank)
        return 0;
    Cell lo = head, hi = head;
    while (tape.read(lo - 1) != Symbol::Blank)
        --lo;
    while (tape.read(hi + 1) != Symbol::Blank)
        ++hi;
    std::string block;
    for (Cell c = lo; c <= hi; ++c)
        block.push_back(tape.read(c) == Symbol::One ? '1' : '0');
    return nat_of_str(block);
}

Nat read_output(const Configuration& final_config)
{
    return read_output(final_config.tape, final_config.head);
}

FnResult eval_fn(const Machine& m, std::span<const Nat> args, std::uint64_t fuel)
{
    const Outcome out = run(m, encode_args(args), fuel);
    if (!out.halted())
        return FnResult::diverged(out.steps);
    return FnResult::of(read_output(out.config), out.steps);
}

// ---------------------------------------------------------------------------
// Library machines
//
// Each helper appends a block of rules whose states share a prefix. Blocks
// hand control to the state named by `next`.
// ---------------------------------------------------------------------------

namespace
{
using B = MachineBuilder;

// Erases a leading 1^n 0 and lands on the first cell after it. Used when the
// body of a single argument runs to the end of the input.
void strip_header(B& b, const std::string& p, const std::string& next)
{
    b.rule(p + "strip", '1', 'B', p + "strip_mv")
        .rule(p + "strip", '0', 'B', p + "strip_sep")
        .rule(p + "strip_mv", 'B', 'R', p + "strip")
        .rule(p + "strip_sep", 'B', 'R', next);
}

// Destroys one self-delimited component 1^k 0 w starting under the head.
// Each round erases two header cells, turns the separator into a 1 and the
// first body bit into the new separator, so header and body shrink together.
void skip_component(B& b, const std::string& p, const std::string& next)
{
    b.rule(p + "start", '1', 'B', p + "a")
        .rule(p + "start", '0', 'B', p + "sep")
        .rule(p + "sep", 'B', 'R', next)
        .rule(p + "a", 'B', 'R', p + "b")
        .rule(p + "b", '1', 'B', p + "c")
        .rule(p + "b", '0', 'B', p + "f")
        .rule(p + "c", 'B', 'R', p + "d")
        .rule(p + "d", '1', 'R', p + "d")
        .rule(p + "d", '0', '1', p + "e")
        .rule(p + "e", '1', 'R', p + "g")
        .rules(p + "g", "01", '0', p + "h")
        .rule(p + "h", '0', 'L', p + "i")
        .rule(p + "i", '1', 'L', p + "i")
        .rule(p + "i", 'B', 'R', p + "start")
        .rule(p + "f", 'B', 'R', p + "g2")
        .rules(p + "g2", "01", '0', p + "start");
}

// Body of the extraction loop for 1^j 0 v rest with the collected bits u
// kept to the left behind exactly one blank:  u B 1^j 0 v rest.
// `p`start must erase the leading header 1 and go to `p`a; this block moves
// the first bit of v onto the end of u (shifting the tail left by one) and
// returns to `p`start.
void extract_round(B& b, const std::string& p)
{
    b.rule(p + "a", 'B', 'R', p + "b")
        .rule(p + "b", '1', 'R', p + "b")
        .rule(p + "b", '0', 'R', p + "c")
        .rule(p + "c", '0', 'R', p + "k0_rd")
        .rule(p + "c", '1', 'R', p + "k1_rd");
    for (char carry : {'0', '1'})
    {
        const std::string c = p + "k" + carry + "_";
        b.rule(c + "rd", '0', 'L', c + "w0")
            .rule(c + "rd", '1', 'L', c + "w1")
            .rule(c + "rd", 'B', 'L', c + "wB")
            .rules(c + "w0", "01", '0', c + "nx")
            .rules(c + "w1", "01", '1', c + "nx")
            .rules(c + "nx", "01", 'R', c + "mv")
            .rules(c + "mv", "01", 'R', c + "rd")
            .rules(c + "wB", "01", 'B', c + "ret0")
            .rule(c + "ret0", 'B', 'L', c + "ret")
            .rules(c + "ret", "01", 'L', c + "ret")
            .rule(c + "ret", 'B', 'L', c + "put")
            .rule(c + "put", 'B', carry, c + "back")
            .rule(c + "back", carry, 'R', p + "gap");
    }
    b.rule(p + "gap", 'B', 'R', p + "start");
}

// Leaves the body w of the component under the head as the scanned block.
void extract_component(B& b, const std::string& p)
{
    b.rule(p + "first", '1', 'B', p + "a")
        .rule(p + "first", '0', 'B', p + "empty")
        .rule(p + "start", '1', 'B', p + "a")
        .rule(p + "start", '0', 'L', p + "z")
        .rule(p + "z", 'B', 'L', p + "done");
    extract_round(b, p);
}

Machine make_successor()
{
    B b;
    strip_header(b, "", "seek");
    b.rules("seek", "01", 'R', "seek")
        .rule("seek", 'B', 'L', "inc")
        .rule("inc", '1', '0', "carry")
        .rule("inc", '0', '1', "done")
        .rule("inc", 'B', '0', "done")
        .rule("carry", '0', 'L', "inc");
    return b.build();
}

Machine make_zero()
{
    return B{}.rules("zero", "01", 'L', "done").build();
}

Machine make_projection(int m)
{
    B b;
    for (int i = 1; i < m; ++i)
    {
        const std::string next = i + 1 < m ? "skip" + std::to_string(i + 1) + "_start" : "x_first";
        skip_component(b, "skip" + std::to_string(i) + "_", next);
    }
    extract_component(b, "x_");
    return b.build();
}

// Counts the header 1s of bar(x) into a numeral kept right of the input:
// increments follow str_of_nat order, so all-ones rolls over to one more 0.
Machine make_length()
{
    B b;
    b.rule("start", '1', 'B', "mv0")
        .rule("start", '0', 'R', "out")
        .rule("mv0", 'B', 'R', "right")
        .rules("right", "01", 'R', "right")
        .rule("right", 'B', 'R', "cnt")
        .rule("cnt", 'B', '0', "back")
        .rules("cnt", "01", 'R', "cend")
        .rules("cend", "01", 'R', "cend")
        .rule("cend", 'B', 'L', "inc")
        .rule("inc", '1', '0', "incl")
        .rule("inc", '0', '1', "back")
        .rule("inc", 'B', 'R', "ovf")
        .rule("incl", '0', 'L', "inc")
        .rule("ovf", '0', 'R', "ovf")
        .rule("ovf", 'B', '0', "back")
        .rules("back", "01", 'L', "back")
        .rule("back", 'B', 'L', "back2")
        .rules("back2", "01", 'L', "back2")
        .rule("back2", 'B', 'R', "start")
        .rules("out", "01", 'R', "out")
        .rule("out", 'B', 'R', "done");
    return b.build();
}

// The input already is bar(x); halting at once reads it back whole.
Machine make_bar()
{
    return B{}.rule("idle", 'B', 'B', "idle").build();
}

Machine make_left()
{
    B b;
    strip_header(b, "", "x_first");
    extract_component(b, "x_");
    return b.build();
}

Machine make_right()
{
    B b;
    strip_header(b, "", "skip_start");
    skip_component(b, "skip_", "done");
    return b.build();
}

// Moves x next to y as  x B 0 y  and then compares them bit by bit from the
// left, consuming x and sliding the 0 marker through y.
Machine make_equal()
{
    B b;
    strip_header(b, "", "x_first");
    b.rule("x_first", '1', 'B', "x_a")
        .rule("x_first", '0', 'R', "e_chk")
        .rule("e_chk", 'B', 'L', "yes")
        .rules("e_chk", "01", 'B', "no")
        .rule("x_start", '1', 'B', "x_a")
        .rule("x_start", '0', 'L', "c_gap");
    extract_round(b, "x_");
    b.rule("c_gap", 'B', 'L', "c_toleft")
        .rules("c_toleft", "01", 'L', "c_toleft")
        .rule("c_toleft", 'B', 'R', "c_start")
        .rule("c_start", '0', 'B', "c0_e")
        .rule("c_start", '1', 'B', "c1_e");
    for (char bit : {'0', '1'})
    {
        const char other = bit == '0' ? '1' : '0';
        const std::string c = std::string("c") + bit + "_";
        b.rule(c + "e", 'B', 'R', c + "p")
            .rules(c + "p", "01", 'R', c + "m")
            .rule(c + "p", 'B', 'R', c + "l")
            .rules(c + "m", "01", 'R', c + "m")
            .rule(c + "m", 'B', 'R', c + "s")
            .rule(c + "s", 'B', 'R', c + "s")
            .rule(c + "s", '0', 'R', c + "y")
            .rule(c + "y", bit, '0', "c_mv")
            .rule(c + "y", other, 'B', "no")
            .rule(c + "l", 'B', 'R', c + "l")
            .rule(c + "l", '0', 'R', c + "ly")
            .rule(c + "ly", bit, '0', "c_lm")
            .rule(c + "ly", other, 'B', "no");
    }
    b.rule("c_mv", '0', 'L', "c_ermk")
        .rule("c_ermk", '0', 'B', "c_ret")
        .rule("c_ret", 'B', 'L', "c_ret")
        .rules("c_ret", "01", 'L', "c_retx")
        .rules("c_retx", "01", 'L', "c_retx")
        .rule("c_retx", 'B', 'R', "c_start")
        .rule("c_lm", '0', 'L', "c_lmk")
        .rule("c_lmk", '0', 'B', "c_lchk")
        .rule("c_lchk", 'B', 'R', "c_lchk2")
        .rule("c_lchk2", '0', 'R', "c_lend")
        .rule("c_lend", 'B', 'L', "yes")
        .rules("c_lend", "01", 'B', "no");
    return b.build();
}

struct Entry
{
    std::size_t arity;
    bool pair_shaped;
    Machine machine;
};

const std::map<std::string, Entry, std::less<>>& registry()
{
    static const auto table = [] {
        std::map<std::string, Entry, std::less<>> t;
        t.emplace("successor", Entry{1, false, make_successor()});
        for (int n = 1; n <= 3; ++n)
        {
            t.emplace("zero_" + std::to_string(n), Entry{std::size_t(n), false, make_zero()});
            for (int m = 1; m <= n; ++m)
                t.emplace("proj_" + std::to_string(m) + "_" + std::to_string(n),
                          Entry{std::size_t(n), false, make_projection(m)});
        }
        t.emplace("length", Entry{1, false, make_length()});
        t.emplace("bar_fn", Entry{1, false, make_bar()});
        t.emplace("left_g", Entry{1, true, make_left()});
        t.emplace("right_h", Entry{1, true, make_right()});
        t.emplace("eq_pred", Entry{1, true, make_equal()});
        return t;
    }();
    return table;
}

const Entry& entry(std::string_view name)
{
    const auto& reg = registry();
    auto it = reg.find(name);
    if (it == reg.end())
        throw Error(ErrorKind::UnknownName, "no library function named '" + std::string(name) + "'");
    return it->second;
}

}  // namespace

const std::vector<std::string>& library_names()
{
    static const std::vector<std::string> names = {
        "successor", "zero_1",   "zero_2",   "zero_3", "proj_1_1", "proj_1_2",
        "proj_2_2",  "proj_1_3", "proj_2_3", "proj_3_3", "length", "bar_fn",
        "left_g",    "right_h",  "eq_pred",
    };
    return names;
}

Machine library(std::string_view name)
{
    return entry(name).machine;
}

std::size_t library_arity(std::string_view name)
{
    return entry(name).arity;
}

bool library_accepts(std::string_view name, std::span<const Nat> args)
{
    const Entry& e = entry(name);
    if (args.size() != e.arity)
        return false;
    if (!e.pair_shaped)
        return true;
    std::size_t start = 0;
    return read_bar(str_of_nat(args[0]), 0, start).has_value();
}

FnResult eval_library(std::string_view name, std::span<const Nat> args, std::uint64_t fuel)
{
    if (!library_accepts(name, args))
        return FnResult::undefined();
    return eval_fn(entry(name).machine, args, fuel);
}

}  // namespace turing
