// turing: a Turing machine toolkit
// Copyright 2026 The turing Authors.
// SPDX-License-Identifier: Apache-2.0
//
// tm: command-line front end over the libturing C interface.

#include "turing/turing.h"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace
{
enum Exit
{
    kOk = 0,
    kUsage = 1,
    kInvalid = 2,
    kFuel = 3,
    kBudget = 4,
    kUndefined = 5,
};

constexpr std::uint64_t kDefaultFuel = 10000;
constexpr std::size_t kDefaultMaxLen = 24;

struct Failure
{
    int code;
};

int exit_code(turing_status s)
{
    switch (s)
    {
    case TURING_OK:
        return kOk;
    case TURING_E_SYNTAX:
    case TURING_E_INVALID_MACHINE:
    case TURING_E_MALFORMED_CODE:
        return kInvalid;
    case TURING_E_BUDGET:
        return kBudget;
    case TURING_E_UNDEFINED:
        return kUndefined;
    default:
        return kUsage;
    }
}

// Throws Failure after printing the library's message.
void check(turing_status s)
{
    if (s == TURING_OK)
        return;
    std::cerr << "tm: " << turing_status_name(s) << ": " << turing_last_error() << "\n";
    throw Failure{exit_code(s)};
}

[[noreturn]] void usage_error(const std::string& message)
{
    std::cerr << "tm: " << message << "\n";
    throw Failure{kUsage};
}

struct StringFree
{
    void operator()(char* s) const { turing_string_free(s); }
};
using CString = std::unique_ptr<char, StringFree>;

struct MachineFree
{
    void operator()(turing_machine* m) const { turing_machine_free(m); }
};
using MachinePtr = std::unique_ptr<turing_machine, MachineFree>;

struct MultiFree
{
    void operator()(turing_multi* m) const { turing_multi_free(m); }
};
using MultiPtr = std::unique_ptr<turing_multi, MultiFree>;

struct OutcomeFree
{
    void operator()(turing_outcome* o) const { turing_outcome_free(o); }
};
using OutcomePtr = std::unique_ptr<turing_outcome, OutcomeFree>;

std::string read_text(const std::string& path)
{
    if (path == "-")
    {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        usage_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string strip_space(const std::string& s)
{
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            out.push_back(c);
    return out;
}

MachinePtr load_machine(const std::string& path)
{
    turing_machine* m = nullptr;
    check(turing_machine_parse(read_text(path).c_str(), &m));
    return MachinePtr(m);
}

MultiPtr load_multi(const std::string& path, const std::string& fixture)
{
    turing_multi* m = nullptr;
    if (!fixture.empty())
        check(turing_multi_fixture(fixture.c_str(), &m));
    else if (!path.empty())
        check(turing_multi_parse(read_text(path).c_str(), &m));
    else
        usage_error("a machine FILE or --fixture NAME is required");
    return MultiPtr(m);
}

void print_line(void*, const char* line)
{
    std::cout << line << "\n";
}

int report_outcome(const turing_outcome* o)
{
    std::cout << "outcome: " << (turing_outcome_halted(o) ? "halted" : "fuel-exhausted") << "\n"
              << "steps: " << turing_outcome_steps(o) << "\n"
              << "state: " << turing_outcome_state(o) << "\n"
              << "head: " << turing_outcome_head(o) << "\n"
              << "tape: " << turing_outcome_tape_lo(o) << " " << turing_outcome_tape(o) << "\n"
              << "output: " << turing_outcome_output(o) << "\n";
    return turing_outcome_halted(o) ? kOk : kFuel;
}

std::vector<std::string> split_args(const std::string& text)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream ss(text);
    while (std::getline(ss, item, ','))
        out.push_back(strip_space(item));
    return out;
}

// One line of `tm enum`: the rules joined by "; ".
std::string rule_summary(const turing_machine* m)
{
    char* text = nullptr;
    check(turing_machine_serialize(m, &text));
    CString owned(text);
    std::string summary;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line))
    {
        if (line.empty())
            continue;
        if (!summary.empty())
            summary += "; ";
        summary += line;
    }
    return summary;
}

const char* verdict_text(turing_verdict v)
{
    switch (v)
    {
    case TURING_ACCEPT:
        return "ACCEPT";
    case TURING_REJECT:
        return "REJECT";
    default:
        return "FUEL-EXHAUSTED";
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"tm: Turing machine toolkit"};
    app.require_subcommand(1);

    std::string file, input, bits, lib_name, args_text, fixture, inputs_from;
    std::uint64_t fuel = kDefaultFuel, index = 0, stages = 0;
    std::size_t max_len = kDefaultMaxLen, count = 0, space = 0;
    bool trace = false, list = false, nondet = false, show_stats = false;

    auto* run = app.add_subcommand("run", "run a single-tape machine");
    run->add_option("FILE", file, ".tm file")->required();
    run->add_option("--input", input, "input bits");
    run->add_option("--fuel", fuel, "step budget");
    run->add_flag("--trace", trace, "print one line per step");

    auto* tr = app.add_subcommand("trace", "run and print every step");
    tr->add_option("FILE", file, ".tm file")->required();
    tr->add_option("--input", input, "input bits");
    tr->add_option("--fuel", fuel, "step budget");

    auto* eval = app.add_subcommand("eval", "evaluate a machine as a function of naturals");
    eval->add_option("FILE", file, ".tm file");
    eval->add_option("--lib", lib_name, "library function instead of FILE");
    eval->add_option("--args", args_text, "comma-separated naturals")->required();
    eval->add_option("--fuel", fuel, "step budget");

    auto* lib = app.add_subcommand("lib", "print a library machine in .tm format");
    lib->add_option("NAME", lib_name, "machine name");
    lib->add_flag("--list", list, "list the available names");

    auto* enc = app.add_subcommand("encode", "print the code E(T) of a machine");
    enc->add_option("FILE", file, ".tm file ('-' for stdin)")->required();

    auto* dec = app.add_subcommand("decode", "print the machine coded by a bit string");
    dec->add_option("BITS", bits, "code bits (default: read stdin)");

    auto* en = app.add_subcommand("enum", "list machines in Goedel order");
    en->add_option("--max-len", max_len, "longest code length");
    en->add_option("--count", count, "stop after this many machines");

    auto* nth = app.add_subcommand("nth", "print machine T_i");
    nth->add_option("I", index, "Goedel index")->required();
    nth->add_option("--max-len", max_len, "enumeration budget");

    auto* idx = app.add_subcommand("index", "print the Goedel index of a machine");
    idx->add_option("FILE", file, ".tm file")->required();
    idx->add_option("--max-len", max_len, "enumeration budget");

    auto* univ = app.add_subcommand("univ", "run the universal evaluator on E(T)p");
    univ->add_option("--tape", bits, "input stream")->required();
    univ->add_option("--fuel", fuel, "step budget");
    univ->add_flag("--trace", trace, "print one line per step");

    auto* acc = app.add_subcommand("accept", "decide membership with a k-tape machine");
    acc->add_option("FILE", file, ".tm file");
    acc->add_option("--fixture", fixture, "built-in machine instead of FILE");
    acc->add_option("--input", input, "input bits");
    acc->add_option("--fuel", fuel, "step budget");
    acc->add_flag("--nondet", nondet, "breadth-first nondeterministic acceptance");

    auto* met = app.add_subcommand("meter", "worst-case time and space per input length");
    met->add_option("FILE", file, ".tm file");
    met->add_option("--fixture", fixture, "built-in machine instead of FILE");
    met->add_option("--inputs-from", inputs_from, "file with one input per line ('-' = empty)")
        ->required();
    met->add_option("--fuel", fuel, "step budget per input");

    auto* sav = app.add_subcommand("savitch", "space-bounded acceptance by midpoint recursion");
    sav->add_option("FILE", file, ".tm file");
    sav->add_option("--fixture", fixture, "built-in machine instead of FILE");
    sav->add_option("--input", input, "input bits");
    sav->add_option("--space", space, "space bound in cells")->required();
    sav->add_flag("--stats", show_stats, "print search statistics");

    auto* dove = app.add_subcommand("dovetail", "semi-decide the halting set");
    dove->add_option("--stages", stages, "number of stages")->required();
    dove->add_option("--max-len", max_len, "enumeration budget");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try
    {
        if (*run || *tr)
        {
            MachinePtr m = load_machine(file);
            turing_outcome* o = nullptr;
            check(turing_run(m.get(), input.c_str(), fuel, (trace || *tr) ? print_line : nullptr,
                             nullptr, &o));
            return report_outcome(OutcomePtr(o).get());
        }

        if (*eval)
        {
            std::vector<std::string> values = split_args(args_text);
            std::vector<const char*> argv_c;
            for (const auto& v : values)
                argv_c.push_back(v.c_str());
            turing_fn_status status{};
            char* value = nullptr;
            if (!lib_name.empty())
                check(turing_eval_library(lib_name.c_str(), argv_c.data(), argv_c.size(), fuel,
                                          &status, &value, nullptr));
            else if (!file.empty())
            {
                MachinePtr m = load_machine(file);
                check(turing_eval(m.get(), argv_c.data(), argv_c.size(), fuel, &status, &value,
                                  nullptr));
            }
            else
                usage_error("eval needs FILE or --lib NAME");
            CString owned(value);
            switch (status)
            {
            case TURING_FN_VALUE:
                std::cout << value << "\n";
                return kOk;
            case TURING_FN_DIVERGED:
                std::cout << "DIVERGED\n";
                return kFuel;
            case TURING_FN_UNDEFINED:
                std::cout << "UNDEFINED\n";
                return kUndefined;
            }
        }

        if (*lib)
        {
            if (list)
            {
                for (std::size_t i = 0; i < turing_library_count(); ++i)
                    std::cout << turing_library_name(i) << "\n";
                for (std::size_t i = 0; i < turing_multi_fixture_count(); ++i)
                    std::cout << turing_multi_fixture_name(i) << "\n";
                return kOk;
            }
            if (lib_name.empty())
                usage_error("lib needs NAME or --list");
            char* text = nullptr;
            turing_machine* m = nullptr;
            if (turing_machine_library(lib_name.c_str(), &m) == TURING_OK)
            {
                MachinePtr owned(m);
                check(turing_machine_serialize(m, &text));
            }
            else
            {
                turing_multi* mm = nullptr;
                check(turing_multi_fixture(lib_name.c_str(), &mm));
                MultiPtr owned(mm);
                check(turing_multi_serialize(mm, &text));
            }
            CString owned(text);
            std::cout << text;
            return kOk;
        }

        if (*enc)
        {
            MachinePtr m = load_machine(file);
            char* code = nullptr;
            check(turing_machine_encode(m.get(), &code));
            CString owned(code);
            std::cout << code << "\n";
            return kOk;
        }

        if (*dec)
        {
            const std::string stream = strip_space(bits.empty() ? read_text("-") : bits);
            turing_machine* m = nullptr;
            char* rest = nullptr;
            check(turing_machine_decode(stream.c_str(), &m, &rest));
            MachinePtr owned_m(m);
            CString owned_rest(rest);
            char* text = nullptr;
            check(turing_machine_serialize(m, &text));
            CString owned_text(text);
            std::cout << text;
            if (rest && *rest)
                std::cout << "# rest: " << rest << "\n";
            return kOk;
        }

        if (*en)
        {
            turing_enum* e = nullptr;
            check(turing_enum_open(max_len, &e));
            std::unique_ptr<turing_enum, void (*)(turing_enum*)> owned(e, turing_enum_free);
            for (std::size_t printed = 0; count == 0 || printed < count; ++printed)
            {
                int has = 0;
                std::uint64_t i = 0;
                char* code = nullptr;
                turing_machine* m = nullptr;
                check(turing_enum_next(e, &has, &i, &code, &m));
                if (!has)
                    break;
                CString owned_code(code);
                MachinePtr owned_m(m);
                std::cout << i << "\t" << code << "\t" << rule_summary(m) << "\n";
            }
            return kOk;
        }

        if (*nth)
        {
            turing_machine* m = nullptr;
            check(turing_machine_of_index(index, max_len, &m));
            MachinePtr owned(m);
            char* text = nullptr;
            check(turing_machine_serialize(m, &text));
            CString owned_text(text);
            std::cout << text;
            return kOk;
        }

        if (*idx)
        {
            MachinePtr m = load_machine(file);
            std::uint64_t n = 0;
            const turing_status s = turing_godel_number(m.get(), max_len, &n);
            if (s == TURING_E_BUDGET)
            {
                std::cout << "out-of-budget\n";
                return kBudget;
            }
            check(s);
            std::cout << n << "\n";
            return kOk;
        }

        if (*univ)
        {
            turing_outcome* o = nullptr;
            check(turing_universal_run(bits.c_str(), fuel, trace ? print_line : nullptr, nullptr,
                                       &o));
            return report_outcome(OutcomePtr(o).get());
        }

        if (*acc)
        {
            MultiPtr m = load_multi(file, fixture);
            turing_verdict v{};
            if (nondet)
                check(turing_nd_accept(m.get(), input.c_str(), fuel, 0, &v));
            else
                check(turing_accept(m.get(), input.c_str(), fuel, &v, nullptr, nullptr));
            std::cout << verdict_text(v) << "\n";
            return v == TURING_VERDICT_FUEL_EXHAUSTED ? kFuel : kOk;
        }

        if (*met)
        {
            MultiPtr m = load_multi(file, fixture);
            std::vector<std::string> words;
            std::istringstream lines(read_text(inputs_from));
            std::string line;
            while (std::getline(lines, line))
            {
                line = strip_space(line);
                if (line.empty() || line[0] == '#')
                    continue;
                words.push_back(line == "-" ? "" : line);
            }
            std::vector<const char*> ptrs;
            for (const auto& w : words)
                ptrs.push_back(w.c_str());
            turing_meter_row* rows = nullptr;
            std::size_t n = 0;
            check(turing_meter(m.get(), ptrs.data(), ptrs.size(), fuel, &rows, &n));
            std::unique_ptr<turing_meter_row, void (*)(turing_meter_row*)> owned(rows,
                                                                                  turing_meter_free);
            for (std::size_t i = 0; i < n; ++i)
            {
                std::cout << rows[i].n << "\t" << rows[i].max_steps << "\t"
                          << rows[i].max_work_cells;
                if (!rows[i].all_halted)
                    std::cout << "\tFUEL_EXHAUSTED";
                std::cout << "\n";
            }
            return kOk;
        }

        if (*sav)
        {
            MultiPtr m = load_multi(file, fixture);
            int accepted = 0;
            turing_savitch_stats stats{};
            check(turing_savitch(m.get(), input.c_str(), space, 0, &accepted, &stats));
            std::cout << (accepted ? "ACCEPT" : "REJECT") << "\n";
            if (show_stats)
                std::cout << "config_bound=" << stats.config_bound
                          << " depth_bound=" << stats.depth_bound
                          << " max_depth=" << stats.max_depth << " rows=" << stats.rows
                          << " configs=" << stats.configs << "\n";
            return kOk;
        }

        if (*dove)
        {
            turing_dovetail* d = nullptr;
            check(turing_dovetail_open(stages, max_len, &d));
            std::unique_ptr<turing_dovetail, void (*)(turing_dovetail*)> owned(d,
                                                                                turing_dovetail_free);
            while (true)
            {
                int has = 0;
                std::uint64_t x = 0, stage = 0;
                char* y = nullptr;
                char* code = nullptr;
                check(turing_dovetail_next(d, &has, &x, &y, &code, &stage));
                if (!has)
                    break;
                CString oy(y), oc(code);
                std::cout << x << "\t" << y << "\t" << code << "\t" << stage << "\n";
            }
            return kOk;
        }
    }
    catch (const Failure& f)
    {
        std::cout.flush();
        return f.code;
    }
    return kUsage;
}
