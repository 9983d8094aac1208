// turing: a Turing machine toolkit
// Copyright 2026 The turing Authors.
// SPDX-License-Identifier: Apache-2.0

#include "turing/turing.h"

#include "turing/codec.hpp"
#include "turing/enumeration.hpp"
#include "turing/error.hpp"
#include "turing/funclib.hpp"
#include "turing/halting.hpp"
#include "turing/multitape.hpp"
#include "turing/run.hpp"
#include "turing/savitch.hpp"
#include "turing/text_format.hpp"
#include "turing/universal.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <vector>

using namespace turing;

struct turing_machine
{
    Machine m;
};

struct turing_outcome
{
    bool halted = false;
    std::uint64_t steps = 0;
    std::int64_t head = 0;
    std::string state;
    std::string tape;
    std::int64_t tape_lo = 0;
    std::string output;
};

struct turing_multi
{
    NDMachine m;
};

struct turing_enum
{
    MachineEnumerator e;
};

struct turing_dovetail
{
    Dovetailer d;
};

namespace
{
thread_local std::string g_last_error;

turing_status status_of(ErrorKind kind) noexcept
{
    switch (kind)
    {
    case ErrorKind::Syntax:
        return TURING_E_SYNTAX;
    case ErrorKind::Determinism:
    case ErrorKind::EmptyMachine:
    case ErrorKind::InvalidMachine:
        return TURING_E_INVALID_MACHINE;
    case ErrorKind::MalformedCode:
        return TURING_E_MALFORMED_CODE;
    case ErrorKind::BudgetExceeded:
        return TURING_E_BUDGET;
    case ErrorKind::Undefined:
        return TURING_E_UNDEFINED;
    case ErrorKind::UnknownName:
        return TURING_E_UNKNOWN_NAME;
    case ErrorKind::InvalidArgument:
        return TURING_E_ARGUMENT;
    }
    return TURING_E_INTERNAL;
}

turing_status fail(turing_status status, std::string message)
{
    g_last_error = std::move(message);
    return status;
}

template <class F>
turing_status guard(F&& body) noexcept
{
    try
    {
        g_last_error.clear();
        body();
        return TURING_OK;
    }
    catch (const Error& e)
    {
        return fail(status_of(e.kind()), e.what());
    }
    catch (const std::bad_alloc&)
    {
        return fail(TURING_E_INTERNAL, "out of memory");
    }
    catch (const std::exception& e)
    {
        return fail(TURING_E_INTERNAL, e.what());
    }
    catch (...)
    {
        return fail(TURING_E_INTERNAL, "unknown failure");
    }
}

void require(bool ok, const char* what)
{
    if (!ok)
        throw Error(ErrorKind::InvalidArgument, what);
}

char* dup(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void put(char** out, const std::string& s)
{
    if (out)
        *out = dup(s);
}

BitString bits_arg(const char* text, const char* what)
{
    require(text != nullptr, what);
    require(is_bit_text(text), (std::string(what) + " must contain only 0 and 1").c_str());
    return BitString(std::string_view(text));
}

Nat nat_arg(const char* text)
{
    require(text != nullptr && *text != '\0', "natural number expected");
    for (const char* p = text; *p; ++p)
        require(*p >= '0' && *p <= '9', (std::string("not a natural number: ") + text).c_str());
    return Nat(std::string(text));
}

std::vector<Nat> nat_args(const char* const* args, size_t n)
{
    require(args != nullptr || n == 0, "argument list is null");
    std::vector<Nat> out;
    for (size_t i = 0; i < n; ++i)
        out.push_back(nat_arg(args[i]));
    return out;
}

turing_outcome* make_outcome(const Outcome& o, const std::string& state)
{
    auto* out = new turing_outcome;
    out->halted = o.halted();
    out->steps = o.steps;
    out->head = o.config.head;
    out->state = state;
    out->tape = o.config.tape.window();
    out->tape_lo = o.config.tape.blank() ? 0 : o.config.tape.lo();
    out->output = read_output(o.config).str();
    return out;
}

void report_fn(const FnResult& r, turing_fn_status* status, char** value, std::uint64_t* steps)
{
    switch (r.status)
    {
    case FnStatus::Value:
        *status = TURING_FN_VALUE;
        put(value, r.value.str());
        break;
    case FnStatus::Diverged:
        *status = TURING_FN_DIVERGED;
        break;
    case FnStatus::UndefinedInput:
        *status = TURING_FN_UNDEFINED;
        break;
    }
    if (steps)
        *steps = r.steps;
}

turing_verdict verdict_of(Verdict v) noexcept
{
    switch (v)
    {
    case Verdict::Accept:
        return TURING_ACCEPT;
    case Verdict::Reject:
        return TURING_REJECT;
    case Verdict::FuelExhausted:
        break;
    }
    return TURING_VERDICT_FUEL_EXHAUSTED;
}

}  // namespace

extern "C" {

const char* turing_last_error(void)
{
    return g_last_error.c_str();
}

const char* turing_status_name(turing_status status)
{
    switch (status)
    {
    case TURING_OK:
        return "ok";
    case TURING_E_ARGUMENT:
        return "invalid argument";
    case TURING_E_SYNTAX:
        return "syntax error";
    case TURING_E_INVALID_MACHINE:
        return "invalid machine";
    case TURING_E_MALFORMED_CODE:
        return "malformed code";
    case TURING_E_BUDGET:
        return "budget exceeded";
    case TURING_E_UNDEFINED:
        return "undefined";
    case TURING_E_UNKNOWN_NAME:
        return "unknown name";
    case TURING_E_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

void turing_string_free(char* s)
{
    std::free(s);
}

// -- naturals ---------------------------------------------------------------

turing_status turing_str_of_nat(const char* decimal, char** bits)
{
    return guard([&] {
        require(bits != nullptr, "output pointer is null");
        *bits = dup(str_of_nat(nat_arg(decimal)).str());
    });
}

turing_status turing_nat_of_str(const char* bits, char** decimal)
{
    return guard([&] {
        require(decimal != nullptr, "output pointer is null");
        *decimal = dup(nat_of_str(bits_arg(bits, "bit string")).str());
    });
}

turing_status turing_bar(const char* bits, char** out)
{
    return guard([&] {
        require(out != nullptr, "output pointer is null");
        *out = dup(bar(bits_arg(bits, "bit string")).str());
    });
}

// -- machines ---------------------------------------------------------------

turing_status turing_machine_parse(const char* text, turing_machine** out)
{
    return guard([&] {
        require(text != nullptr && out != nullptr, "null argument");
        *out = new turing_machine{parse_machine(text)};
    });
}

turing_status turing_machine_library(const char* name, turing_machine** out)
{
    return guard([&] {
        require(name != nullptr && out != nullptr, "null argument");
        *out = new turing_machine{library(name)};
    });
}

turing_status turing_machine_decode(const char* bits, turing_machine** out, char** rest)
{
    return guard([&] {
        require(out != nullptr, "output pointer is null");
        DecodedMachine d = decode_machine(bits_arg(bits, "code"));
        put(rest, d.rest.str());
        *out = new turing_machine{std::move(d.machine)};
    });
}

void turing_machine_free(turing_machine* m)
{
    delete m;
}

size_t turing_machine_rule_count(const turing_machine* m)
{
    return m ? m->m.rule_count() : 0;
}

size_t turing_machine_state_count(const turing_machine* m)
{
    return m ? m->m.state_count() : 0;
}

turing_status turing_machine_serialize(const turing_machine* m, char** text)
{
    return guard([&] {
        require(m != nullptr && text != nullptr, "null argument");
        *text = dup(serialize(m->m));
    });
}

turing_status turing_machine_encode(const turing_machine* m, char** bits)
{
    return guard([&] {
        require(m != nullptr && bits != nullptr, "null argument");
        *bits = dup(encode_machine(m->m).str());
    });
}

// -- running ----------------------------------------------------------------

turing_status turing_run(const turing_machine* m, const char* input, uint64_t fuel,
                         turing_trace_fn trace, void* user, turing_outcome** out)
{
    return guard([&] {
        require(m != nullptr && out != nullptr, "null argument");
        const BitString w = bits_arg(input, "input");
        StepObserver observer;
        if (trace)
            observer = [&](std::uint64_t step, const Configuration& c) {
                trace(user, trace_line(m->m, step, c).c_str());
            };
        const Outcome o = run(m->m, w, fuel, observer);
        *out = make_outcome(o, m->m.state_name(o.config.state));
    });
}

turing_status turing_universal_run(const char* stream, uint64_t fuel, turing_trace_fn trace,
                                   void* user, turing_outcome** out)
{
    return guard([&] {
        require(out != nullptr, "output pointer is null");
        const BitString raw = bits_arg(stream, "tape");
        // Decoded machines carry the names q1, q2, ... by state id.
        auto name = [](StateId s) { return "q" + std::to_string(s + 1); };
        StepObserver observer;
        if (trace)
            observer = [&](std::uint64_t step, const Configuration& c) {
                std::string line = "step=" + std::to_string(step) + " state=" + name(c.state) +
                                   " head=" + std::to_string(c.head) + " scan=";
                line.push_back(to_char(c.scanned()));
                trace(user, line.c_str());
            };
        const Outcome o = universal_run(raw, fuel, observer);
        *out = make_outcome(o, name(o.config.state));
    });
}

int turing_outcome_halted(const turing_outcome* o)
{
    return o && o->halted ? 1 : 0;
}

uint64_t turing_outcome_steps(const turing_outcome* o)
{
    return o ? o->steps : 0;
}

int64_t turing_outcome_head(const turing_outcome* o)
{
    return o ? o->head : 0;
}

const char* turing_outcome_state(const turing_outcome* o)
{
    return o ? o->state.c_str() : "";
}

const char* turing_outcome_tape(const turing_outcome* o)
{
    return o ? o->tape.c_str() : "";
}

int64_t turing_outcome_tape_lo(const turing_outcome* o)
{
    return o ? o->tape_lo : 0;
}

const char* turing_outcome_output(const turing_outcome* o)
{
    return o ? o->output.c_str() : "";
}

void turing_outcome_free(turing_outcome* o)
{
    delete o;
}

// -- functions --------------------------------------------------------------

turing_status turing_eval(const turing_machine* m, const char* const* args, size_t nargs,
                          uint64_t fuel, turing_fn_status* status, char** value, uint64_t* steps)
{
    return guard([&] {
        require(m != nullptr && status != nullptr, "null argument");
        report_fn(eval_fn(m->m, nat_args(args, nargs), fuel), status, value, steps);
    });
}

turing_status turing_eval_library(const char* name, const char* const* args, size_t nargs,
                                  uint64_t fuel, turing_fn_status* status, char** value,
                                  uint64_t* steps)
{
    return guard([&] {
        require(name != nullptr && status != nullptr, "null argument");
        report_fn(eval_library(name, nat_args(args, nargs), fuel), status, value, steps);
    });
}

size_t turing_library_count(void)
{
    return library_names().size();
}

const char* turing_library_name(size_t i)
{
    const auto& names = library_names();
    return i < names.size() ? names[i].c_str() : nullptr;
}

turing_status turing_library_arity(const char* name, size_t* arity)
{
    return guard([&] {
        require(name != nullptr && arity != nullptr, "null argument");
        *arity = library_arity(name);
    });
}

// -- enumeration ------------------------------------------------------------

int turing_is_valid_code(const char* bits)
{
    return bits && is_bit_text(bits) && is_valid_code(bits) ? 1 : 0;
}

turing_status turing_enum_open(size_t max_len, turing_enum** out)
{
    return guard([&] {
        require(out != nullptr, "output pointer is null");
        *out = new turing_enum{MachineEnumerator(max_len, EnumerationLimits{max_len})};
    });
}

turing_status turing_enum_next(turing_enum* e, int* has, uint64_t* index, char** code,
                               turing_machine** machine)
{
    return guard([&] {
        require(e != nullptr && has != nullptr, "null argument");
        auto item = e->e.next();
        *has = item ? 1 : 0;
        if (!item)
            return;
        if (index)
            *index = item->index.value;
        put(code, item->code.str());
        if (machine)
            *machine = new turing_machine{std::move(item->machine)};
    });
}

void turing_enum_free(turing_enum* e)
{
    delete e;
}

turing_status turing_machine_of_index(uint64_t index, size_t max_len, turing_machine** out)
{
    return guard([&] {
        require(out != nullptr, "output pointer is null");
        *out = new turing_machine{machine_of_index(GodelIndex{index}, EnumerationLimits{max_len})};
    });
}

turing_status turing_godel_number(const turing_machine* m, size_t max_len, uint64_t* index)
{
    return guard([&] {
        require(m != nullptr && index != nullptr, "null argument");
        *index = godel_number(m->m, EnumerationLimits{max_len}).value;
    });
}

// -- multitape --------------------------------------------------------------

turing_status turing_multi_parse(const char* text, turing_multi** out)
{
    return guard([&] {
        require(text != nullptr && out != nullptr, "null argument");
        *out = new turing_multi{NDMachine::from_document(parse_document(text))};
    });
}

turing_status turing_multi_fixture(const char* name, turing_multi** out)
{
    return guard([&] {
        require(name != nullptr && out != nullptr, "null argument");
        *out = new turing_multi{complexity_fixture(name)};
    });
}

size_t turing_multi_fixture_count(void)
{
    return complexity_fixture_names().size();
}

const char* turing_multi_fixture_name(size_t i)
{
    const auto& names = complexity_fixture_names();
    return i < names.size() ? names[i].c_str() : nullptr;
}

void turing_multi_free(turing_multi* m)
{
    delete m;
}

size_t turing_multi_tapes(const turing_multi* m)
{
    return m ? m->m.tapes() : 0;
}

int turing_multi_deterministic(const turing_multi* m)
{
    return m && m->m.deterministic() ? 1 : 0;
}

turing_status turing_multi_serialize(const turing_multi* m, char** text)
{
    return guard([&] {
        require(m != nullptr && text != nullptr, "null argument");
        *text = dup(serialize(m->m.to_document()));
    });
}

turing_status turing_accept(const turing_multi* m, const char* w, uint64_t fuel,
                            turing_verdict* verdict, uint64_t* steps, uint64_t* work_cells)
{
    return guard([&] {
        require(m != nullptr && verdict != nullptr, "null argument");
        const MultiMachine det(m->m);
        const MTOutcome out = mt_run(det, bits_arg(w, "input"), fuel);
        Verdict v = Verdict::FuelExhausted;
        if (out.halted())
            v = output_value(m->m, out.config) == 1 ? Verdict::Accept : Verdict::Reject;
        *verdict = verdict_of(v);
        if (steps)
            *steps = out.metrics.steps;
        if (work_cells)
            *work_cells = out.metrics.work_cells;
    });
}

turing_status turing_nd_accept(const turing_multi* m, const char* w, uint64_t fuel,
                               size_t max_frontier, turing_verdict* verdict)
{
    return guard([&] {
        require(m != nullptr && verdict != nullptr, "null argument");
        NDLimits limits;
        if (max_frontier)
            limits.max_frontier = max_frontier;
        *verdict = verdict_of(nd_accepts(m->m, bits_arg(w, "input"), fuel, limits));
    });
}

turing_status turing_meter(const turing_multi* m, const char* const* inputs, size_t count,
                           uint64_t fuel, turing_meter_row** rows, size_t* row_count)
{
    return guard([&] {
        require(m != nullptr && rows != nullptr && row_count != nullptr, "null argument");
        require(inputs != nullptr || count == 0, "input list is null");
        std::vector<BitString> words;
        for (size_t i = 0; i < count; ++i)
            words.push_back(bits_arg(inputs[i], "input"));
        const auto table = meter(MultiMachine(m->m), words, fuel);
        *rows = nullptr;
        *row_count = table.size();
        if (table.empty())
            return;
        auto* buf = static_cast<turing_meter_row*>(std::calloc(table.size(), sizeof(turing_meter_row)));
        if (!buf)
            throw std::bad_alloc();
        for (size_t i = 0; i < table.size(); ++i)
            buf[i] = {table[i].n, table[i].max_steps, table[i].max_work_cells, table[i].inputs,
                      table[i].all_halted ? 1 : 0};
        *rows = buf;
    });
}

void turing_meter_free(turing_meter_row* rows)
{
    std::free(rows);
}

turing_status turing_savitch(const turing_multi* m, const char* w, size_t space_bound,
                             uint64_t max_configs, int* accepted, turing_savitch_stats* stats)
{
    return guard([&] {
        require(m != nullptr && accepted != nullptr, "null argument");
        SavitchLimits limits;
        if (max_configs)
            limits.max_configs = max_configs;
        SavitchStats s;
        *accepted = savitch_accepts(m->m, bits_arg(w, "input"), space_bound, limits, &s) ? 1 : 0;
        if (stats)
            *stats = {s.config_bound, s.depth_bound, s.max_depth, s.rows, s.configs};
    });
}

// -- halting ----------------------------------------------------------------

turing_status turing_halts_within(const turing_machine* m, const char* y, uint64_t k, int* halted)
{
    return guard([&] {
        require(m != nullptr && halted != nullptr, "null argument");
        *halted = halts_within(m->m, nat_arg(y), k) ? 1 : 0;
    });
}

turing_status turing_dovetail_open(uint64_t stages, size_t max_len, turing_dovetail** out)
{
    return guard([&] {
        require(out != nullptr, "output pointer is null");
        *out = new turing_dovetail{Dovetailer(stages, EnumerationLimits{max_len})};
    });
}

turing_status turing_dovetail_next(turing_dovetail* d, int* has, uint64_t* x, char** y,
                                   char** code, uint64_t* stage)
{
    return guard([&] {
        require(d != nullptr && has != nullptr, "null argument");
        auto pair = d->d.next();
        *has = pair ? 1 : 0;
        if (!pair)
            return;
        if (x)
            *x = pair->x.value;
        put(y, pair->y.str());
        put(code, pair->code.str());
        if (stage)
            *stage = pair->stage;
    });
}

void turing_dovetail_free(turing_dovetail* d)
{
    delete d;
}

}  // extern "C"
