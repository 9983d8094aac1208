/* turing: a Turing machine toolkit
 * Copyright 2026 The turing Authors.
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to libturing. Every handle is opaque and owned by the caller
 * until passed to its _free function. Functions returning turing_status leave
 * a message for turing_last_error() on failure. Strings returned through
 * char** out-parameters are heap allocated; release them with
 * turing_string_free(). Bit strings are ASCII '0'/'1'; naturals too large for
 * 64 bits travel as decimal strings.
 */
#ifndef TURING_TURING_H
#define TURING_TURING_H

#include <stddef.h>
#include <stdint.h>

#if defined(TURING_BUILDING_LIBRARY)
#define TURING_API __attribute__((visibility("default")))
#else
#define TURING_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum turing_status
{
    TURING_OK = 0,
    TURING_E_ARGUMENT = 1,        /* null pointer, bad bit string, bad number */
    TURING_E_SYNTAX = 2,          /* .tm text does not parse */
    TURING_E_INVALID_MACHINE = 3, /* empty, nondeterministic or ill-formed machine */
    TURING_E_MALFORMED_CODE = 4,  /* bit stream is not a readable code */
    TURING_E_BUDGET = 5,          /* enumeration / search budget exceeded */
    TURING_E_UNDEFINED = 6,       /* universal input lacks a valid E(T) prefix */
    TURING_E_UNKNOWN_NAME = 7,
    TURING_E_INTERNAL = 8
} turing_status;

/* Message for the last failure on the calling thread ("" if none). */
TURING_API const char* turing_last_error(void);
TURING_API const char* turing_status_name(turing_status status);
TURING_API void turing_string_free(char* s);

/* ---- naturals and bit strings ---- */

TURING_API turing_status turing_str_of_nat(const char* decimal, char** bits);
TURING_API turing_status turing_nat_of_str(const char* bits, char** decimal);
TURING_API turing_status turing_bar(const char* bits, char** out);

/* ---- single-tape machines ---- */

typedef struct turing_machine turing_machine;

TURING_API turing_status turing_machine_parse(const char* text, turing_machine** out);
TURING_API turing_status turing_machine_library(const char* name, turing_machine** out);
/* Reads E(T) from the front of `bits`; the unread remainder goes to *rest
 * when rest is non-null. */
TURING_API turing_status turing_machine_decode(const char* bits, turing_machine** out, char** rest);
TURING_API void turing_machine_free(turing_machine* m);

TURING_API size_t turing_machine_rule_count(const turing_machine* m);
TURING_API size_t turing_machine_state_count(const turing_machine* m);
TURING_API turing_status turing_machine_serialize(const turing_machine* m, char** text);
TURING_API turing_status turing_machine_encode(const turing_machine* m, char** bits);

/* ---- running ---- */

typedef struct turing_outcome turing_outcome;

/* Receives one `step=<n> state=<name> head=<i> scan=<sym>` line per step. */
typedef void (*turing_trace_fn)(void* user, const char* line);

TURING_API turing_status turing_run(const turing_machine* m, const char* input, uint64_t fuel,
                                    turing_trace_fn trace, void* user, turing_outcome** out);

/* Runs T on p for a stream E(T)p; TURING_E_UNDEFINED when no valid prefix. */
TURING_API turing_status turing_universal_run(const char* stream, uint64_t fuel,
                                              turing_trace_fn trace, void* user,
                                              turing_outcome** out);

TURING_API int turing_outcome_halted(const turing_outcome* o);
TURING_API uint64_t turing_outcome_steps(const turing_outcome* o);
TURING_API int64_t turing_outcome_head(const turing_outcome* o);
/* Owned by the outcome. */
TURING_API const char* turing_outcome_state(const turing_outcome* o);
/* Non-blank window as 0/1/B characters, "" for a blank tape. */
TURING_API const char* turing_outcome_tape(const turing_outcome* o);
/* Cell of the first window character (0 for a blank tape). */
TURING_API int64_t turing_outcome_tape_lo(const turing_outcome* o);
/* Output natural under the function convention, in decimal. */
TURING_API const char* turing_outcome_output(const turing_outcome* o);
TURING_API void turing_outcome_free(turing_outcome* o);

/* ---- functions ---- */

typedef enum turing_fn_status
{
    TURING_FN_VALUE = 0,
    TURING_FN_DIVERGED = 1,
    TURING_FN_UNDEFINED = 2
} turing_fn_status;

/* `args` are decimal naturals. *value is set only for TURING_FN_VALUE. */
TURING_API turing_status turing_eval(const turing_machine* m, const char* const* args,
                                     size_t nargs, uint64_t fuel, turing_fn_status* status,
                                     char** value, uint64_t* steps);
TURING_API turing_status turing_eval_library(const char* name, const char* const* args,
                                             size_t nargs, uint64_t fuel,
                                             turing_fn_status* status, char** value,
                                             uint64_t* steps);

TURING_API size_t turing_library_count(void);
TURING_API const char* turing_library_name(size_t i);
TURING_API turing_status turing_library_arity(const char* name, size_t* arity);

/* ---- enumeration ---- */

typedef struct turing_enum turing_enum;

TURING_API int turing_is_valid_code(const char* bits);
TURING_API turing_status turing_enum_open(size_t max_len, turing_enum** out);
/* *has is 0 after the last machine; otherwise *code and *machine are set
 * (either may be null to skip). */
TURING_API turing_status turing_enum_next(turing_enum* e, int* has, uint64_t* index, char** code,
                                          turing_machine** machine);
TURING_API void turing_enum_free(turing_enum* e);

TURING_API turing_status turing_machine_of_index(uint64_t index, size_t max_len,
                                                 turing_machine** out);
TURING_API turing_status turing_godel_number(const turing_machine* m, size_t max_len,
                                             uint64_t* index);

/* ---- multitape and nondeterministic machines ---- */

typedef struct turing_multi turing_multi;

typedef enum turing_verdict
{
    TURING_ACCEPT = 0,
    TURING_REJECT = 1,
    TURING_VERDICT_FUEL_EXHAUSTED = 2
} turing_verdict;

typedef struct turing_meter_row
{
    size_t n;
    uint64_t max_steps;
    uint64_t max_work_cells;
    size_t inputs;
    int all_halted;
} turing_meter_row;

typedef struct turing_savitch_stats
{
    uint64_t config_bound;
    unsigned depth_bound;
    unsigned max_depth;
    size_t rows;
    size_t configs;
} turing_savitch_stats;

TURING_API turing_status turing_multi_parse(const char* text, turing_multi** out);
TURING_API turing_status turing_multi_fixture(const char* name, turing_multi** out);
TURING_API size_t turing_multi_fixture_count(void);
TURING_API const char* turing_multi_fixture_name(size_t i);
TURING_API void turing_multi_free(turing_multi* m);

TURING_API size_t turing_multi_tapes(const turing_multi* m);
TURING_API int turing_multi_deterministic(const turing_multi* m);
TURING_API turing_status turing_multi_serialize(const turing_multi* m, char** text);

/* Deterministic machines only. steps / work_cells may be null. */
TURING_API turing_status turing_accept(const turing_multi* m, const char* w, uint64_t fuel,
                                       turing_verdict* verdict, uint64_t* steps,
                                       uint64_t* work_cells);
/* max_frontier 0 selects the default. */
TURING_API turing_status turing_nd_accept(const turing_multi* m, const char* w, uint64_t fuel,
                                          size_t max_frontier, turing_verdict* verdict);
/* Rows sorted by n; free with turing_meter_free. */
TURING_API turing_status turing_meter(const turing_multi* m, const char* const* inputs,
                                      size_t count, uint64_t fuel, turing_meter_row** rows,
                                      size_t* row_count);
TURING_API void turing_meter_free(turing_meter_row* rows);
/* max_configs 0 selects the default; stats may be null. */
TURING_API turing_status turing_savitch(const turing_multi* m, const char* w, size_t space_bound,
                                        uint64_t max_configs, int* accepted,
                                        turing_savitch_stats* stats);

/* ---- halting ---- */

typedef struct turing_dovetail turing_dovetail;

TURING_API turing_status turing_halts_within(const turing_machine* m, const char* y, uint64_t k,
                                             int* halted);
TURING_API turing_status turing_dovetail_open(uint64_t stages, size_t max_len,
                                              turing_dovetail** out);
/* *has is 0 after the last pair. *y and *code are decimal strings. */
TURING_API turing_status turing_dovetail_next(turing_dovetail* d, int* has, uint64_t* x, char** y,
                                              char** code, uint64_t* stage);
TURING_API void turing_dovetail_free(turing_dovetail* d);

#ifdef __cplusplus
}
#endif

#endif /* TURING_TURING_H */
