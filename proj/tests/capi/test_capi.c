/* turing: a Turing machine toolkit
 * Copyright 2026 The turing Authors.
 * SPDX-License-Identifier: Apache-2.0
 *
 * Exercises the shared library through its C header only.
 */
#include <turing/turing.h>

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                                       \
    do                                                                     \
    {                                                                      \
        if (!(cond))                                                       \
        {                                                                  \
            fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                    \
        }                                                                  \
    } while (0)

#define EXPECT_STR(got, want) EXPECT((got) != NULL && strcmp((got), (want)) == 0)

static void count_lines(void* user, const char* line)
{
    (void)line;
    ++*(int*)user;
}

static void test_numbers(void)
{
    char* s = NULL;
    EXPECT(turing_str_of_nat("6", &s) == TURING_OK);
    EXPECT_STR(s, "11");
    turing_string_free(s);

    EXPECT(turing_nat_of_str("0110", &s) == TURING_OK);
    EXPECT_STR(s, "21");
    turing_string_free(s);

    EXPECT(turing_bar("01", &s) == TURING_OK);
    EXPECT_STR(s, "11001");
    turing_string_free(s);

    s = NULL;
    EXPECT(turing_bar("012", &s) == TURING_E_ARGUMENT);
    EXPECT(s == NULL);
    EXPECT(strlen(turing_last_error()) > 0);
    EXPECT(turing_str_of_nat(NULL, &s) == TURING_E_ARGUMENT);
    EXPECT_STR(turing_status_name(TURING_E_BUDGET), "budget exceeded");
}

static void test_machines(void)
{
    turing_machine* m = NULL;
    char* text = NULL;
    char* bits = NULL;
    char* rest = NULL;

    EXPECT(turing_machine_parse("a 0 R a\na 1 R a\n", &m) == TURING_OK);
    EXPECT(turing_machine_rule_count(m) == 2);
    EXPECT(turing_machine_state_count(m) == 1);
    EXPECT(turing_machine_encode(m, &bits) == TURING_OK);

    {
        size_t n = strlen(bits);
        char* stream = malloc(n + 3);
        turing_machine* back = NULL;
        memcpy(stream, bits, n);
        memcpy(stream + n, "01", 3);
        EXPECT(turing_machine_decode(stream, &back, &rest) == TURING_OK);
        EXPECT_STR(rest, "01");
        EXPECT(turing_machine_serialize(back, &text) == TURING_OK);
        EXPECT_STR(text, "q1 0 R q1\nq1 1 R q1\n");
        turing_string_free(text);
        turing_string_free(rest);
        turing_machine_free(back);
        free(stream);
    }
    turing_string_free(bits);
    turing_machine_free(m);

    m = NULL;
    EXPECT(turing_machine_parse("a 0 R\n", &m) == TURING_E_SYNTAX);
    EXPECT(m == NULL);
    EXPECT(turing_machine_parse("a 0 R a\na 0 L a\n", &m) == TURING_E_INVALID_MACHINE);
    EXPECT(turing_machine_decode("1111", &m, NULL) == TURING_E_MALFORMED_CODE);
    EXPECT(turing_machine_library("no_such_machine", &m) == TURING_E_UNKNOWN_NAME);
    turing_machine_free(NULL);
}

static void test_running(void)
{
    turing_machine* m = NULL;
    turing_outcome* o = NULL;
    int lines = 0;

    EXPECT(turing_machine_parse("a 0 R a\na 1 R a\n", &m) == TURING_OK);
    EXPECT(turing_run(m, "0101", 100, count_lines, &lines, &o) == TURING_OK);
    EXPECT(turing_outcome_halted(o));
    EXPECT(turing_outcome_steps(o) == 4);
    EXPECT(lines == 4);
    EXPECT(turing_outcome_head(o) == 4);
    EXPECT_STR(turing_outcome_tape(o), "0101");
    EXPECT(turing_outcome_tape_lo(o) == 0);
    EXPECT_STR(turing_outcome_output(o), "0");
    turing_outcome_free(o);

    EXPECT(turing_run(m, "0101", 2, NULL, NULL, &o) == TURING_OK);
    EXPECT(!turing_outcome_halted(o));
    EXPECT(turing_outcome_steps(o) == 2);
    turing_outcome_free(o);

    {
        char* bits = NULL;
        char stream[128];
        turing_outcome* u = NULL;
        EXPECT(turing_machine_encode(m, &bits) == TURING_OK);
        snprintf(stream, sizeof stream, "%s0101", bits);
        EXPECT(turing_universal_run(stream, 100, NULL, NULL, &u) == TURING_OK);
        EXPECT(turing_outcome_halted(u));
        EXPECT(turing_outcome_steps(u) == 4);
        EXPECT_STR(turing_outcome_tape(u), "0101");
        turing_outcome_free(u);
        turing_string_free(bits);
    }
    EXPECT(turing_universal_run("1111", 100, NULL, NULL, &o) == TURING_E_UNDEFINED);
    turing_machine_free(m);
}

static void test_functions(void)
{
    const char* args[] = {"41"};
    const char* pair_args[] = {"3", "5"};
    turing_fn_status fs;
    char* value = NULL;
    uint64_t steps = 0;
    size_t arity = 0;
    size_t i;
    int found = 0;

    EXPECT(turing_eval_library("successor", args, 1, 10000, &fs, &value, &steps) == TURING_OK);
    EXPECT(fs == TURING_FN_VALUE);
    EXPECT_STR(value, "42");
    EXPECT(steps > 0);
    turing_string_free(value);

    EXPECT(turing_eval_library("proj_2_2", pair_args, 2, 10000, &fs, &value, NULL) == TURING_OK);
    EXPECT_STR(value, "5");
    turing_string_free(value);

    {
        const char* bad[] = {"30"}; /* str 1111 is not a pair */
        value = NULL;
        EXPECT(turing_eval_library("left_g", bad, 1, 10000, &fs, &value, NULL) == TURING_OK);
        EXPECT(fs == TURING_FN_UNDEFINED);
        EXPECT(value == NULL);
    }

    EXPECT(turing_library_count() == 15);
    for (i = 0; i < turing_library_count(); ++i)
        if (strcmp(turing_library_name(i), "eq_pred") == 0)
            found = 1;
    EXPECT(found);
    EXPECT(turing_library_name(turing_library_count()) == NULL);
    EXPECT(turing_library_arity("zero_3", &arity) == TURING_OK);
    EXPECT(arity == 3);
}

static void test_enumeration(void)
{
    turing_enum* e = NULL;
    turing_machine* m = NULL;
    char* code = NULL;
    char* text = NULL;
    uint64_t index = 0;
    uint64_t back = 0;
    int has = 1;
    int count = 0;

    EXPECT(turing_is_valid_code("11000100101000000101"));
    EXPECT(!turing_is_valid_code("110001001010000001010"));

    EXPECT(turing_enum_open(24, &e) == TURING_OK);
    for (;;)
    {
        EXPECT(turing_enum_next(e, &has, &index, &code, NULL) == TURING_OK);
        if (!has)
            break;
        ++count;
        EXPECT(index == (uint64_t)count);
        EXPECT(strlen(code) == 20);
        turing_string_free(code);
    }
    EXPECT(count == 30);
    turing_enum_free(e);

    EXPECT(turing_machine_of_index(1, 24, &m) == TURING_OK);
    EXPECT(turing_machine_serialize(m, &text) == TURING_OK);
    EXPECT_STR(text, "q1 0 0 q1\n");
    EXPECT(turing_godel_number(m, 24, &back) == TURING_OK);
    EXPECT(back == 1);
    turing_string_free(text);
    turing_machine_free(m);

    EXPECT(turing_machine_of_index(31, 24, &m) == TURING_E_BUDGET);
    EXPECT(turing_machine_of_index(0, 24, &m) == TURING_E_ARGUMENT);
}

static void test_multitape(void)
{
    turing_multi* pal = NULL;
    turing_multi* guess = NULL;
    turing_verdict v;
    uint64_t steps = 0;
    int accepted = 0;
    turing_savitch_stats stats;
    turing_meter_row* rows = NULL;
    size_t row_count = 0;
    const char* inputs[] = {"0", "1", "01", "0110", ""};

    EXPECT(turing_multi_fixture("palindrome", &pal) == TURING_OK);
    EXPECT(turing_multi_tapes(pal) == 2);
    EXPECT(turing_multi_deterministic(pal));
    EXPECT(turing_accept(pal, "0110", 1000, &v, &steps, NULL) == TURING_OK);
    EXPECT(v == TURING_ACCEPT);
    EXPECT(turing_accept(pal, "01", 1000, &v, NULL, NULL) == TURING_OK);
    EXPECT(v == TURING_REJECT);

    EXPECT(turing_meter(pal, inputs, 5, 10000, &rows, &row_count) == TURING_OK);
    EXPECT(row_count == 4);
    EXPECT(rows[0].n == 0);
    EXPECT(rows[3].n == 4);
    EXPECT(rows[1].inputs == 2);
    turing_meter_free(rows);

    EXPECT(turing_multi_fixture("guess_bit", &guess) == TURING_OK);
    EXPECT(!turing_multi_deterministic(guess));
    EXPECT(turing_accept(guess, "1", 100, &v, NULL, NULL) == TURING_E_INVALID_MACHINE);
    EXPECT(turing_nd_accept(guess, "1", 100, 0, &v) == TURING_OK);
    EXPECT(v == TURING_ACCEPT);
    EXPECT(turing_savitch(guess, "1", 4, 0, &accepted, &stats) == TURING_OK);
    EXPECT(accepted);
    EXPECT(stats.max_depth <= stats.depth_bound);
    EXPECT(turing_savitch(guess, "1", 0, 0, &accepted, NULL) == TURING_E_ARGUMENT);

    EXPECT(turing_multi_fixture_count() >= 6);
    EXPECT(turing_multi_fixture("nope", &pal) == TURING_E_UNKNOWN_NAME);
    turing_multi_free(pal);
    turing_multi_free(guess);
}

static void test_halting(void)
{
    turing_machine* m = NULL;
    turing_dovetail* d = NULL;
    int halted = 1;
    int has = 1;
    uint64_t x = 0;
    uint64_t stage = 0;
    char* y = NULL;
    char* code = NULL;
    int pairs = 0;

    EXPECT(turing_machine_parse("a 0 R a\na 1 R a\na B R a\n", &m) == TURING_OK);
    EXPECT(turing_halts_within(m, "0", 1000, &halted) == TURING_OK);
    EXPECT(!halted);
    turing_machine_free(m);

    EXPECT(turing_dovetail_open(5, 24, &d) == TURING_OK);
    for (;;)
    {
        EXPECT(turing_dovetail_next(d, &has, &x, &y, &code, &stage) == TURING_OK);
        if (!has)
            break;
        ++pairs;
        EXPECT(x >= 1 && x <= 5);
        EXPECT(stage >= 1 && stage <= 5);
        EXPECT(!(x == 1 && strcmp(y, "0") == 0));
        turing_string_free(y);
        turing_string_free(code);
    }
    EXPECT(pairs > 0);
    turing_dovetail_free(d);

    EXPECT(turing_dovetail_open(40, 24, &d) == TURING_OK);
    {
        turing_status s = TURING_OK;
        while (s == TURING_OK)
        {
            s = turing_dovetail_next(d, &has, &x, &y, &code, &stage);
            if (s == TURING_OK && !has)
                break;
            if (s == TURING_OK)
            {
                turing_string_free(y);
                turing_string_free(code);
            }
        }
        EXPECT(s == TURING_E_BUDGET);
    }
    turing_dovetail_free(d);
}

int main(void)
{
    test_numbers();
    test_machines();
    test_running();
    test_functions();
    test_enumeration();
    test_multitape();
    test_halting();
    if (failures)
    {
        fprintf(stderr, "%d check(s) failed\n", failures);
        return 1;
    }
    puts("capi: all checks passed");
    return 0;
}
