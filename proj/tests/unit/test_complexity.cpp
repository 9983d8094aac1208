// turing: a Turing machine toolkit
// Copyright 2026 The turing Authors.
// SPDX-License-Identifier: Apache-2.0

#include "support/oracles.hpp"

#include "turing/error.hpp"
#include "turing/funclib.hpp"
#include "turing/multitape.hpp"
#include "turing/savitch.hpp"
#include "turing/text_format.hpp"

#include <doctest.h>

#include <random>

using namespace turing;

namespace
{
std::vector<std::string> words_up_to(std::size_t n)
{
    std::vector<std::string> out{""};
    for (std::size_t i = 0; i < out.size(); ++i)
        if (out[i].size() < n)
        {
            out.push_back(out[i] + "0");
            out.push_back(out[i] + "1");
        }
    return out;
}

Verdict from_paths(oracle::PathVerdict v)
{
    switch (v)
    {
    case oracle::PathVerdict::Accept:
        return Verdict::Accept;
    case oracle::PathVerdict::Reject:
        return Verdict::Reject;
    default:
        return Verdict::FuelExhausted;
    }
}

NDMachine nd(std::string_view text)
{
    return NDMachine::from_document(parse_document(text));
}

ErrorKind kind_of(auto&& f)
{
    try
    {
        f();
    }
    catch (const Error& e)
    {
        return e.kind();
    }
    return ErrorKind::Syntax;
}

}  // namespace

TEST_SUITE("complexity")
{
    TEST_CASE("validation")
    {
        CHECK(kind_of([] { nd("tapes: 2\nreadonly-input: yes\na 0 B 1 0 b\n"); }) ==
              ErrorKind::InvalidMachine);
        CHECK(kind_of([] { nd("tapes: 9\na 000000000 RRRRRRRRR b\n"); }) ==
              ErrorKind::InvalidMachine);
        CHECK(kind_of([] { nd("readonly-input: yes\na 0 R b\n"); }) == ErrorKind::InvalidMachine);
        CHECK(kind_of([] { MultiMachine::from_document(parse_document("a 0 R b\na 0 L b\n")); }) ==
              ErrorKind::Determinism);
        const NDMachine grouped = nd("tapes: 3\na 0BB R01 b\n");
        CHECK(grouped.rules()[0].actions[2] == Action::Write1);
        CHECK(serialize(grouped.to_document()) == "tapes: 3\na 0BB R01 b\n");
    }

    TEST_CASE("single tape reproduces machine runs")
    {
        std::mt19937_64 rng(5);
        for (int i = 0; i < 300; ++i)
        {
            const Machine m = oracle::random_machine(rng, 4, 8);
            const MultiMachine mm(NDMachine::from_machine(m));
            for (const char* w : {"", "0", "1", "0110"})
            {
                const Outcome a = run(m, BitString(w), 50);
                const MTOutcome b = mt_run(mm, BitString(w), 50);
                CHECK(a.kind == b.kind);
                CHECK(a.steps == b.steps);
                CHECK(a.config.state == b.config.state);
                CHECK(a.config.head == b.config.heads[0]);
                CHECK(a.config.tape == b.config.tapes[0]);
            }
        }
    }

    TEST_CASE("accepts")
    {
        const MultiMachine pal(complexity_fixture("palindrome"));
        CHECK(accepts(pal, BitString("0110"), 1000) == Verdict::Accept);
        CHECK(accepts(pal, BitString("01"), 1000) == Verdict::Reject);
        CHECK(accepts(pal, BitString(""), 1000) == Verdict::Accept);
        CHECK(accepts(pal, BitString("0110"), 3) == Verdict::FuelExhausted);

        const MultiMachine blank(nd("a 0 R a\n"));
        CHECK(accepts(blank, BitString(""), 10) == Verdict::Reject);
        const MultiMachine runner(nd("a B R a\n"));
        CHECK(accepts(runner, BitString(""), 0) == Verdict::FuelExhausted);
    }

    TEST_CASE("palindrome decider is correct and linear")
    {
        const MultiMachine pal(complexity_fixture("palindrome"));
        for (const auto& w : words_up_to(10))
        {
            const MTOutcome o = mt_run(pal, BitString(w), 10000);
            REQUIRE(o.halted());
            CHECK((output_value(pal.nd(), o.config) == 1) == oracle::is_palindrome(w));
            CHECK(o.steps <= 6 * w.size() + 4);
        }
    }

    TEST_CASE("metering")
    {
        const MultiMachine w1(complexity_fixture("write1_halt"));
        std::vector<BitString> inputs;
        for (const auto& w : words_up_to(8))
            if (!w.empty())
                inputs.emplace_back(w);
        auto rows = meter(w1, inputs, 100);
        REQUIRE(rows.size() == 8);
        for (const auto& r : rows)
        {
            CHECK(r.max_steps == 1);
            CHECK(r.all_halted);
        }

        rows = meter(MultiMachine(complexity_fixture("palindrome")), inputs, 10000);
        for (std::size_t i = 1; i < rows.size(); ++i)
            CHECK(rows[i].max_steps >= rows[i - 1].max_steps);

        CHECK(meter(w1, std::vector<BitString>{}, 10).empty());

        const MultiMachine runner(nd("a B R a\na 0 R a\n"));
        rows = meter(runner, std::vector<BitString>{BitString("0")}, 10);
        REQUIRE(rows.size() == 1);
        CHECK_FALSE(rows[0].all_halted);
    }

    TEST_CASE("read-only input is excluded from space")
    {
        const MultiMachine scan(complexity_fixture("readonly_scan"));
        for (const char* w : {"", "0", "0101", "1111111"})
        {
            const MTOutcome o = mt_run(scan, BitString(w), 100);
            REQUIRE(o.halted());
            CHECK(o.metrics.work_cells == 1);
            CHECK(output_value(scan.nd(), o.config) == 1);
        }
    }

    TEST_CASE("work cells never exceed steps + 1 per tape")
    {
        std::mt19937_64 rng(9);
        for (int i = 0; i < 300; ++i)
        {
            const std::size_t k = 1 + i % 3;
            NDMachine m = nd(oracle::random_nd_text(rng, 4, k, false, 10));
            if (!m.deterministic())
                continue;
            const MultiMachine mm(std::move(m));
            const MTOutcome o = mt_run(mm, BitString("0110"), 30);
            CHECK(o.metrics.steps == o.steps);
            CHECK(o.metrics.work_cells <= k * (o.steps + 1));
        }
    }

    TEST_CASE("nondeterministic acceptance")
    {
        const NDMachine guess = complexity_fixture("guess_bit");
        CHECK_FALSE(guess.deterministic());
        for (const auto& w : words_up_to(6))
            CHECK(nd_accepts(guess, BitString(w), 20) ==
                  (w.empty() ? Verdict::Reject : Verdict::Accept));
        CHECK(nd_accepts(complexity_fixture("looper_nd"), BitString("01"), 50) ==
              Verdict::FuelExhausted);
        CHECK_THROWS_AS(nd_accepts(complexity_fixture("looper_nd"), BitString(""), 50, NDLimits{8}),
                        Error);
    }

    TEST_CASE("deterministic machines: nd_accepts equals accepts")
    {
        for (const auto& name : complexity_fixture_names())
        {
            const NDMachine m = complexity_fixture(name);
            if (!m.deterministic())
                continue;
            const MultiMachine det(m);
            for (const auto& w : words_up_to(8))
                CHECK(nd_accepts(m, BitString(w), 500) == accepts(det, BitString(w), 500));
        }
    }

    TEST_CASE("breadth-first search equals path enumeration")
    {
        std::mt19937_64 rng(21);
        for (int i = 0; i < 250; ++i)
        {
            const std::size_t k = 1 + i % 2;
            const NDMachine m = nd(oracle::random_nd_text(rng, 4, k, k == 2 && i % 4 == 1, 10));
            for (const char* w : {"", "1", "01", "110"})
                for (std::uint64_t fuel : {0, 3, 9})
                    CHECK(nd_accepts(m, BitString(w), fuel) ==
                          from_paths(oracle::all_paths(m, w, fuel)));
        }
    }

    TEST_CASE("savitch examples")
    {
        const NDMachine spread = complexity_fixture("spread_accept");
        CHECK(nd_accepts(spread, BitString(""), 100) == Verdict::Accept);
        CHECK_FALSE(savitch_accepts(spread, BitString(""), 2));
        CHECK(savitch_accepts(spread, BitString(""), 3));

        const NDMachine guess = complexity_fixture("guess_bit");
        // The input itself occupies tape 0, so space 4 covers |w| <= 3.
        for (const auto& w : words_up_to(6))
        {
            const bool fits = w.size() <= 3;
            CHECK(savitch_accepts(guess, BitString(w), 4) ==
                  (fits && nd_accepts(guess, BitString(w), 100) == Verdict::Accept));
            CHECK(savitch_accepts(guess, BitString(w), 4) == oracle::space_bounded_reach(guess, w, 4));
        }

        const NDMachine w1 = complexity_fixture("write1_halt");
        CHECK(savitch_accepts(w1, BitString("0"), 3) ==
              (accepts(MultiMachine(w1), BitString("0"), 10) == Verdict::Accept));

        CHECK_THROWS_AS(savitch_accepts(spread, BitString(""), 0), Error);
        CHECK(kind_of([&] { savitch_accepts(spread, BitString(""), 6, SavitchLimits{100}); }) ==
              ErrorKind::BudgetExceeded);
    }

    TEST_CASE("savitch equals bounded reachability, depth within bound")
    {
        std::mt19937_64 rng(33);
        for (int i = 0; i < 250; ++i)
        {
            const std::size_t k = 1 + i % 2;
            const NDMachine m = nd(oracle::random_nd_text(rng, 4, k, k == 2 && i % 4 == 1, 10));
            const std::size_t b = 1 + static_cast<std::size_t>(i % 6);
            for (const char* w : {"", "1", "011"})
            {
                SavitchStats stats;
                const bool got = savitch_accepts(m, BitString(w), b, {}, &stats);
                CHECK(got == oracle::space_bounded_reach(m, w, b));
                CHECK(stats.max_depth <= stats.depth_bound);
            }
        }
    }
}
