// turing: a Turing machine toolkit
// Copyright 2026 The turing Authors.
// SPDX-License-Identifier: Apache-2.0

#include "support/oracles.hpp"

#include "turing/codec.hpp"
#include "turing/error.hpp"
#include "turing/funclib.hpp"
#include "turing/text_format.hpp"
#include "turing/universal.hpp"

#include <doctest.h>

#include <random>

using namespace turing;

TEST_SUITE("universal")
{
    TEST_CASE("matches direct runs on library machines")
    {
        for (const auto& name : library_names())
        {
            const Machine m = library(name);
            const BitString code = encode_machine(m);
            for (std::uint32_t n = 0; n < 15; ++n)
            {
                const BitString p = str_of_nat(n);
                const Outcome direct = run(m, p, 2000);
                const Outcome via = universal_run(code + p, 2000);
                CHECK(via == direct);
            }
        }
    }

    TEST_CASE("observer and decoded machine")
    {
        const Machine m = parse_machine("a 0 R a\na 1 R a\n");
        std::optional<Machine> decoded;
        std::uint64_t seen = 0;
        const Outcome o = universal_run(encode_machine(m) + BitString("0101"), 100,
                                        [&](std::uint64_t, const Configuration&) { ++seen; },
                                        &decoded);
        CHECK(o.halted());
        CHECK(o.steps == 4);
        CHECK(seen == 4);
        REQUIRE(decoded);
        CHECK(*decoded == m);
    }

    TEST_CASE("fuel exhaustion is an outcome")
    {
        const Machine runner = parse_machine("q1 B R q1");
        const Outcome o = universal_run(encode_machine(runner), 50);
        CHECK(o.kind == OutcomeKind::FuelExhausted);
        CHECK(o.steps == 50);
    }

    TEST_CASE("streams without a code prefix are undefined")
    {
        for (const char* bad : {"", "1111", "0", "11000" "100", "11000" "100" "111111111111"})
        {
            try
            {
                universal_run(BitString(bad), 10);
                FAIL("accepted " << bad);
            }
            catch (const Error& e)
            {
                CHECK(e.kind() == ErrorKind::Undefined);
            }
        }
    }
}
