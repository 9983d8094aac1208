// turing: a Turing machine toolkit
// Copyright 2026 The turing Authors.
// SPDX-License-Identifier: Apache-2.0

#include "support/host_functions.hpp"

#include "turing/codec.hpp"
#include "turing/error.hpp"
#include "turing/funclib.hpp"
#include "turing/text_format.hpp"

#include <doctest.h>

using namespace turing;

namespace
{
constexpr std::uint64_t kFuel = 1'000'000;

void check_against_host(const std::string& name, const std::vector<std::uint64_t>& xs)
{
    std::vector<Nat> args(xs.begin(), xs.end());
    const FnResult got = eval_library(name, args, kFuel);
    const auto want = oracle::host_function(name, xs);
    INFO(name << " on " << xs.size() << " args, first " << xs[0]);
    if (!want)
    {
        CHECK(got.status == FnStatus::UndefinedInput);
        return;
    }
    REQUIRE(got.status == FnStatus::Value);
    CHECK(got.value == *want);
}

}  // namespace

TEST_SUITE("funclib")
{
    TEST_CASE("argument encoding")
    {
        const std::vector<Nat> args = {3, 5};
        CHECK(encode_args(args).str() == "11000" "11010");
        CHECK_THROWS_AS(encode_args(std::vector<Nat>{}), Error);
    }

    TEST_CASE("output convention")
    {
        Tape t = Tape::from_bits(BitString("0110"));
        t.write(6, Symbol::One);
        CHECK(read_output(t, 1) == nat_of_str(BitString("0110")));
        CHECK(read_output(t, 4) == 0);
        CHECK(read_output(t, 6) == 2);
    }

    TEST_CASE("names and arities")
    {
        CHECK(library_names().size() == 15);
        for (const auto& name : library_names())
            CHECK(library_arity(name) == oracle::host_arity(name));
        CHECK_THROWS_AS(library("nope"), Error);
        CHECK(library("proj_1_1") == library("proj_1_3"));
    }

    TEST_CASE("unary functions on every argument up to six bits")
    {
        for (const char* name :
             {"successor", "zero_1", "proj_1_1", "length", "bar_fn", "left_g", "right_h", "eq_pred"})
            for (std::uint64_t x = 0; x <= 126; ++x)
                check_against_host(name, {x});
    }

    TEST_CASE("binary and ternary functions on small arguments")
    {
        for (const char* name : {"zero_2", "proj_1_2", "proj_2_2"})
            for (std::uint64_t x = 0; x <= 30; ++x)
                for (std::uint64_t y = 0; y <= 30; ++y)
                    check_against_host(name, {x, y});
        for (const char* name : {"zero_3", "proj_1_3", "proj_2_3", "proj_3_3"})
            for (std::uint64_t x = 0; x <= 9; ++x)
                for (std::uint64_t y = 0; y <= 9; ++y)
                    for (std::uint64_t z = 0; z <= 9; ++z)
                        check_against_host(name, {x, y, z});
    }

    TEST_CASE("wrappers reject malformed pairs and wrong arity")
    {
        const Nat ones = nat_of_str(BitString("1111"));
        for (const char* name : {"left_g", "right_h", "eq_pred"})
        {
            CHECK(eval_library(name, std::vector<Nat>{ones}, kFuel).status ==
                  FnStatus::UndefinedInput);
            CHECK(eval_library(name, std::vector<Nat>{0}, kFuel).status ==
                  FnStatus::UndefinedInput);
        }
        CHECK(eval_library("successor", std::vector<Nat>{1, 2}, kFuel).status ==
              FnStatus::UndefinedInput);
    }

    TEST_CASE("large arguments")
    {
        const Nat big = (Nat(1) << 40) + 77;
        CHECK(eval_library("successor", std::vector<Nat>{big}, kFuel).value == big + 1);
        CHECK(eval_library("length", std::vector<Nat>{big}, kFuel).value == 40);
        const Nat z = nat_of_str(pair(str_of_nat(big), str_of_nat(big)));
        CHECK(eval_library("eq_pred", std::vector<Nat>{z}, kFuel).value == 1);
        CHECK(eval_library("left_g", std::vector<Nat>{z}, kFuel).value == big);
        CHECK(eval_library("right_h", std::vector<Nat>{z}, kFuel).value == big);
    }

    TEST_CASE("divergence is reported, not an error")
    {
        const Machine runner = parse_machine("q1 0 R q1\nq1 1 R q1\nq1 B R q1\n");
        const FnResult r = eval_fn(runner, std::vector<Nat>{4}, 100);
        CHECK(r.status == FnStatus::Diverged);
        CHECK(r.steps == 100);
    }
}
