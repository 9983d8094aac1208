// turing: a Turing machine toolkit
// Copyright 2026 The turing Authors.
// SPDX-License-Identifier: Apache-2.0

#include "support/oracles.hpp"

#include "turing/codec.hpp"
#include "turing/enumeration.hpp"
#include "turing/error.hpp"
#include "turing/text_format.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace turing;

TEST_SUITE("codec")
{
    TEST_CASE("string and natural identification")
    {
        CHECK(str_of_nat(0).str() == "");
        CHECK(str_of_nat(1).str() == "0");
        CHECK(str_of_nat(2).str() == "1");
        CHECK(str_of_nat(3).str() == "00");
        CHECK(str_of_nat(6).str() == "11");
        CHECK(str_of_nat(7).str() == "000");
        for (std::uint64_t n = 0; n < 5000; ++n)
        {
            CHECK(str_of_nat(n).str() == oracle::str_of(n));
            CHECK(nat_of_str(oracle::str_of(n)) == n);
        }
        CHECK(numeral_length(0) == 0);
        CHECK(numeral_length(6) == 2);
        CHECK(numeral_length(7) == 3);
    }

    TEST_CASE("big naturals round trip")
    {
        const Nat big = (Nat(1) << 200) + 12345;
        const BitString s = str_of_nat(big);
        CHECK(s.size() == 200);
        CHECK(nat_of_str(s) == big);
    }

    TEST_CASE("bit strings reject other characters")
    {
        CHECK(is_bit_text("0101"));
        CHECK(is_bit_text(""));
        CHECK_FALSE(is_bit_text("01B"));
        CHECK_THROWS_AS(BitString("012"), Error);
    }

    TEST_CASE("self-delimiting code")
    {
        CHECK(bar(BitString("")).str() == "0");
        CHECK(bar(BitString("01")).str() == "11001");
        const auto u = unbar(BitString("110011"));
        CHECK(u.value.str() == "01");
        CHECK(u.rest.str() == "1");

        for (const char* bad : {"", "1", "111"})
        {
            try
            {
                unbar(BitString(bad));
                FAIL("accepted " << bad);
            }
            catch (const Error& e)
            {
                CHECK(e.kind() == ErrorKind::MalformedCode);
                CHECK(std::string(e.what()).find("terminating 0") != std::string::npos);
            }
        }
        try
        {
            unbar(BitString("11101"));
            FAIL("accepted a truncated code");
        }
        catch (const Error& e)
        {
            CHECK(std::string(e.what()).find("truncated") != std::string::npos);
        }
    }

    TEST_CASE("prefix-freeness of barred strings up to length 8")
    {
        std::vector<std::string> codes;
        for (std::uint64_t n = 0; n < (1u << 9) - 1; ++n)
            codes.push_back(bar(str_of_nat(n)).str());
        for (const auto& a : codes)
            for (const auto& b : codes)
                if (&a != &b)
                    CHECK_FALSE(b.compare(0, a.size(), a) == 0);
    }

    TEST_CASE("pairs and tuples")
    {
        const BitString x("10"), y("0111");
        CHECK(pair(x, y).str() == "11010" "0111");
        const std::vector<BitString> xs = {BitString("1"), BitString(""), BitString("001")};
        CHECK(tuple_encode(xs, TupleScheme::Nested).str() == "101" "0" "001");
        CHECK(tuple_encode(xs, TupleScheme::Flat).str() == "101" "0" "1110001");
        CHECK(tuple_decode(tuple_encode(xs, TupleScheme::Nested), 3, TupleScheme::Nested) == xs);
        CHECK(tuple_decode(tuple_encode(xs, TupleScheme::Flat), 3, TupleScheme::Flat) == xs);
        CHECK(tuple_encode(std::vector<BitString>{BitString("11")}, TupleScheme::Nested).str() ==
              "11");
        CHECK_THROWS_AS(tuple_encode(std::vector<BitString>{}, TupleScheme::Nested), Error);
        CHECK_THROWS_AS(tuple_decode(BitString("1011"), 1, TupleScheme::Flat), Error);
        CHECK_THROWS_AS(tuple_decode(BitString("1"), 2, TupleScheme::Nested), Error);
    }

    TEST_CASE("one-rule machine code is 20 bits")
    {
        const Machine m = parse_machine("q1 0 R q1");
        CHECK(encode_machine(m).str() == "11000" "100" "101000100101");
        CHECK(layout_of(m).symbol_bits == 3);
        CHECK(layout_of(m).code_length() == 20);
    }

    TEST_CASE("symbol width is minimal")
    {
        CHECK(symbol_bits_for(1) == 3);
        CHECK(symbol_bits_for(3) == 3);
        CHECK(symbol_bits_for(4) == 4);
        CHECK(symbol_bits_for(11) == 4);
        CHECK(symbol_bits_for(12) == 5);
    }

    TEST_CASE("encode/decode round trip and length law")
    {
        std::mt19937_64 rng(11);
        for (int i = 0; i < 500; ++i)
        {
            const Machine m = oracle::random_machine(rng, 8, 24);
            const BitString code = encode_machine(m);
            CHECK(oracle::valid_code(code.str()));
            const auto layout = layout_of(m);
            CHECK(code.size() == oracle::code_length_law(layout.symbol_bits, layout.rule_count));
            const DecodedMachine d = decode_machine(code + BitString("0110"));
            CHECK(d.machine == m);
            CHECK(d.rest.str() == "0110");
            CHECK(serialize(d.machine) == serialize(m.canonical()));
        }
    }

    TEST_CASE("decode reports malformed and invalid codes")
    {
        auto kind = [](const char* bits) {
            try
            {
                decode_machine(BitString(bits));
            }
            catch (const Error& e)
            {
                return e.kind();
            }
            return ErrorKind::Syntax;
        };
        CHECK(kind("1111") == ErrorKind::MalformedCode);
        CHECK(kind("11000" "100" "1010") == ErrorKind::MalformedCode);
        // Scanned-symbol field 3.
        CHECK(kind("11000" "100" "101011100101") == ErrorKind::InvalidMachine);
        // Start state coded 6.
        CHECK(kind("11000" "100" "110000100101") == ErrorKind::InvalidMachine);
        // Width 4 for a single state is not minimal.
        CHECK(kind("11001" "100" "0101000001000101") == ErrorKind::InvalidMachine);
    }

    TEST_CASE("scan diagnoses each defect")
    {
        std::size_t used = 0;
        CHECK(scan_machine_code(BitString("111"), used) == CodeDefect::MalformedWidth);
        CHECK(scan_machine_code(BitString("11000" "111"), used) == CodeDefect::MalformedCount);
        CHECK(scan_machine_code(BitString("0" "100"), used) == CodeDefect::ZeroWidth);
        CHECK(scan_machine_code(BitString("11000" "0"), used) == CodeDefect::ZeroRules);
        CHECK(scan_machine_code(BitString("11000" "100" "10100010010"), used) ==
              CodeDefect::TruncatedBody);
        CHECK(scan_machine_code(BitString("11000" "100" "101000101101"), used) ==
              CodeDefect::ActionField);
        CHECK(scan_machine_code(BitString("11000" "100" "101000100100"), used) ==
              CodeDefect::StateField);
        CHECK(scan_machine_code(BitString("11000" "100" "101000100111"), used) ==
              CodeDefect::NonContiguousState);
        CHECK(scan_machine_code(BitString("11000" "101" "101000100101" "101000000101"), used) ==
              CodeDefect::DuplicatePair);
        CHECK(scan_machine_code(BitString("11000" "100" "101000100101" "11"), used) ==
              CodeDefect::None);
        CHECK(used == 20);
        for (auto d : {CodeDefect::None, CodeDefect::DuplicatePair, CodeDefect::NonMinimalWidth})
            CHECK(std::string(describe(d)).size() > 0);
    }

    TEST_CASE("validity agrees with an independent parser")
    {
        std::mt19937_64 rng(3);
        // Every string up to 16 bits.
        for (unsigned len = 0; len <= 16; ++len)
            for (std::uint32_t v = 0; v < (1u << len); ++v)
            {
                std::string s;
                for (unsigned b = len; b-- > 0;)
                    s.push_back((v >> b) & 1 ? '1' : '0');
                CHECK(is_valid_code(s) == oracle::valid_code(s));
            }
        // Mutated valid codes of longer machines.
        std::uniform_int_distribution<int> coin(0, 3);
        for (int i = 0; i < 3000; ++i)
        {
            std::string s = encode_machine(oracle::random_machine(rng, 6, 10)).str();
            std::uniform_int_distribution<std::size_t> at(0, s.size() - 1);
            switch (coin(rng))
            {
            case 0:
                s[at(rng)] ^= 1;
                break;
            case 1:
                s.erase(at(rng), 1);
                break;
            case 2:
                s.push_back('0');
                break;
            default:
                break;
            }
            CHECK(is_valid_code(s) == oracle::valid_code(s));
        }
    }
}
