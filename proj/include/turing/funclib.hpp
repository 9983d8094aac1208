// turing: a Turing machine toolkit
// Copyright 2026 The turing Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "turing/bits.hpp"
#include "turing/machine.hpp"
#include "turing/tape.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace turing
{
/// Machines as partial functions over naturals.
///
/// Arguments enter the tape as bar(str_of_nat(x1)) ... bar(str_of_nat(xn));
/// the value is the natural named by the maximal non-blank block under the
/// head at halt, or 0 when the head scans a blank.

enum class FnStatus
{
    Value,
    Diverged,        ///< fuel ran out
    UndefinedInput,  ///< argument rejected by a library wrapper
};

struct FnResult
{
    FnStatus status = FnStatus::Value;
    Nat value;
    std::uint64_t steps = 0;

    static FnResult of(Nat v, std::uint64_t steps = 0) { return {FnStatus::Value, std::move(v), steps}; }
    static FnResult diverged(std::uint64_t steps) { return {FnStatus::Diverged, 0, steps}; }
    static FnResult undefined() { return {FnStatus::UndefinedInput, 0, 0}; }
};

/// Throws Error(InvalidArgument) for an empty argument list.
BitString encode_args(std::span<const Nat> args);

Nat read_output(const Tape& tape, Cell head);
Nat read_output(const Configuration& final_config);

FnResult eval_fn(const Machine& m, std::span<const Nat> args, std::uint64_t fuel);

/// Names accepted by library(): successor, zero_1..zero_3, proj_m_n
/// (1 <= m <= n <= 3), length, bar_fn, left_g, right_h, eq_pred.
const std::vector<std::string>& library_names();

/// Throws Error(UnknownName).
Machine library(std::string_view name);

/// Number of arguments the named function takes.
std::size_t library_arity(std::string_view name);

/// Whether the wrapper accepts `args`: arity matches and, for left_g, right_h
/// and eq_pred, str_of_nat(args[0]) starts with a well-formed bar(x).
bool library_accepts(std::string_view name, std::span<const Nat> args);

/// eval_fn behind the library wrapper: UndefinedInput when
/// library_accepts() is false.
FnResult eval_library(std::string_view name, std::span<const Nat> args, std::uint64_t fuel);

}  // namespace turing
