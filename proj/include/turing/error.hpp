// turing: a Turing machine toolkit
// Copyright 2026 The turing Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace turing
{
enum class ErrorKind
{
    Syntax,
    Determinism,
    EmptyMachine,
    InvalidMachine,
    MalformedCode,
    BudgetExceeded,
    Undefined,
    UnknownName,
    InvalidArgument,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind)
    {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Raised by the machine-description parser; line and column are 1-based.
class SyntaxError : public Error
{
public:
    SyntaxError(std::size_t line, std::size_t column, const std::string& message);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace turing
