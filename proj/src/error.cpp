// turing: a Turing machine toolkit
// Copyright 2026 The turing Authors.
// SPDX-License-Identifier: Apache-2.0

#include "turing/error.hpp"

namespace turing
{
const char* to_string(ErrorKind kind) noexcept
{
    switch (kind)
    {
    case ErrorKind::Syntax:
        return "syntax error";
    case ErrorKind::Determinism:
        return "determinism violation";
    case ErrorKind::EmptyMachine:
        return "empty machine";
    case ErrorKind::InvalidMachine:
        return "invalid machine";
    case ErrorKind::MalformedCode:
        return "malformed code";
    case ErrorKind::BudgetExceeded:
        return "budget exceeded";
    case ErrorKind::Undefined:
        return "undefined";
    case ErrorKind::UnknownName:
        return "unknown name";
    case ErrorKind::InvalidArgument:
        return "invalid argument";
    }
    return "error";
}

SyntaxError::SyntaxError(std::size_t line, std::size_t column, const std::string& message)
  : Error(ErrorKind::Syntax,
          "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
    line_(line),
    column_(column)
{}

}  // namespace turing
