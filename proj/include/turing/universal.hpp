// turing: a Turing machine toolkit
// Copyright 2026 The turing Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "turing/bits.hpp"
#include "turing/run.hpp"

#include <cstdint>
#include <optional>

namespace turing
{
/// Evaluates a stream of the form E(T) p as T run on p.
///
/// The result is identical to run(T, p, fuel) field for field, including the
/// step count. Streams without a valid E(T) prefix raise Error(Undefined);
/// fuel exhaustion is an outcome, not an error. When `machine_out` is given it
/// receives the decoded T (useful for rendering traces).
Outcome universal_run(BitView raw, std::uint64_t fuel, const StepObserver& observer = {},
                      std::optional<Machine>* machine_out = nullptr);

}  // namespace turing
