// turing: a Turing machine toolkit
// Copyright 2026 The turing Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "turing/bits.hpp"
#include "turing/multitape.hpp"

#include <cstddef>
#include <cstdint>

namespace turing
{
/// Space-bounded configurations.
///
/// The footprint of a counted tape is the hull of cell 0, the head and every
/// non-blank cell. A configuration is admissible under bound b when the
/// footprints of all counted tapes sum to at most b and, for a read-only input
/// tape, the input head stays within [-1, n].

std::size_t space_footprint(const NDMachine& m, const MTConfiguration& c);

bool within_space(const NDMachine& m, const MTConfiguration& c, std::size_t input_len,
                  std::size_t space_bound);

/// Upper bound C on the number of admissible configurations (saturates at
/// UINT64_MAX):  |Q| * (n + 2 if read-only input) * P(b), where P(b) sums,
/// over footprints m_t >= 1 of the counted tapes with sum m_t <= b, the
/// product of m_t * m_t * 3^m_t (window placements around cell 0, head
/// positions, contents).
std::uint64_t configuration_bound(const NDMachine& m, std::size_t input_len,
                                  std::size_t space_bound);

struct SavitchLimits
{
    std::uint64_t max_configs = std::uint64_t{1} << 32;
};

struct SavitchStats
{
    std::uint64_t config_bound = 0;  ///< C
    unsigned depth_bound = 0;        ///< ceil(log2 C) + 1
    unsigned max_depth = 0;          ///< deepest reach() frame observed
    std::size_t rows = 0;            ///< memoized (config, level) rows built
    std::size_t configs = 0;         ///< distinct configurations touched
};

/// Decides whether an accepting halted configuration is reachable from the
/// start configuration through admissible configurations, using the
/// middle-first recurrence
///
///     reach(a, b, 2^j) <=> exists c: reach(a, c, 2^(j-1)) and reach(c, b, 2^(j-1))
///
/// starting from j = ceil(log2 C). Throws Error(InvalidArgument) for
/// space_bound == 0 and Error(BudgetExceeded) when C > limits.max_configs.
bool savitch_accepts(const NDMachine& m, BitView w, std::size_t space_bound,
                     SavitchLimits limits = {}, SavitchStats* stats = nullptr);

}  // namespace turing
