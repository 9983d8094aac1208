// turing: a Turing machine toolkit
// Copyright 2026 The turing Authors.
// SPDX-License-Identifier: Apache-2.0

#include "turing/universal.hpp"

#include "turing/codec.hpp"
#include "turing/error.hpp"

namespace turing
{
Outcome universal_run(BitView raw, std::uint64_t fuel, const StepObserver& observer,
                      std::optional<Machine>* machine_out)
{
    std::vector<Rule> rules;
    std::size_t consumed = 0;
    const CodeDefect d = scan_machine_code(raw, consumed, &rules);
    if (d != CodeDefect::None)
        throw Error(ErrorKind::Undefined,
                    std::string("input is not of the form E(T)p: ") + describe(d));

    const Machine m = Machine::from_rules(rules);
    Outcome out = run(m, raw.substr(consumed), fuel, observer);
    if (machine_out)
        machine_out->emplace(m);
    return out;
}

}  // namespace turing
