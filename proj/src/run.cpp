// turing: a Turing machine toolkit
// Copyright 2026 The turing Authors.
// SPDX-License-Identifier: Apache-2.0

#include "turing/run.hpp"

namespace turing
{
Configuration initial_configuration(const Machine& m, BitView input)
{
    return Configuration{m.start(), 0, Tape::from_bits(input)};
}

bool advance(const Machine& m, Configuration& c)
{
    const Rule* r = m.find(c.state, c.scanned());
    if (r == nullptr)
        return false;
    apply_action(c.tape, c.head, r->action);
    c.state = r->to;
    return true;
}

std::optional<Configuration> step(const Machine& m, const Configuration& c)
{
    Configuration next = c;
    if (!advance(m, next))
        return std::nullopt;
    return next;
}

Outcome run_from(const Machine& m, Configuration start, std::uint64_t fuel,
                 const StepObserver& observer)
{
    Outcome out{OutcomeKind::FuelExhausted, std::move(start), 0};
    Configuration& c = out.config;
    while (true)
    {
        const Rule* r = m.find(c.state, c.scanned());
        if (r == nullptr)
        {
            out.kind = OutcomeKind::Halted;
            return out;
        }
        if (out.steps == fuel)
            return out;
        if (observer)
            observer(out.steps + 1, c);
        apply_action(c.tape, c.head, r->action);
        c.state = r->to;
        ++out.steps;
    }
}

Outcome run(const Machine& m, BitView input, std::uint64_t fuel, const StepObserver& observer)
{
    return run_from(m, initial_configuration(m, input), fuel, observer);
}

std::string trace_line(const Machine& m, std::uint64_t step, const Configuration& c)
{
    std::string line = "step=" + std::to_string(step) + " state=" + m.state_name(c.state) +
                       " head=" + std::to_string(c.head) + " scan=";
    line.push_back(to_char(c.scanned()));
    return line;
}

}  // namespace turing
