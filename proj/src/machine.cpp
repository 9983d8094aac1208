// turing: a Turing machine toolkit
// Copyright 2026 The turing Authors.
// SPDX-License-Identifier: Apache-2.0

#include "turing/machine.hpp"

#include "turing/error.hpp"

#include <string>
#include <unordered_map>

namespace turing
{
Machine Machine::build(std::vector<Rule> rules, std::vector<std::string> names)
{
    if (rules.empty())
        throw Error(ErrorKind::EmptyMachine, "machine has no rules");

    Machine m;
    m.table_.assign(names.size() * kSymbolCount, -1);
    for (std::size_t i = 0; i < rules.size(); ++i)
    {
        const Rule& r = rules[i];
        auto& slot = m.table_[r.from * kSymbolCount + static_cast<std::size_t>(r.scan)];
        if (slot >= 0)
            throw Error(ErrorKind::Determinism,
                        "rules " + std::to_string(slot + 1) + " and " + std::to_string(i + 1) +
                            " share (" + names[r.from] + ", " + to_char(r.scan) + ")");
        slot = static_cast<std::int32_t>(i);
    }
    m.rules_ = std::move(rules);
    m.names_ = std::move(names);
    return m;
}

Machine Machine::from_named(std::span<const NamedRule> named)
{
    std::unordered_map<std::string, StateId> ids;
    std::vector<std::string> names;
    auto id_of = [&](const std::string& name) {
        auto [it, inserted] = ids.emplace(name, static_cast<StateId>(names.size()));
        if (inserted)
            names.push_back(name);
        return it->second;
    };

    std::vector<Rule> rules;
    rules.reserve(named.size());
    for (const auto& r : named)
    {
        const StateId p = id_of(r.from);
        const StateId q = id_of(r.to);
        rules.push_back({p, r.scan, r.action, q});
    }
    return build(std::move(rules), std::move(names));
}

Machine Machine::from_rules(std::span<const Rule> input)
{
    std::unordered_map<StateId, StateId> ids;
    auto id_of = [&](StateId raw) {
        return ids.emplace(raw, static_cast<StateId>(ids.size())).first->second;
    };

    std::vector<Rule> rules;
    rules.reserve(input.size());
    for (const auto& r : input)
    {
        const StateId p = id_of(r.from);
        const StateId q = id_of(r.to);
        rules.push_back({p, r.scan, r.action, q});
    }
    std::vector<std::string> names(ids.size());
    for (std::size_t i = 0; i < names.size(); ++i)
        names[i] = "q" + std::to_string(i + 1);
    return build(std::move(rules), std::move(names));
}

Machine Machine::canonical() const
{
    Machine m = *this;
    for (std::size_t i = 0; i < m.names_.size(); ++i)
        m.names_[i] = "q" + std::to_string(i + 1);
    return m;
}

MachineBuilder& MachineBuilder::rule(std::string_view from, char scan, char action,
                                     std::string_view to)
{
    const auto s = symbol_from_char(scan);
    const auto a = action_from_char(action);
    if (!s || !a)
        throw Error(ErrorKind::InvalidArgument,
                    std::string("bad rule symbol/action: ") + scan + " " + action);
    rules_.push_back({std::string(from), *s, *a, std::string(to)});
    return *this;
}

MachineBuilder& MachineBuilder::rules(std::string_view from, std::string_view scans, char action,
                                      std::string_view to)
{
    for (char s : scans)
        rule(from, s, action, to);
    return *this;
}

}  // namespace turing
