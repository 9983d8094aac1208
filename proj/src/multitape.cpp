// turing: a Turing machine toolkit
// Copyright 2026 The turing Authors.
// SPDX-License-Identifier: Apache-2.0

#include "turing/multitape.hpp"

#include "turing/error.hpp"
#include "turing/funclib.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace turing
{
namespace
{
std::size_t pow3(std::size_t k)
{
    std::size_t p = 1;
    while (k-- > 0)
        p *= kSymbolCount;
    return p;
}

}  // namespace

std::size_t NDMachine::slot(StateId state, std::span<const Symbol> scanned) const noexcept
{
    std::size_t idx = 0;
    for (Symbol s : scanned)
        idx = idx * kSymbolCount + static_cast<std::size_t>(s);
    return static_cast<std::size_t>(state) * pow3(tapes_) + idx;
}

NDMachine NDMachine::from_document(const MachineDocument& doc)
{
    if (doc.tapes < 1 || doc.tapes > kMaxTapes)
        throw Error(ErrorKind::InvalidMachine,
                    "tape count must be between 1 and " + std::to_string(kMaxTapes));
    if (doc.readonly_input && doc.tapes == 1)
        throw Error(ErrorKind::InvalidMachine, "a read-only input tape needs at least one work tape");
    if (doc.rules.empty())
        throw Error(ErrorKind::EmptyMachine, "machine has no rules");

    NDMachine m;
    m.tapes_ = doc.tapes;
    m.readonly_ = doc.readonly_input;

    std::unordered_map<std::string, StateId> ids;
    auto id_of = [&](const std::string& name) {
        auto [it, inserted] = ids.emplace(name, static_cast<StateId>(m.names_.size()));
        if (inserted)
            m.names_.push_back(name);
        return it->second;
    };

    for (const RuleLine& line : doc.rules)
    {
        if (line.scan.size() != m.tapes_ || line.actions.size() != m.tapes_)
            throw Error(ErrorKind::InvalidMachine,
                        "line " + std::to_string(line.line) + ": expected " +
                            std::to_string(m.tapes_) + " symbols and actions");
        if (m.readonly_ && !is_move(line.actions[0]))
            throw Error(ErrorKind::InvalidMachine,
                        "line " + std::to_string(line.line) +
                            ": the read-only input tape only allows L or R");
        const StateId p = id_of(line.from);
        const StateId q = id_of(line.to);
        m.rules_.push_back({p, line.scan, line.actions, q});
    }

    m.table_.assign(m.names_.size() * pow3(m.tapes_), {});
    for (std::size_t i = 0; i < m.rules_.size(); ++i)
        m.table_[m.slot(m.rules_[i].from, m.rules_[i].scan)].push_back(static_cast<std::uint32_t>(i));
    return m;
}

NDMachine NDMachine::from_machine(const Machine& machine)
{
    MachineDocument doc;
    for (const Rule& r : machine.rules())
        doc.rules.push_back(
            {machine.state_name(r.from), {r.scan}, {r.action}, machine.state_name(r.to), 0});
    return from_document(doc);
}

std::span<const std::uint32_t> NDMachine::matching(StateId state,
                                                   std::span<const Symbol> scanned) const
{
    return table_[slot(state, scanned)];
}

bool NDMachine::deterministic() const noexcept
{
    return std::all_of(table_.begin(), table_.end(),
                       [](const auto& entry) { return entry.size() <= 1; });
}

MachineDocument NDMachine::to_document() const
{
    MachineDocument doc;
    doc.tapes = tapes_;
    doc.readonly_input = readonly_;
    for (std::size_t i = 0; i < rules_.size(); ++i)
    {
        const MultiRule& r = rules_[i];
        doc.rules.push_back({names_[r.from], r.scan, r.actions, names_[r.to], i + 1});
    }
    return doc;
}

MultiMachine::MultiMachine(NDMachine m)
  : m_(std::move(m))
{
    for (std::size_t i = 0; i < m_.rules().size(); ++i)
    {
        const MultiRule& r = m_.rules()[i];
        const auto idx = m_.matching(r.from, r.scan);
        if (idx.size() > 1)
            throw Error(ErrorKind::Determinism,
                        "rules " + std::to_string(idx[0] + 1) + " and " +
                            std::to_string(idx[1] + 1) + " share state " +
                            m_.state_name(r.from) + " and scanned symbols");
    }
}

// ---------------------------------------------------------------------------

std::vector<Symbol> MTConfiguration::scanned() const
{
    std::vector<Symbol> out(tapes.size());
    for (std::size_t t = 0; t < tapes.size(); ++t)
        out[t] = tapes[t].read(heads[t]);
    return out;
}

std::size_t MTConfiguration::hash() const noexcept
{
    std::size_t h = std::hash<StateId>{}(state);
    auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    for (Cell c : heads)
        mix(std::hash<Cell>{}(c));
    for (const Tape& t : tapes)
        mix(t.hash());
    return h;
}

MTConfiguration initial_configuration(const NDMachine& m, BitView input)
{
    MTConfiguration c;
    c.state = m.start();
    c.heads.assign(m.tapes(), 0);
    c.tapes.assign(m.tapes(), Tape{});
    c.tapes[0] = Tape::from_bits(input);
    return c;
}

namespace
{
void apply_rule(const MultiRule& r, MTConfiguration& c)
{
    for (std::size_t t = 0; t < c.tapes.size(); ++t)
        apply_action(c.tapes[t], c.heads[t], r.actions[t]);
    c.state = r.to;
}

}  // namespace

std::vector<MTConfiguration> successors(const NDMachine& m, const MTConfiguration& c)
{
    std::vector<MTConfiguration> out;
    const auto scanned = c.scanned();
    for (std::uint32_t idx : m.matching(c.state, scanned))
    {
        MTConfiguration next = c;
        apply_rule(m.rules()[idx], next);
        out.push_back(std::move(next));
    }
    return out;
}

Nat output_value(const NDMachine& m, const MTConfiguration& c)
{
    const std::size_t t = m.output_tape();
    return read_output(c.tapes[t], c.heads[t]);
}

bool is_accepting_halt(const NDMachine& m, const MTConfiguration& c)
{
    return m.matching(c.state, c.scanned()).empty() && output_value(m, c) == 1;
}

MTOutcome mt_run(const MultiMachine& m, BitView input, std::uint64_t fuel)
{
    const NDMachine& nd = m.nd();
    MTOutcome out;
    out.config = initial_configuration(nd, input);
    std::vector<Cell> lo(nd.tapes(), 0), hi(nd.tapes(), 0);
    std::vector<Symbol> scanned(nd.tapes());

    while (true)
    {
        for (std::size_t t = 0; t < nd.tapes(); ++t)
            scanned[t] = out.config.tapes[t].read(out.config.heads[t]);
        const MultiRule* r = m.find(out.config.state, scanned);
        if (!r)
        {
            out.kind = OutcomeKind::Halted;
            break;
        }
        if (out.steps == fuel)
        {
            out.kind = OutcomeKind::FuelExhausted;
            break;
        }
        apply_rule(*r, out.config);
        ++out.steps;
        for (std::size_t t = 0; t < nd.tapes(); ++t)
        {
            lo[t] = std::min(lo[t], out.config.heads[t]);
            hi[t] = std::max(hi[t], out.config.heads[t]);
        }
    }

    out.metrics.steps = out.steps;
    for (std::size_t t = 0; t < nd.tapes(); ++t)
        if (nd.counts_space(t))
            out.metrics.work_cells += static_cast<std::uint64_t>(hi[t] - lo[t] + 1);
    return out;
}

const char* to_string(Verdict v) noexcept
{
    switch (v)
    {
    case Verdict::Accept:
        return "ACCEPT";
    case Verdict::Reject:
        return "REJECT";
    case Verdict::FuelExhausted:
        return "FUEL-EXHAUSTED";
    }
    return "?";
}

Verdict accepts(const MultiMachine& m, BitView w, std::uint64_t fuel)
{
    const MTOutcome out = mt_run(m, w, fuel);
    if (!out.halted())
        return Verdict::FuelExhausted;
    return output_value(m.nd(), out.config) == 1 ? Verdict::Accept : Verdict::Reject;
}

Verdict nd_accepts(const NDMachine& m, BitView w, std::uint64_t fuel, NDLimits limits)
{
    using Level = std::unordered_set<MTConfiguration, MTConfigurationHash>;
    Level level{initial_configuration(m, w)};
    bool undecided = false;

    for (std::uint64_t depth = 0;; ++depth)
    {
        Level next;
        for (const MTConfiguration& c : level)
        {
            auto succ = successors(m, c);
            if (succ.empty())
            {
                if (output_value(m, c) == 1)
                    return Verdict::Accept;
                continue;
            }
            if (depth == fuel)
            {
                undecided = true;
                continue;
            }
            for (auto& s : succ)
                next.insert(std::move(s));
            if (next.size() > limits.max_frontier)
                throw Error(ErrorKind::BudgetExceeded,
                            "nondeterministic frontier exceeds " +
                                std::to_string(limits.max_frontier) + " configurations");
        }
        if (next.empty())
            return undecided ? Verdict::FuelExhausted : Verdict::Reject;
        level = std::move(next);
    }
}

std::vector<MeterRow> meter(const MultiMachine& m, std::span<const BitString> inputs,
                            std::uint64_t fuel)
{
    std::map<std::size_t, MeterRow> rows;
    for (const BitString& w : inputs)
    {
        const MTOutcome out = mt_run(m, w, fuel);
        MeterRow& row = rows[w.size()];
        row.n = w.size();
        row.max_steps = std::max(row.max_steps, out.metrics.steps);
        row.max_work_cells = std::max(row.max_work_cells, out.metrics.work_cells);
        ++row.inputs;
        row.all_halted = row.all_halted && out.halted();
    }
    std::vector<MeterRow> table;
    for (auto& [n, row] : rows)
        table.push_back(row);
    return table;
}

// ---------------------------------------------------------------------------
// Fixtures

namespace
{
// Copies the input to tape 1, rewinds tape 0, then compares tape 0 forwards
// with tape 1 backwards, erasing tape 1 as it goes.
constexpr std::string_view kPalindrome = R"(tapes: 2
cp   0 B  0 0  cp2
cp   1 B  1 1  cp2
cp2  0 0  R R  cp
cp2  1 1  R R  cp
cp   B B  L L  rw
rw   0 0  L 0  rw
rw   0 1  L 1  rw
rw   1 0  L 0  rw
rw   1 1  L 1  rw
rw   B 0  R 0  cmp
rw   B 1  R 1  cmp
rw   B B  R B  cmp
cmp  0 0  0 B  cmpm
cmp  1 1  1 B  cmpm
cmp  0 1  0 B  rej
cmp  1 0  1 B  rej
cmpm 0 B  R L  cmp
cmpm 1 B  R L  cmp
cmp  B B  B 0  acc
)";

constexpr std::string_view kWrite1Halt = R"(w 0 1 h
w 1 1 h
w B 1 h
)";

constexpr std::string_view kReadonlyScan = R"(tapes: 2
readonly-input: yes
sc 0 B  R B  sc
sc 1 B  R B  sc
sc B B  L 0  done
)";

// Guesses a bit on tape 1 and accepts when it equals the first input bit.
constexpr std::string_view kGuessBit = R"(tapes: 2
g   0 B  0 0  cmp
g   0 B  0 1  cmp
g   1 B  1 0  cmp
g   1 B  1 1  cmp
g   B B  B B  rej
cmp 0 0  0 0  acc
cmp 1 1  1 0  acc
cmp 0 1  0 B  rej
cmp 1 0  1 B  rej
)";

// Accepts with cells 0..2 in use: 1 at cell 0, the answer 0 at cell 2.
constexpr std::string_view kSpreadAccept = R"(a 0 1 b
a 1 1 b
a B 1 b
b 1 R c
c 0 B c
c 1 B c
c B R d
d 0 0 acc
d 1 0 acc
d B 0 acc
)";

constexpr std::string_view kLooperNd = R"(l 0 R l
l 0 L l
l 1 R l
l 1 L l
l B R l
l B L l
)";

}  // namespace

const std::vector<std::string>& complexity_fixture_names()
{
    static const std::vector<std::string> names = {
        "palindrome", "write1_halt", "readonly_scan", "guess_bit", "spread_accept", "looper_nd",
    };
    return names;
}

NDMachine complexity_fixture(std::string_view name)
{
    static const std::map<std::string_view, std::string_view, std::less<>> sources = {
        {"palindrome", kPalindrome},       {"write1_halt", kWrite1Halt},
        {"readonly_scan", kReadonlyScan},  {"guess_bit", kGuessBit},
        {"spread_accept", kSpreadAccept},  {"looper_nd", kLooperNd},
    };
    auto it = sources.find(name);
    if (it == sources.end())
        throw Error(ErrorKind::UnknownName, "no complexity fixture named '" + std::string(name) + "'");
    return NDMachine::from_document(parse_document(it->second));
}

}  // namespace turing
