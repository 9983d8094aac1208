// turing: a Turing machine toolkit
// Copyright 2026 The turing Authors.
// SPDX-License-Identifier: Apache-2.0

#include "turing/savitch.hpp"

#include "turing/error.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace turing
{
std::size_t space_footprint(const NDMachine& m, const MTConfiguration& c)
{
    std::size_t total = 0;
    for (std::size_t t = 0; t < m.tapes(); ++t)
    {
        if (!m.counts_space(t))
            continue;
        Cell lo = std::min<Cell>(0, c.heads[t]);
        Cell hi = std::max<Cell>(0, c.heads[t]);
        if (!c.tapes[t].blank())
        {
            lo = std::min(lo, c.tapes[t].lo());
            hi = std::max(hi, c.tapes[t].hi());
        }
        total += static_cast<std::size_t>(hi - lo + 1);
    }
    return total;
}

bool within_space(const NDMachine& m, const MTConfiguration& c, std::size_t input_len,
                  std::size_t space_bound)
{
    if (m.readonly_input() &&
        (c.heads[0] < -1 || c.heads[0] > static_cast<Cell>(input_len)))
        return false;
    return space_footprint(m, c) <= space_bound;
}

namespace
{
__extension__ using Wide = unsigned __int128;

std::uint64_t saturate(Wide v)
{
    return v > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(v);
}

Wide mul_sat(Wide a, Wide b)
{
    if (a != 0 && b > Wide(UINT64_MAX) * 2 / a)
        return Wide(UINT64_MAX) * 2;
    return a * b;
}

}  // namespace

std::uint64_t configuration_bound(const NDMachine& m, std::size_t input_len,
                                  std::size_t space_bound)
{
    const Wide cap = Wide(UINT64_MAX) * 2;
    std::vector<Wide> weight(space_bound + 1, 0);
    Wide pow = 1;
    for (std::size_t w = 1; w <= space_bound; ++w)
    {
        pow = std::min(cap, mul_sat(pow, 3));
        weight[w] = mul_sat(mul_sat(Wide(w), Wide(w)), pow);
    }

    // ways[u]: weighted count of footprint assignments using u cells so far.
    std::vector<Wide> ways(space_bound + 1, 0);
    ways[0] = 1;
    for (std::size_t t = 0; t < m.tapes(); ++t)
    {
        if (!m.counts_space(t))
            continue;
        std::vector<Wide> next(space_bound + 1, 0);
        for (std::size_t u = 0; u <= space_bound; ++u)
            for (std::size_t w = 1; u + w <= space_bound && ways[u] != 0; ++w)
                next[u + w] = std::min(cap, next[u + w] + mul_sat(ways[u], weight[w]));
        ways = std::move(next);
    }
    Wide total = 0;
    for (Wide w : ways)
        total = std::min(cap, total + w);

    total = mul_sat(total, Wide(m.state_count()));
    if (m.readonly_input())
        total = mul_sat(total, Wide(input_len + 2));
    return saturate(total);
}

namespace
{
// Memoized reach rows: row(a, j) is the set of admissible configurations
// reachable from a in at most 2^j steps. Level j is built from level j - 1
// by the midpoint recurrence; once a row stops growing it is final.
class Reach
{
public:
    Reach(const NDMachine& m, std::size_t n, std::size_t bound)
      : m_(m),
        n_(n),
        bound_(bound)
    {}

    std::uint32_t intern(const MTConfiguration& c)
    {
        auto [it, inserted] = ids_.emplace(c, static_cast<std::uint32_t>(configs_.size()));
        if (inserted)
        {
            configs_.push_back(c);
            rows_.emplace_back();
            stable_.push_back(false);
        }
        return it->second;
    }

    std::vector<std::uint32_t> row(std::uint32_t a, unsigned j)
    {
        ++depth_;
        max_depth_ = std::max(max_depth_, depth_);
        auto result = build(a, j);
        --depth_;
        return result;
    }

    const MTConfiguration& config(std::uint32_t id) const { return configs_[id]; }
    unsigned max_depth() const noexcept { return max_depth_; }
    std::size_t configs() const noexcept { return configs_.size(); }
    std::size_t rows() const noexcept { return row_count_; }

private:
    std::vector<std::uint32_t> build(std::uint32_t a, unsigned j)
    {
        if (stable_[a] && !rows_[a].empty())
            return rows_[a].back();
        if (j < rows_[a].size())
            return rows_[a][j];

        std::vector<std::uint32_t> out;
        if (j == 0)
        {
            out.push_back(a);
            for (const auto& s : successors(m_, configs_[a]))
                if (within_space(m_, s, n_, bound_))
                    out.push_back(intern(s));
        }
        else
        {
            const auto half = row(a, j - 1);
            if (stable_[a])
                return half;
            out = half;
            for (std::uint32_t mid : half)
            {
                const auto tail = row(mid, j - 1);
                out.insert(out.end(), tail.begin(), tail.end());
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());

        auto& levels = rows_[a];
        if (j > 0 && out.size() == levels[j - 1].size())
            stable_[a] = true;
        else
        {
            levels.push_back(out);
            ++row_count_;
        }
        return out;
    }

    const NDMachine& m_;
    std::size_t n_;
    std::size_t bound_;
    std::unordered_map<MTConfiguration, std::uint32_t, MTConfigurationHash> ids_;
    std::vector<MTConfiguration> configs_;
    std::vector<std::vector<std::vector<std::uint32_t>>> rows_;
    std::vector<bool> stable_;
    unsigned depth_ = 0;
    unsigned max_depth_ = 0;
    std::size_t row_count_ = 0;
};

}  // namespace

bool savitch_accepts(const NDMachine& m, BitView w, std::size_t space_bound, SavitchLimits limits,
                     SavitchStats* stats)
{
    if (space_bound == 0)
        throw Error(ErrorKind::InvalidArgument, "space bound must be at least 1");
    const std::uint64_t c = configuration_bound(m, w.size(), space_bound);
    if (c > limits.max_configs)
        throw Error(ErrorKind::BudgetExceeded,
                    "configuration bound " + std::to_string(c) + " exceeds the budget of " +
                        std::to_string(limits.max_configs));
    const unsigned levels = c <= 1 ? 0 : static_cast<unsigned>(std::bit_width(c - 1));

    if (stats)
    {
        *stats = {};
        stats->config_bound = c;
        stats->depth_bound = levels + 1;
    }

    const MTConfiguration start = initial_configuration(m, w);
    if (!within_space(m, start, w.size(), space_bound))
        return false;

    Reach reach(m, w.size(), space_bound);
    const auto reachable = reach.row(reach.intern(start), levels);
    const bool found = std::any_of(reachable.begin(), reachable.end(), [&](std::uint32_t id) {
        return is_accepting_halt(m, reach.config(id));
    });

    if (stats)
    {
        stats->max_depth = reach.max_depth();
        stats->rows = reach.rows();
        stats->configs = reach.configs();
    }
    return found;
}

}  // namespace turing
