// turing: a Turing machine toolkit
// Copyright 2026 The turing Authors.
// SPDX-License-Identifier: Apache-2.0

#include "turing/enumeration.hpp"

#include "turing/error.hpp"

#include <algorithm>
#include <string>

namespace turing
{
bool is_valid_code(BitView bits)
{
    std::size_t consumed = 0;
    return scan_machine_code(bits, consumed) == CodeDefect::None && consumed == bits.size();
}

namespace
{
std::uint64_t min_states(unsigned s)
{
    return s <= 3 ? 1 : (std::uint64_t{1} << (s - 1)) - 4;
}

std::uint64_t max_states(unsigned s)
{
    return (std::uint64_t{1} << s) - kFirstStateCode;
}

struct Header
{
    BitString bits;
    unsigned s;
    std::uint64_t r;
};

// Every feasible (s, r) whose codes are exactly `len` bits long, in
// lexicographic order of the header bits. Distinct headers are never
// prefixes of one another, so this is also the order of the full codes.
std::vector<Header> headers_of_length(std::size_t len)
{
    std::vector<Header> out;
    for (unsigned s = 3; s <= 32; ++s)
    {
        const std::size_t s_part = 2 * numeral_length(s) + 1;
        for (std::uint64_t r = 1;; ++r)
        {
            const std::size_t total = s_part + 2 * numeral_length(r) + 1 + 4 * r * s;
            if (total > len)
                break;
            if (total < len)
                continue;
            // At most 2r distinct states; determinism caps r at 3|Q|.
            if (2 * r < min_states(s) || r > 3 * max_states(s))
                continue;
            out.push_back({bar(str_of_nat(s)) + bar(str_of_nat(r)), s, r});
        }
        if (s_part + 3 + 4 * s > len)
            break;
    }
    std::sort(out.begin(), out.end(),
              [](const Header& a, const Header& b) { return a.bits < b.bits; });
    return out;
}

// Depth-first walk over the 4r code fields of one header in increasing
// lexicographic order, producing only canonical machines.
class BodyWalker
{
public:
    BodyWalker(unsigned s, std::uint64_t r)
      : s_(s),
        fields_(static_cast<std::size_t>(4 * r)),
        vals_(fields_, -1),
        seen_(fields_ + 1, 0),
        min_q_(min_states(s)),
        limit_((std::int64_t{1} << s) - 1)
    {
        remaining_states_.resize(fields_);
        std::uint64_t count = 0;
        for (std::size_t i = fields_; i-- > 0;)
        {
            remaining_states_[i] = count;
            if (is_state_field(i))
                ++count;
        }
    }

    /// Advances to the next canonical body; false when exhausted.
    bool next()
    {
        if (done_)
            return false;
        while (true)
        {
            const auto v = candidate(pos_, vals_[pos_] + 1);
            if (!v)
            {
                vals_[pos_] = -1;
                if (pos_ == 0)
                {
                    done_ = true;
                    return false;
                }
                --pos_;
                continue;
            }
            vals_[pos_] = *v;
            const bool is_new = is_state_field(pos_) &&
                                *v == static_cast<std::int64_t>(kFirstStateCode + seen_[pos_]);
            seen_[pos_ + 1] = seen_[pos_] + (is_new ? 1 : 0);
            if (seen_[pos_ + 1] + remaining_states_[pos_] < min_q_)
                continue;
            if (pos_ + 1 == fields_)
                return true;
            ++pos_;
        }
    }

    std::vector<Rule> rules() const
    {
        std::vector<Rule> out;
        for (std::size_t i = 0; i < fields_; i += 4)
            out.push_back({static_cast<StateId>(vals_[i] - kFirstStateCode),
                           static_cast<Symbol>(vals_[i + 1]), static_cast<Action>(vals_[i + 2]),
                           static_cast<StateId>(vals_[i + 3] - kFirstStateCode)});
        return out;
    }

    BitString body() const
    {
        BitString out;
        for (auto v : vals_)
            for (unsigned b = s_; b-- > 0;)
                out.push_back((v >> b) & 1);
        return out;
    }

private:
    static bool is_state_field(std::size_t i) { return i % 4 == 0 || i % 4 == 3; }

    // Smallest admissible value >= from for field i given fields before it.
    std::optional<std::int64_t> candidate(std::size_t i, std::int64_t from) const
    {
        std::int64_t lo = 0, hi = 0;
        switch (i % 4)
        {
        case 0:
        case 3:
            lo = kFirstStateCode;
            hi = i == 0 ? lo : std::min<std::int64_t>(kFirstStateCode + seen_[i], limit_);
            break;
        case 1:
            lo = 0;
            hi = kSymbolCount - 1;
            break;
        default:
            lo = 0;
            hi = kActionCount - 1;
            break;
        }
        for (std::int64_t v = std::max(from, lo); v <= hi; ++v)
        {
            if (i % 4 == 1 && pair_taken(i, v))
                continue;
            return v;
        }
        return std::nullopt;
    }

    bool pair_taken(std::size_t i, std::int64_t scan) const
    {
        const std::int64_t p = vals_[i - 1];
        for (std::size_t j = 0; j + 1 < i; j += 4)
            if (vals_[j] == p && vals_[j + 1] == scan)
                return true;
        return false;
    }

    unsigned s_;
    std::size_t fields_;
    std::vector<std::int64_t> vals_;
    std::vector<std::uint64_t> seen_;
    std::vector<std::uint64_t> remaining_states_;
    std::uint64_t min_q_;
    std::int64_t limit_;
    std::size_t pos_ = 0;
    bool done_ = false;
};

void check_budget(std::size_t len, const EnumerationLimits& limits)
{
    if (len > limits.max_code_len || len > kMaxCodeLenCeiling)
        throw Error(ErrorKind::BudgetExceeded,
                    "code length " + std::to_string(len) + " exceeds the enumeration budget of " +
                        std::to_string(std::min(limits.max_code_len, kMaxCodeLenCeiling)) +
                        " bits");
}

}  // namespace

struct MachineEnumerator::State
{
    std::size_t max_len;
    std::size_t len = 0;
    std::vector<Header> headers;
    std::size_t header = 0;
    std::optional<BodyWalker> walker;
    std::uint64_t index = 0;
};

MachineEnumerator::MachineEnumerator(std::size_t max_code_len, EnumerationLimits limits)
{
    check_budget(max_code_len, limits);
    state_ = std::make_unique<State>();
    state_->max_len = max_code_len;
}

MachineEnumerator::~MachineEnumerator() = default;
MachineEnumerator::MachineEnumerator(MachineEnumerator&&) noexcept = default;
MachineEnumerator& MachineEnumerator::operator=(MachineEnumerator&&) noexcept = default;

std::optional<EnumeratedMachine> MachineEnumerator::next()
{
    State& st = *state_;
    while (true)
    {
        if (st.walker && st.walker->next())
        {
            const Header& h = st.headers[st.header];
            return EnumeratedMachine{GodelIndex{++st.index}, h.bits + st.walker->body(),
                                     Machine::from_rules(st.walker->rules())};
        }
        if (st.walker)
        {
            st.walker.reset();
            ++st.header;
        }
        if (st.header < st.headers.size())
        {
            const Header& h = st.headers[st.header];
            st.walker.emplace(h.s, h.r);
            continue;
        }
        if (st.len >= st.max_len)
            return std::nullopt;
        ++st.len;
        st.headers = headers_of_length(st.len);
        st.header = 0;
    }
}

Machine machine_of_index(GodelIndex i, EnumerationLimits limits)
{
    if (i.value == 0)
        throw Error(ErrorKind::InvalidArgument, "Goedel indices start at 1");
    MachineEnumerator e(limits.max_code_len, limits);
    std::uint64_t count = 0;
    while (auto item = e.next())
    {
        count = item->index.value;
        if (count == i.value)
            return std::move(item->machine);
    }
    throw Error(ErrorKind::BudgetExceeded,
                "index " + std::to_string(i.value) + " is beyond the " + std::to_string(count) +
                    " machines with codes of at most " + std::to_string(limits.max_code_len) +
                    " bits");
}

GodelIndex godel_number(const Machine& m, EnumerationLimits limits)
{
    const BitString code = encode_machine(m);
    check_budget(code.size(), limits);
    MachineEnumerator e(code.size(), limits);
    while (auto item = e.next())
        if (item->code == code)
            return item->index;
    // encode_machine always yields a canonical code of exactly this length.
    throw Error(ErrorKind::InvalidMachine, "machine code not found in enumeration");
}

}  // namespace turing
