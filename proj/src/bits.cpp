// turing: a Turing machine toolkit
// Copyright 2026 The turing Authors.
// SPDX-License-Identifier: Apache-2.0

#include "turing/bits.hpp"

#include "turing/error.hpp"

namespace turing
{
bool is_bit_text(std::string_view text) noexcept
{
    for (char c : text)
        if (c != '0' && c != '1')
            return false;
    return true;
}

BitString::BitString(std::string_view bits) : bits_(bits)
{
    if (!is_bit_text(bits))
        throw Error(ErrorKind::InvalidArgument, "not a bit string: '" + std::string(bits) + "'");
}

BitString& BitString::operator+=(BitView other)
{
    bits_.append(other);
    return *this;
}

}  // namespace turing
