// turing: a Turing machine toolkit
// Copyright 2026 The turing Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace turing
{
/// Arbitrary-precision natural number.
using Nat = boost::multiprecision::cpp_int;

/// Read-only view over a bit string. Characters are always '0' or '1'.
using BitView = std::string_view;

/// Finite sequence of bits, stored as ASCII '0'/'1' characters so that it
/// crosses text interfaces unchanged.
class BitString
{
public:
    BitString() = default;

    /// Throws Error(InvalidArgument) on any character other than '0' or '1'.
    explicit BitString(std::string_view bits);

    static BitString ones(std::size_t n) { return BitString(std::string(n, '1'), Trusted{}); }
    static BitString zeros(std::size_t n) { return BitString(std::string(n, '0'), Trusted{}); }

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    bool operator[](std::size_t i) const noexcept { return bits_[i] == '1'; }

    BitView view() const noexcept { return bits_; }
    operator BitView() const noexcept { return bits_; }
    const std::string& str() const noexcept { return bits_; }

    void push_back(bool bit) { bits_.push_back(bit ? '1' : '0'); }
    BitString& operator+=(BitView other);

    friend BitString operator+(BitString a, BitView b) { return a += b; }
    friend bool operator==(const BitString&, const BitString&) = default;
    friend std::strong_ordering operator<=>(const BitString&, const BitString&) = default;

private:
    struct Trusted
    {};
    BitString(std::string bits, Trusted) : bits_(std::move(bits)) {}

    std::string bits_;
};

/// True iff every character of `text` is '0' or '1'.
bool is_bit_text(std::string_view text) noexcept;

}  // namespace turing
