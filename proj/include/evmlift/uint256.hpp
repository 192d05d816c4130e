// evmlift: context-sensitive EVM bytecode lifter
// Copyright 2026 The evmlift Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <string>

namespace evmlift
{
/// 256-bit EVM word. Arithmetic wraps modulo 2^256.
using u256 = boost::multiprecision::uint256_t;

/// Byte offset in code, or a synthetic block id past the end of code.
using BlockId = std::uint64_t;

/// Lowercase hex with "0x" prefix and no leading zeros ("0x0" for zero).
std::string to_hex(const u256& v);
std::string to_hex(std::uint64_t v);

/// Same as to_hex() but without the prefix; used for value names.
std::string to_hex_digits(std::uint64_t v);

/// Returns true and stores the value when v fits in 64 bits.
inline bool fits_u64(const u256& v) noexcept
{
    return v <= u256{std::numeric_limits<std::uint64_t>::max()};
}

struct U256Hash
{
    std::size_t operator()(const u256& v) const noexcept
    {
        return std::hash<std::uint64_t>{}(static_cast<std::uint64_t>(v)) ^
               (std::hash<std::uint64_t>{}(static_cast<std::uint64_t>(v >> 64)) << 1);
    }
};
}  // namespace evmlift
