// evmlift: context-sensitive EVM bytecode lifter
// Copyright 2026 The evmlift Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace evmlift
{
enum Opcode : std::uint8_t
{
    OP_STOP = 0x00,
    OP_ADD = 0x01,
    OP_MUL = 0x02,
    OP_SUB = 0x03,
    OP_DIV = 0x04,
    OP_SDIV = 0x05,
    OP_MOD = 0x06,
    OP_SMOD = 0x07,
    OP_ADDMOD = 0x08,
    OP_MULMOD = 0x09,
    OP_EXP = 0x0a,
    OP_SIGNEXTEND = 0x0b,

    OP_LT = 0x10,
    OP_GT = 0x11,
    OP_SLT = 0x12,
    OP_SGT = 0x13,
    OP_EQ = 0x14,
    OP_ISZERO = 0x15,
    OP_AND = 0x16,
    OP_OR = 0x17,
    OP_XOR = 0x18,
    OP_NOT = 0x19,
    OP_BYTE = 0x1a,
    OP_SHL = 0x1b,
    OP_SHR = 0x1c,
    OP_SAR = 0x1d,

    OP_KECCAK256 = 0x20,

    OP_ADDRESS = 0x30,
    OP_BALANCE = 0x31,
    OP_ORIGIN = 0x32,
    OP_CALLER = 0x33,
    OP_CALLVALUE = 0x34,
    OP_CALLDATALOAD = 0x35,
    OP_CALLDATASIZE = 0x36,
    OP_CALLDATACOPY = 0x37,
    OP_CODESIZE = 0x38,
    OP_CODECOPY = 0x39,
    OP_GASPRICE = 0x3a,
    OP_EXTCODESIZE = 0x3b,
    OP_EXTCODECOPY = 0x3c,
    OP_RETURNDATASIZE = 0x3d,
    OP_RETURNDATACOPY = 0x3e,
    OP_EXTCODEHASH = 0x3f,

    OP_BLOCKHASH = 0x40,
    OP_COINBASE = 0x41,
    OP_TIMESTAMP = 0x42,
    OP_NUMBER = 0x43,
    OP_PREVRANDAO = 0x44,
    OP_GASLIMIT = 0x45,
    OP_CHAINID = 0x46,
    OP_SELFBALANCE = 0x47,
    OP_BASEFEE = 0x48,
    OP_BLOBHASH = 0x49,
    OP_BLOBBASEFEE = 0x4a,

    OP_POP = 0x50,
    OP_MLOAD = 0x51,
    OP_MSTORE = 0x52,
    OP_MSTORE8 = 0x53,
    OP_SLOAD = 0x54,
    OP_SSTORE = 0x55,
    OP_JUMP = 0x56,
    OP_JUMPI = 0x57,
    OP_PC = 0x58,
    OP_MSIZE = 0x59,
    OP_GAS = 0x5a,
    OP_JUMPDEST = 0x5b,
    OP_TLOAD = 0x5c,
    OP_TSTORE = 0x5d,
    OP_MCOPY = 0x5e,
    OP_PUSH0 = 0x5f,
    OP_PUSH1 = 0x60,
    OP_PUSH2 = 0x61,
    OP_PUSH4 = 0x63,
    OP_PUSH20 = 0x73,
    OP_PUSH32 = 0x7f,
    OP_DUP1 = 0x80,
    OP_DUP2 = 0x81,
    OP_DUP3 = 0x82,
    OP_DUP4 = 0x83,
    OP_DUP16 = 0x8f,
    OP_SWAP1 = 0x90,
    OP_SWAP2 = 0x91,
    OP_SWAP3 = 0x92,
    OP_SWAP16 = 0x9f,
    OP_LOG0 = 0xa0,
    OP_LOG4 = 0xa4,

    OP_CREATE = 0xf0,
    OP_CALL = 0xf1,
    OP_CALLCODE = 0xf2,
    OP_RETURN = 0xf3,
    OP_DELEGATECALL = 0xf4,
    OP_CREATE2 = 0xf5,
    OP_STATICCALL = 0xfa,
    OP_REVERT = 0xfd,
    OP_INVALID = 0xfe,
    OP_SELFDESTRUCT = 0xff,
};

struct OpcodeInfo
{
    std::string_view name;
    std::uint8_t pops = 0;
    std::uint8_t pushes = 0;
    /// Stack depth that must be present; exceeds pops only for DUP/SWAP.
    std::uint8_t required = 0;
    bool defined = false;
    bool halts = false;
};

/// Table entry for any byte. Undefined bytes report "INVALID" semantics
/// under their own hex name, with no stack effect, and halt.
const OpcodeInfo& opcode_info(std::uint8_t op) noexcept;

/// Reverse lookup used by the TAC parser and the test assembler.
std::optional<std::uint8_t> opcode_from_name(std::string_view name) noexcept;

constexpr bool is_push(std::uint8_t op) noexcept
{
    return op >= OP_PUSH0 && op <= OP_PUSH32;
}

/// Immediate size in bytes; zero for PUSH0 and non-push opcodes.
constexpr unsigned push_size(std::uint8_t op) noexcept
{
    return (op >= OP_PUSH1 && op <= OP_PUSH32) ? unsigned(op - OP_PUSH1 + 1) : 0u;
}

constexpr bool is_dup(std::uint8_t op) noexcept
{
    return op >= OP_DUP1 && op <= OP_DUP16;
}

constexpr bool is_swap(std::uint8_t op) noexcept
{
    return op >= OP_SWAP1 && op <= OP_SWAP16;
}

/// n for DUPn / SWAPn.
constexpr unsigned dup_swap_n(std::uint8_t op) noexcept
{
    return is_dup(op) ? unsigned(op - OP_DUP1 + 1) : unsigned(op - OP_SWAP1 + 1);
}

constexpr bool is_jump(std::uint8_t op) noexcept
{
    return op == OP_JUMP || op == OP_JUMPI;
}
}  // namespace evmlift
