// evmlift: context-sensitive EVM bytecode lifter
// Copyright 2026 The evmlift Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmlift/opcodes.hpp>
#include <evmlift/uint256.hpp>

#include <array>
#include <string>

namespace evmlift
{
namespace
{
constexpr std::array<std::string_view, 32> push_names = {"PUSH1", "PUSH2", "PUSH3", "PUSH4",
    "PUSH5", "PUSH6", "PUSH7", "PUSH8", "PUSH9", "PUSH10", "PUSH11", "PUSH12", "PUSH13", "PUSH14",
    "PUSH15", "PUSH16", "PUSH17", "PUSH18", "PUSH19", "PUSH20", "PUSH21", "PUSH22", "PUSH23",
    "PUSH24", "PUSH25", "PUSH26", "PUSH27", "PUSH28", "PUSH29", "PUSH30", "PUSH31", "PUSH32"};
constexpr std::array<std::string_view, 16> dup_names = {"DUP1", "DUP2", "DUP3", "DUP4", "DUP5",
    "DUP6", "DUP7", "DUP8", "DUP9", "DUP10", "DUP11", "DUP12", "DUP13", "DUP14", "DUP15", "DUP16"};
constexpr std::array<std::string_view, 16> swap_names = {"SWAP1", "SWAP2", "SWAP3", "SWAP4",
    "SWAP5", "SWAP6", "SWAP7", "SWAP8", "SWAP9", "SWAP10", "SWAP11", "SWAP12", "SWAP13", "SWAP14",
    "SWAP15", "SWAP16"};
constexpr std::array<std::string_view, 5> log_names = {"LOG0", "LOG1", "LOG2", "LOG3", "LOG4"};

constexpr std::array<OpcodeInfo, 256> make_table() noexcept
{
    std::array<OpcodeInfo, 256> t{};
    for (auto& e : t)
        e = {"INVALID", 0, 0, 0, false, true};

    const auto def = [&t](std::uint8_t op, std::string_view name, std::uint8_t pops,
                         std::uint8_t pushes, bool halts = false) {
        t[op] = {name, pops, pushes, pops, true, halts};
    };

    def(OP_STOP, "STOP", 0, 0, true);
    def(OP_ADD, "ADD", 2, 1);
    def(OP_MUL, "MUL", 2, 1);
    def(OP_SUB, "SUB", 2, 1);
    def(OP_DIV, "DIV", 2, 1);
    def(OP_SDIV, "SDIV", 2, 1);
    def(OP_MOD, "MOD", 2, 1);
    def(OP_SMOD, "SMOD", 2, 1);
    def(OP_ADDMOD, "ADDMOD", 3, 1);
    def(OP_MULMOD, "MULMOD", 3, 1);
    def(OP_EXP, "EXP", 2, 1);
    def(OP_SIGNEXTEND, "SIGNEXTEND", 2, 1);

    def(OP_LT, "LT", 2, 1);
    def(OP_GT, "GT", 2, 1);
    def(OP_SLT, "SLT", 2, 1);
    def(OP_SGT, "SGT", 2, 1);
    def(OP_EQ, "EQ", 2, 1);
    def(OP_ISZERO, "ISZERO", 1, 1);
    def(OP_AND, "AND", 2, 1);
    def(OP_OR, "OR", 2, 1);
    def(OP_XOR, "XOR", 2, 1);
    def(OP_NOT, "NOT", 1, 1);
    def(OP_BYTE, "BYTE", 2, 1);
    def(OP_SHL, "SHL", 2, 1);
    def(OP_SHR, "SHR", 2, 1);
    def(OP_SAR, "SAR", 2, 1);

    def(OP_KECCAK256, "SHA3", 2, 1);

    def(OP_ADDRESS, "ADDRESS", 0, 1);
    def(OP_BALANCE, "BALANCE", 1, 1);
    def(OP_ORIGIN, "ORIGIN", 0, 1);
    def(OP_CALLER, "CALLER", 0, 1);
    def(OP_CALLVALUE, "CALLVALUE", 0, 1);
    def(OP_CALLDATALOAD, "CALLDATALOAD", 1, 1);
    def(OP_CALLDATASIZE, "CALLDATASIZE", 0, 1);
    def(OP_CALLDATACOPY, "CALLDATACOPY", 3, 0);
    def(OP_CODESIZE, "CODESIZE", 0, 1);
    def(OP_CODECOPY, "CODECOPY", 3, 0);
    def(OP_GASPRICE, "GASPRICE", 0, 1);
    def(OP_EXTCODESIZE, "EXTCODESIZE", 1, 1);
    def(OP_EXTCODECOPY, "EXTCODECOPY", 4, 0);
    def(OP_RETURNDATASIZE, "RETURNDATASIZE", 0, 1);
    def(OP_RETURNDATACOPY, "RETURNDATACOPY", 3, 0);
    def(OP_EXTCODEHASH, "EXTCODEHASH", 1, 1);

    def(OP_BLOCKHASH, "BLOCKHASH", 1, 1);
    def(OP_COINBASE, "COINBASE", 0, 1);
    def(OP_TIMESTAMP, "TIMESTAMP", 0, 1);
    def(OP_NUMBER, "NUMBER", 0, 1);
    def(OP_PREVRANDAO, "PREVRANDAO", 0, 1);
    def(OP_GASLIMIT, "GASLIMIT", 0, 1);
    def(OP_CHAINID, "CHAINID", 0, 1);
    def(OP_SELFBALANCE, "SELFBALANCE", 0, 1);
    def(OP_BASEFEE, "BASEFEE", 0, 1);
    def(OP_BLOBHASH, "BLOBHASH", 1, 1);
    def(OP_BLOBBASEFEE, "BLOBBASEFEE", 0, 1);

    def(OP_POP, "POP", 1, 0);
    def(OP_MLOAD, "MLOAD", 1, 1);
    def(OP_MSTORE, "MSTORE", 2, 0);
    def(OP_MSTORE8, "MSTORE8", 2, 0);
    def(OP_SLOAD, "SLOAD", 1, 1);
    def(OP_SSTORE, "SSTORE", 2, 0);
    def(OP_JUMP, "JUMP", 1, 0);
    def(OP_JUMPI, "JUMPI", 2, 0);
    def(OP_PC, "PC", 0, 1);
    def(OP_MSIZE, "MSIZE", 0, 1);
    def(OP_GAS, "GAS", 0, 1);
    def(OP_JUMPDEST, "JUMPDEST", 0, 0);
    def(OP_TLOAD, "TLOAD", 1, 1);
    def(OP_TSTORE, "TSTORE", 2, 0);
    def(OP_MCOPY, "MCOPY", 3, 0);
    def(OP_PUSH0, "PUSH0", 0, 1);
    for (unsigned i = 0; i < 32; ++i)
        def(static_cast<std::uint8_t>(OP_PUSH1 + i), push_names[i], 0, 1);
    for (unsigned i = 0; i < 16; ++i)
    {
        def(static_cast<std::uint8_t>(OP_DUP1 + i), dup_names[i], 0, 1);
        t[OP_DUP1 + i].required = std::uint8_t(i + 1);
        def(static_cast<std::uint8_t>(OP_SWAP1 + i), swap_names[i], 0, 0);
        t[OP_SWAP1 + i].required = std::uint8_t(i + 2);
    }
    for (unsigned i = 0; i < 5; ++i)
        def(static_cast<std::uint8_t>(OP_LOG0 + i), log_names[i], std::uint8_t(i + 2), 0);

    def(OP_CREATE, "CREATE", 3, 1);
    def(OP_CALL, "CALL", 7, 1);
    def(OP_CALLCODE, "CALLCODE", 7, 1);
    def(OP_RETURN, "RETURN", 2, 0, true);
    def(OP_DELEGATECALL, "DELEGATECALL", 6, 1);
    def(OP_CREATE2, "CREATE2", 4, 1);
    def(OP_STATICCALL, "STATICCALL", 6, 1);
    def(OP_REVERT, "REVERT", 2, 0, true);
    def(OP_INVALID, "INVALID", 0, 0, true);
    def(OP_SELFDESTRUCT, "SELFDESTRUCT", 1, 0, true);
    return t;
}

constexpr auto table = make_table();
}  // namespace

const OpcodeInfo& opcode_info(std::uint8_t op) noexcept
{
    return table[op];
}

std::optional<std::uint8_t> opcode_from_name(std::string_view name) noexcept
{
    if (name == "INVALID")
        return OP_INVALID;
    for (unsigned op = 0; op < 256; ++op)
    {
        if (table[op].defined && table[op].name == name)
            return static_cast<std::uint8_t>(op);
    }
    return std::nullopt;
}

std::string to_hex_digits(std::uint64_t v)
{
    static constexpr char digits[] = "0123456789abcdef";
    if (v == 0)
        return "0";
    std::string s;
    while (v != 0)
    {
        s.insert(s.begin(), digits[v & 0xf]);
        v >>= 4;
    }
    return s;
}

std::string to_hex(std::uint64_t v)
{
    return "0x" + to_hex_digits(v);
}

std::string to_hex(const u256& v)
{
    if (fits_u64(v))
        return to_hex(static_cast<std::uint64_t>(v));
    static constexpr char digits[] = "0123456789abcdef";
    std::string s;
    u256 x = v;
    while (x != 0)
    {
        s.insert(s.begin(), digits[static_cast<unsigned>(x & 0xf)]);
        x >>= 4;
    }
    return "0x" + s;
}
}  // namespace evmlift
