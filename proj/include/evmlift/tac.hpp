// evmlift: context-sensitive EVM bytecode lifter
// Copyright 2026 The evmlift Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <evmlift/uint256.hpp>

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace evmlift
{
/// Rendered in place of an operand no predecessor supplied.
inline constexpr std::string_view unresolved_operand_name = "UNKNOWN";

/// A value name with an optional known constant, rendered "v5a(0x77)".
struct TacOperand
{
    std::string name;
    std::optional<u256> constant;

    bool is_unresolved() const { return name == unresolved_operand_name; }

    friend bool operator==(const TacOperand&, const TacOperand&) = default;
};

struct TacStatement
{
    /// "0x5a", or "0x72_0x1" for the PHI of entry slot 1 of block 0x72.
    std::string pc_label;
    std::optional<TacOperand> def;
    /// Mnemonic, or CONST / PHI / CALLPRIVATE / RETURNPRIVATE.
    std::string op;
    std::vector<TacOperand> operands;

    friend bool operator==(const TacStatement&, const TacStatement&) = default;
};

struct TacBlock
{
    BlockId id = 0;
    std::vector<TacStatement> statements;
    std::vector<BlockId> preds;
    std::vector<BlockId> succs;

    /// Op of the last statement, or empty.
    std::string_view terminator_op() const;
    /// Successors required by the terminator: 2 for JUMPI, 0 for halts and
    /// RETURNPRIVATE, otherwise 1.
    std::size_t required_successors() const;
    /// Successors allowed before control flow counts as unstructured.
    std::size_t allowed_successors() const;

    friend bool operator==(const TacBlock&, const TacBlock&) = default;
};

struct TacFunction
{
    enum class Kind
    {
        public_function,
        private_function,
        shared,
    };

    BlockId entry = 0;
    Kind kind = Kind::private_function;
    std::optional<std::uint32_t> selector;
    std::set<BlockId> members;

    friend bool operator==(const TacFunction&, const TacFunction&) = default;
};

struct TacProgram
{
    /// Ascending by id.
    std::vector<TacBlock> blocks;
    /// Blocks the lifter could not reconstruct consistently.
    std::set<BlockId> dropped_blocks;

    const TacBlock* find(BlockId id) const;
};

class TacParseError : public std::runtime_error
{
public:
    TacParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_{line}
    {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

std::string render_operand(const TacOperand& operand);
std::string render_statement(const TacStatement& stmt);

/// Textual block listing:
///   Begin block 0x58
///   prev=[0x50], succ=[0xae8]
///   =================================
///   0x5a: v5a(0x77) = CONST
/// with a blank line after each block.
std::string render_tac(const TacProgram& program);

/// Inverse of render_tac(). Throws TacParseError.
TacProgram parse_tac(std::string_view text);
}  // namespace evmlift
