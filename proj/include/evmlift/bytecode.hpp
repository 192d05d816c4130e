// evmlift: context-sensitive EVM bytecode lifter
// Copyright 2026 The evmlift Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <evmlift/opcodes.hpp>
#include <evmlift/uint256.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace evmlift
{
using bytes = std::vector<std::uint8_t>;
using bytes_view = std::span<const std::uint8_t>;

struct Instruction
{
    std::uint64_t pc = 0;
    std::uint8_t opcode = OP_STOP;
    /// Present exactly for PUSH0..PUSH32.
    std::optional<u256> pushed_value;

    std::string_view name() const noexcept { return opcode_info(opcode).name; }
    unsigned pops() const noexcept { return opcode_info(opcode).pops; }
    unsigned pushes() const noexcept { return opcode_info(opcode).pushes; }
    unsigned required() const noexcept { return opcode_info(opcode).required; }
    bool halts() const noexcept { return opcode_info(opcode).halts; }
    unsigned size() const noexcept { return 1 + push_size(opcode); }

    friend bool operator==(const Instruction&, const Instruction&) = default;
};

enum class TerminatorKind
{
    jump,
    conditional_jump,
    halt,
    fallthrough,
};

std::string_view to_string(TerminatorKind kind) noexcept;

struct BasicBlock
{
    BlockId id = 0;
    std::vector<Instruction> instructions;
    TerminatorKind terminator = TerminatorKind::fallthrough;

    const Instruction& last() const { return instructions.back(); }

    /// pc one past the last instruction.
    std::uint64_t end_pc() const { return last().pc + last().size(); }
};

struct BytecodeProgram
{
    bytes code;
    std::map<BlockId, BasicBlock> blocks;
    std::set<BlockId> jumpdests;
    /// Synthetic clone id -> block it was copied from. Empty before cloning.
    std::map<BlockId, BlockId> clone_origin;

    const BasicBlock* find_block(BlockId id) const;

    /// A JUMPDEST offset or a clone id.
    bool is_jump_target(BlockId id) const;
    bool is_jump_target(const u256& value) const;

    /// Block entered when `block` does not take its jump (JUMPI not taken or
    /// plain fallthrough). Absent for halts/jumps and when running off the code.
    std::optional<BlockId> fallthrough_of(const BasicBlock& block) const;

    /// Maps a clone id back to its original; identity for other ids.
    BlockId original_of(BlockId id) const;
};

/// Decodes every byte; total. Truncated PUSH immediates are zero-padded on the right.
std::vector<Instruction> disassemble(bytes_view code);

/// Partitions a disassembly into basic blocks.
BytecodeProgram extract_blocks(const std::vector<Instruction>& instructions, bytes code);

/// disassemble() followed by extract_blocks().
BytecodeProgram load_program(bytes code);

/// Offsets of JUMPDEST bytes that are not PUSH immediate data.
std::set<BlockId> valid_jumpdests(bytes_view code);

class BytecodeParseError : public std::runtime_error
{
public:
    BytecodeParseError(std::size_t offset, const std::string& what)
      : std::runtime_error(what), offset_{offset}
    {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Decodes file content. Printable ASCII text is hex (optionally "0x"-prefixed,
/// whitespace ignored) and any bad character is an error; content with other
/// bytes is raw binary.
bytes parse_bytecode_text(std::string_view content);

/// Parses strict hex (optional 0x, whitespace ignored). Throws BytecodeParseError.
bytes from_hex(std::string_view hex);
std::string to_hex_string(bytes_view data);
}  // namespace evmlift
