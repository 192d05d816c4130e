// evmlift: context-sensitive EVM bytecode lifter
// Copyright 2026 The evmlift Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmlift/bytecode.hpp>

#include <cctype>

namespace evmlift
{
std::string_view to_string(TerminatorKind kind) noexcept
{
    switch (kind)
    {
    case TerminatorKind::jump:
        return "jump";
    case TerminatorKind::conditional_jump:
        return "conditional-jump";
    case TerminatorKind::halt:
        return "halt";
    case TerminatorKind::fallthrough:
        return "fallthrough";
    }
    return "unknown";
}

const BasicBlock* BytecodeProgram::find_block(BlockId id) const
{
    const auto it = blocks.find(id);
    return it == blocks.end() ? nullptr : &it->second;
}

bool BytecodeProgram::is_jump_target(BlockId id) const
{
    return jumpdests.contains(id) || clone_origin.contains(id);
}

bool BytecodeProgram::is_jump_target(const u256& value) const
{
    return fits_u64(value) && is_jump_target(static_cast<BlockId>(value));
}

std::optional<BlockId> BytecodeProgram::fallthrough_of(const BasicBlock& block) const
{
    if (block.terminator != TerminatorKind::fallthrough &&
        block.terminator != TerminatorKind::conditional_jump)
        return std::nullopt;
    // Clones always end in JUMP, so fallthrough stays within the original code.
    const auto next = block.end_pc();
    if (blocks.contains(next) && !clone_origin.contains(next))
        return next;
    return std::nullopt;
}

BlockId BytecodeProgram::original_of(BlockId id) const
{
    const auto it = clone_origin.find(id);
    return it == clone_origin.end() ? id : it->second;
}

std::vector<Instruction> disassemble(bytes_view code)
{
    std::vector<Instruction> result;
    for (std::size_t pc = 0; pc < code.size();)
    {
        Instruction inst{pc, code[pc], std::nullopt};
        if (is_push(inst.opcode))
        {
            const auto n = push_size(inst.opcode);
            u256 value = 0;
            for (unsigned i = 0; i < n; ++i)
            {
                const auto at = pc + 1 + i;
                value <<= 8;
                if (at < code.size())
                    value |= code[at];
            }
            inst.pushed_value = value;
        }
        pc += inst.size();
        result.push_back(std::move(inst));
    }
    return result;
}

BytecodeProgram extract_blocks(const std::vector<Instruction>& instructions, bytes code)
{
    BytecodeProgram program;
    program.code = std::move(code);
    program.jumpdests = valid_jumpdests(program.code);

    BasicBlock current;
    bool open = false;
    const auto close = [&](TerminatorKind kind) {
        current.terminator = kind;
        program.blocks.emplace(current.id, std::move(current));
        current = BasicBlock{};
        open = false;
    };

    for (const auto& inst : instructions)
    {
        if (inst.opcode == OP_JUMPDEST && open)
            close(TerminatorKind::fallthrough);
        if (!open)
        {
            current.id = inst.pc;
            open = true;
        }
        current.instructions.push_back(inst);
        if (inst.opcode == OP_JUMP)
            close(TerminatorKind::jump);
        else if (inst.opcode == OP_JUMPI)
            close(TerminatorKind::conditional_jump);
        else if (inst.halts())
            close(TerminatorKind::halt);
    }
    if (open)
        close(TerminatorKind::fallthrough);
    return program;
}

BytecodeProgram load_program(bytes code)
{
    const auto instructions = disassemble(code);
    return extract_blocks(instructions, std::move(code));
}

std::set<BlockId> valid_jumpdests(bytes_view code)
{
    std::set<BlockId> result;
    for (std::size_t pc = 0; pc < code.size(); ++pc)
    {
        const auto op = code[pc];
        if (op == OP_JUMPDEST)
            result.insert(pc);
        pc += push_size(op);
    }
    return result;
}

namespace
{
int hex_value(char c) noexcept
{
    if (c >= '0' && c <= '9')
        return c - '0';
    if (c >= 'a' && c <= 'f')
        return c - 'a' + 10;
    if (c >= 'A' && c <= 'F')
        return c - 'A' + 10;
    return -1;
}

bool is_space(char c) noexcept
{
    return std::isspace(static_cast<unsigned char>(c)) != 0;
}
}  // namespace

bytes from_hex(std::string_view hex)
{
    std::size_t start = 0;
    while (start < hex.size() && is_space(hex[start]))
        ++start;
    if (hex.substr(start, 2) == "0x" || hex.substr(start, 2) == "0X")
        start += 2;

    bytes out;
    int pending = -1;
    std::size_t pending_offset = 0;
    for (std::size_t i = start; i < hex.size(); ++i)
    {
        const char c = hex[i];
        if (is_space(c))
            continue;
        const int v = hex_value(c);
        if (v < 0)
            throw BytecodeParseError(i, "invalid hex character at offset " + std::to_string(i));
        if (pending < 0)
        {
            pending = v;
            pending_offset = i;
        }
        else
        {
            out.push_back(static_cast<std::uint8_t>(pending * 16 + v));
            pending = -1;
        }
    }
    if (pending >= 0)
        throw BytecodeParseError(pending_offset,
            "odd number of hex digits; unpaired digit at offset " + std::to_string(pending_offset));
    return out;
}

bytes parse_bytecode_text(std::string_view content)
{
    // Printable text is hex, so a typo fails loudly instead of being taken
    // as raw bytes.
    for (const char c : content)
    {
        const auto u = static_cast<unsigned char>(c);
        if (!is_space(c) && (u < 0x20 || u > 0x7e))
            return bytes(content.begin(), content.end());
    }
    return from_hex(content);
}

std::string to_hex_string(bytes_view data)
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string s;
    s.reserve(data.size() * 2);
    for (const auto b : data)
    {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 0xf]);
    }
    return s;
}
}  // namespace evmlift
