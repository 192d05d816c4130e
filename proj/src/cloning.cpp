// evmlift: context-sensitive EVM bytecode lifter
// Copyright 2026 The evmlift Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmlift/cloning.hpp>

#include <map>
#include <stdexcept>

namespace evmlift
{
namespace
{
constexpr std::uint64_t next_multiple_of_16(std::uint64_t x) noexcept
{
    return (x / 16 + 1) * 16;
}

Instruction* find_instruction(BytecodeProgram& program, std::uint64_t pc)
{
    auto it = program.blocks.upper_bound(pc);
    if (it == program.blocks.begin())
        return nullptr;
    --it;
    for (auto& inst : it->second.instructions)
    {
        if (inst.pc == pc)
            return &inst;
    }
    return nullptr;
}
}  // namespace

std::set<CloneInstance> select_clone_candidates(
    const BytecodeProgram& program, const PatternFacts& facts)
{
    std::map<BlockId, std::set<std::uint64_t>> pushers;

    std::map<BlockId, std::set<std::uint64_t>> continuation_pushes;
    for (const auto& c : facts.private_call_candidates)
        continuation_pushes[c.continuation].insert(c.push_pc);
    for (auto& [block, pcs] : continuation_pushes)
    {
        if (pcs.size() >= 2)
            pushers[block].insert(pcs.begin(), pcs.end());
    }

    if (!facts.stack_balancing.empty())
    {
        std::map<BlockId, std::set<std::uint64_t>> all_pushes;
        for (const auto& [id, block] : program.blocks)
        {
            for (const auto& inst : block.instructions)
            {
                if (!inst.pushed_value || !fits_u64(*inst.pushed_value))
                    continue;
                const auto value = static_cast<BlockId>(*inst.pushed_value);
                if (facts.stack_balancing.contains(value))
                    all_pushes[value].insert(inst.pc);
            }
        }
        for (auto& [block, pcs] : all_pushes)
        {
            if (pcs.size() >= 2)
                pushers[block].insert(pcs.begin(), pcs.end());
        }
    }

    std::set<CloneInstance> result;
    auto fresh = next_multiple_of_16(program.code.size());
    for (const auto& [id, pcs] : pushers)
    {
        const auto* block = program.find_block(id);
        if (block == nullptr || block->terminator != TerminatorKind::jump)
            continue;
        const auto size = block->end_pc() - block->id;
        for (const auto pc : pcs)
        {
            result.insert({pc, id, fresh});
            fresh = next_multiple_of_16(fresh + size);
        }
    }
    return result;
}

BytecodeProgram apply_cloning(const BytecodeProgram& program, const std::set<CloneInstance>& instances)
{
    BytecodeProgram out = program;
    for (const auto& ci : instances)
    {
        const auto* original = program.find_block(ci.original);
        if (original == nullptr || original->terminator != TerminatorKind::jump)
            throw std::invalid_argument(
                "clone original " + to_hex(ci.original) + " is not a JUMP-terminated block");
        if (program.find_block(ci.fresh) != nullptr || out.clone_origin.contains(ci.fresh))
            throw std::invalid_argument("clone id " + to_hex(ci.fresh) + " collides");
        auto* push = find_instruction(out, ci.push_pc);
        if (push == nullptr || !push->pushed_value || *push->pushed_value != ci.original)
            throw std::invalid_argument("instruction at " + to_hex(ci.push_pc) +
                                        " does not push " + to_hex(ci.original));
        push->pushed_value = u256{ci.fresh};
        out.clone_origin.emplace(ci.fresh, ci.original);
    }

    for (const auto& ci : instances)
    {
        BasicBlock copy = out.blocks.at(ci.original);
        for (auto& inst : copy.instructions)
            inst.pc = ci.fresh + (inst.pc - ci.original);
        copy.id = ci.fresh;
        out.blocks.emplace(ci.fresh, std::move(copy));
    }
    return out;
}
}  // namespace evmlift
