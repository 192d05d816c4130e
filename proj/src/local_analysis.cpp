// evmlift: context-sensitive EVM bytecode lifter
// Copyright 2026 The evmlift Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmlift/local_analysis.hpp>

#include <algorithm>
#include <deque>

namespace evmlift
{
namespace
{
constexpr unsigned max_evm_stack = 1024;

std::optional<u256> fold(std::uint8_t op, const std::vector<SymValue>& args)
{
    for (const auto& a : args)
    {
        if (!a.constant)
            return std::nullopt;
    }
    const auto arg = [&](std::size_t i) -> const u256& { return *args[i].constant; };
    switch (op)
    {
    case OP_ADD:
        return arg(0) + arg(1);
    case OP_SUB:
        return arg(0) - arg(1);
    case OP_AND:
        return arg(0) & arg(1);
    case OP_DIV:
        return arg(1) == 0 ? u256{0} : u256{arg(0) / arg(1)};
    case OP_EQ:
        return u256{arg(0) == arg(1) ? 1 : 0};
    case OP_ISZERO:
        return u256{arg(0) == 0 ? 1 : 0};
    case OP_SHL:
        return arg(0) >= 256 ? u256{0} : u256{arg(1) << static_cast<unsigned>(arg(0))};
    case OP_SHR:
        return arg(0) >= 256 ? u256{0} : u256{arg(1) >> static_cast<unsigned>(arg(0))};
    default:
        return std::nullopt;
    }
}

const StatementInfo* defining_statement(
    const BasicBlock& block, const BlockSummary& summary, const SymValue& v, std::uint8_t& opcode)
{
    if (!v.is_def())
        return nullptr;
    const auto idx = summary.statement_index(v.id);
    if (!idx)
        return nullptr;
    opcode = block.instructions[*idx].opcode;
    return &summary.statements[*idx];
}
}  // namespace

SymValue BlockSummary::exit_slot(std::size_t i) const
{
    if (i < exit_stack.size())
        return exit_stack[i];
    return SymValue::entry(consumed_depth + (i - exit_stack.size()));
}

std::optional<std::size_t> BlockSummary::statement_index(std::uint64_t pc) const
{
    // Def ids are pcs of this block's instructions; statements carry them as results.
    for (std::size_t i = 0; i < statements.size(); ++i)
    {
        const auto& r = statements[i].result;
        if (r && r->is_def() && r->id == pc)
            return i;
    }
    return std::nullopt;
}

BlockSummary summarize_block(const BasicBlock& block)
{
    BlockSummary summary;
    summary.block = block.id;

    // Front is the deepest materialized slot; back is the top.
    std::deque<SymValue> stack;
    std::uint64_t next_entry = 0;
    const auto materialize = [&](std::size_t depth) {
        while (stack.size() < depth)
            stack.push_front(SymValue::entry(next_entry++));
    };
    const auto pop = [&]() {
        materialize(1);
        auto v = stack.back();
        stack.pop_back();
        return v;
    };

    summary.statements.reserve(block.instructions.size());
    for (const auto& inst : block.instructions)
    {
        StatementInfo info;
        const auto op = inst.opcode;
        materialize(inst.required());

        if (is_push(op))
        {
            info.result = SymValue::def(inst.pc, inst.pushed_value);
            stack.push_back(*info.result);
        }
        else if (is_dup(op))
        {
            stack.push_back(stack[stack.size() - dup_swap_n(op)]);
        }
        else if (is_swap(op))
        {
            std::swap(stack[stack.size() - 1], stack[stack.size() - 1 - dup_swap_n(op)]);
        }
        else
        {
            for (unsigned i = 0; i < inst.pops(); ++i)
                info.operands.push_back(pop());
            if (op == OP_JUMP || op == OP_JUMPI)
            {
                summary.jump_target = info.operands[0];
                if (op == OP_JUMPI)
                    summary.jump_condition = info.operands[1];
            }
            if (inst.pushes() != 0)
            {
                info.result = SymValue::def(inst.pc, fold(op, info.operands));
                stack.push_back(*info.result);
            }
        }
        summary.statements.push_back(std::move(info));
    }

    summary.consumed_depth = static_cast<unsigned>(next_entry);
    summary.unreachable_in_practice = next_entry > max_evm_stack;
    summary.exit_stack.assign(stack.rbegin(), stack.rend());

    if (summary.jump_target && summary.jump_target->constant &&
        fits_u64(*summary.jump_target->constant))
        summary.local_jump_target = static_cast<BlockId>(*summary.jump_target->constant);
    return summary;
}

SummaryMap summarize_program(const BytecodeProgram& program)
{
    SummaryMap result;
    for (const auto& [id, block] : program.blocks)
        result.emplace(id, summarize_block(block));
    return result;
}

std::set<PublicCallCandidate> detect_public_call_candidates(
    const BytecodeProgram& program, const SummaryMap& summaries)
{
    std::set<PublicCallCandidate> result;
    for (const auto& [id, block] : program.blocks)
    {
        if (block.terminator != TerminatorKind::conditional_jump)
            continue;
        const auto& summary = summaries.at(id);
        if (!summary.local_jump_target || !program.is_jump_target(*summary.local_jump_target))
            continue;

        // Follow at most two ISZEROs from the condition back to an EQ.
        auto cond = *summary.jump_condition;
        for (int hops = 0; hops <= 2; ++hops)
        {
            std::uint8_t op = 0;
            const auto* stmt = defining_statement(block, summary, cond, op);
            if (stmt == nullptr || cond.constant)
                break;
            if (op == OP_ISZERO)
            {
                cond = stmt->operands[0];
                continue;
            }
            if (op != OP_EQ)
                break;
            const auto& a = stmt->operands[0];
            const auto& b = stmt->operands[1];
            const SymValue* selector = nullptr;
            if (a.constant && !b.constant)
                selector = &a;
            else if (b.constant && !a.constant)
                selector = &b;
            if (selector != nullptr && *selector->constant <= u256{0xffffffff})
            {
                result.insert({id, static_cast<std::uint32_t>(*selector->constant),
                    *summary.local_jump_target, cond.id});
            }
            break;
        }
    }
    return result;
}

std::set<PrivateCallCandidate> detect_private_call_candidates(
    const BytecodeProgram& program, const SummaryMap& summaries)
{
    std::set<PrivateCallCandidate> result;
    for (const auto& [id, block] : program.blocks)
    {
        if (block.terminator != TerminatorKind::jump)
            continue;
        const auto& summary = summaries.at(id);
        if (!summary.local_jump_target)
            continue;
        for (const auto& v : summary.exit_stack)
        {
            if (!v.is_def() || !v.constant || !program.is_jump_target(*v.constant))
                continue;
            const auto idx = summary.statement_index(v.id);
            if (idx && is_push(block.instructions[*idx].opcode))
                result.insert({id, static_cast<BlockId>(*v.constant), v.id});
        }
    }
    return result;
}

std::set<BlockId> detect_private_returns(
    const BytecodeProgram& program, const SummaryMap& summaries)
{
    std::set<BlockId> result;
    for (const auto& [id, block] : program.blocks)
    {
        if (block.terminator != TerminatorKind::jump)
            continue;
        const auto& target = summaries.at(id).jump_target;
        if (target && target->is_entry())
            result.insert(id);
    }
    return result;
}

std::set<BlockId> detect_stack_balancing_blocks(const BytecodeProgram& program)
{
    std::set<BlockId> result;
    for (const auto& [id, block] : program.blocks)
    {
        if (block.terminator != TerminatorKind::jump)
            continue;
        const auto body_ok = std::all_of(block.instructions.begin(),
            block.instructions.end() - 1, [](const Instruction& inst) {
                return inst.opcode == OP_JUMPDEST || inst.opcode == OP_POP ||
                       is_swap(inst.opcode) || is_dup(inst.opcode);
            });
        if (body_ok)
            result.insert(id);
    }
    return result;
}

PatternFacts detect_patterns(const BytecodeProgram& program, const SummaryMap& summaries)
{
    return {
        detect_public_call_candidates(program, summaries),
        detect_private_call_candidates(program, summaries),
        detect_private_returns(program, summaries),
        detect_stack_balancing_blocks(program),
    };
}
}  // namespace evmlift
