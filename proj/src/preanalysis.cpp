// evmlift: context-sensitive EVM bytecode lifter
// Copyright 2026 The evmlift Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmlift/preanalysis.hpp>

#include <map>

namespace evmlift
{
ConfirmedFacts facts_from_candidates(const PatternFacts& candidates)
{
    ConfirmedFacts facts;
    for (const auto& c : candidates.public_call_candidates)
        facts.public_calls.emplace(c.block, c.target);
    for (const auto& c : candidates.private_call_candidates)
        facts.private_calls.emplace(c.caller, c.continuation);
    facts.private_returns = candidates.private_returns;
    return facts;
}

AnalysisState run_preanalysis(const BytecodeProgram& program, const SummaryMap& summaries,
    const PatternFacts& candidates, unsigned depth, std::optional<std::size_t> limit,
    const AnalysisLimits& limits)
{
    AnalysisOptions options;
    options.scheme = {Scheme::shrinking, depth};
    options.limits = limits;
    options.limits.fact_limit = limit;
    return analyze(program, summaries, facts_from_candidates(candidates), options);
}

std::set<BlockEdge> filter_private_calls(
    const std::set<PrivateCallCandidate>& candidates, const AnalysisState& pre)
{
    std::set<std::pair<std::uint64_t, BlockId>> used;
    for (const auto& f : pre.block_jump_target)
    {
        if (!f.value.is_placeholder())
            used.emplace(f.value.site, f.to);
    }

    std::set<BlockEdge> kept;
    for (const auto& c : candidates)
    {
        if (used.contains({c.push_pc, c.continuation}))
            kept.emplace(c.caller, c.continuation);
    }
    return kept;
}

namespace
{
const ValueSet empty_set;

const ValueSet& operand_values(const NodeState& node, const SymValue& s, ValueSet& scratch)
{
    if (s.is_def())
    {
        scratch = {AbstractValue::def_site(s.id, s.constant)};
        return scratch;
    }
    return s.id < node.input.size() ? node.input[s.id] : empty_set;
}

bool has_constant(const ValueSet& set, const u256& c)
{
    for (const auto& v : set)
    {
        if (v.constant && *v.constant == c)
            return true;
    }
    return false;
}

bool intersects(const ValueSet& set, const std::set<std::uint64_t>& sites)
{
    for (const auto& v : set)
    {
        if (!v.is_placeholder() && sites.contains(v.site))
            return true;
    }
    return false;
}
}  // namespace

std::set<std::uint64_t> selector_values(
    const BytecodeProgram& program, const SummaryMap& summaries, const AnalysisState& pre)
{
    const u256 shift_bits = 0xe0;
    const u256 divisor = u256{1} << 224;
    const u256 mask = 0xffffffff;

    std::set<std::uint64_t> calldata0;
    std::set<std::uint64_t> selectors;
    ValueSet s0, s1;

    for (bool changed = true; changed;)
    {
        changed = false;
        for (const auto& [key, node] : pre.nodes)
        {
            const auto& block = program.blocks.at(key.block);
            const auto& summary = summaries.at(key.block);
            for (std::size_t i = 0; i < summary.statements.size(); ++i)
            {
                const auto& stmt = summary.statements[i];
                if (!stmt.result || stmt.result->constant)
                    continue;
                const auto pc = stmt.result->id;
                const auto op = block.instructions[i].opcode;
                bool hit = false;
                if (op == OP_CALLDATALOAD)
                {
                    if (!calldata0.contains(pc) &&
                        has_constant(operand_values(node, stmt.operands[0], s0), 0))
                    {
                        calldata0.insert(pc);
                        changed = true;
                    }
                    continue;
                }
                if (selectors.contains(pc))
                    continue;
                if (op == OP_SHR)
                {
                    hit = has_constant(operand_values(node, stmt.operands[0], s0), shift_bits) &&
                          intersects(operand_values(node, stmt.operands[1], s1), calldata0);
                }
                else if (op == OP_DIV)
                {
                    hit = intersects(operand_values(node, stmt.operands[0], s0), calldata0) &&
                          has_constant(operand_values(node, stmt.operands[1], s1), divisor);
                }
                else if (op == OP_AND)
                {
                    const auto& a = operand_values(node, stmt.operands[0], s0);
                    const auto& b = operand_values(node, stmt.operands[1], s1);
                    hit = (has_constant(a, mask) && intersects(b, selectors)) ||
                          (has_constant(b, mask) && intersects(a, selectors));
                }
                if (hit)
                {
                    selectors.insert(pc);
                    changed = true;
                }
            }
        }
    }
    return selectors;
}

std::set<BlockEdge> filter_public_calls(const BytecodeProgram& program,
    const SummaryMap& summaries, const std::set<PublicCallCandidate>& candidates,
    const AnalysisState& pre)
{
    std::set<BlockEdge> kept;
    if (candidates.empty())
        return kept;
    const auto selectors = selector_values(program, summaries, pre);
    if (selectors.empty())
        return kept;

    ValueSet scratch;
    for (const auto& c : candidates)
    {
        const auto& summary = summaries.at(c.block);
        const auto idx = summary.statement_index(c.eq_pc);
        if (!idx)
            continue;
        const auto& stmt = summary.statements[*idx];
        for (auto it = pre.nodes.lower_bound({0, 0}); it != pre.nodes.end(); ++it)
        {
            if (it->first.block != c.block)
                continue;
            bool found = false;
            for (const auto& operand : stmt.operands)
            {
                if (!operand.constant &&
                    intersects(operand_values(it->second, operand, scratch), selectors))
                    found = true;
            }
            if (found)
            {
                kept.emplace(c.block, c.target);
                break;
            }
        }
    }
    return kept;
}

std::set<BlockEdge> compute_important_edges(const AnalysisState& pre)
{
    const auto imprecise = [](const AbstractStack& stack, std::size_t i) {
        return i < stack.size() && stack[i].size() >= 2;
    };

    std::map<NodeKey, std::vector<NodeKey>> predecessors;
    for (const auto& e : pre.global_block_edge)
        predecessors[{e.to_ctx, e.to}].push_back({e.from_ctx, e.from});

    const auto input_from_previous = [&](const NodeKey& to, std::size_t i) {
        const auto it = predecessors.find(to);
        if (it == predecessors.end())
            return false;
        for (const auto& prev : it->second)
        {
            const auto n = pre.nodes.find(prev);
            if (n != pre.nodes.end() && imprecise(n->second.output, i))
                return true;
        }
        return false;
    };

    std::set<BlockEdge> important;
    for (const auto& e : pre.global_block_edge)
    {
        const auto to = pre.nodes.find({e.to_ctx, e.to});
        const auto from = pre.nodes.find({e.from_ctx, e.from});
        if (to == pre.nodes.end() || from == pre.nodes.end())
            continue;
        for (std::size_t i = 0; i < to->second.input.size(); ++i)
        {
            if (!imprecise(to->second.input, i))
                continue;
            if (input_from_previous(to->first, i))
                continue;
            if (imprecise(from->second.output, i))
                continue;
            important.emplace(e.from, e.to);
            break;
        }
    }
    return important;
}

ConfirmedFacts confirm_facts(const BytecodeProgram& program, const SummaryMap& summaries,
    const PatternFacts& candidates, const AnalysisState& pre)
{
    ConfirmedFacts facts;
    facts.public_calls =
        filter_public_calls(program, summaries, candidates.public_call_candidates, pre);
    facts.private_calls = filter_private_calls(candidates.private_call_candidates, pre);
    facts.private_returns = candidates.private_returns;
    facts.important_edges = compute_important_edges(pre);
    return facts;
}
}  // namespace evmlift
