// evmlift: context-sensitive EVM bytecode lifter
// Copyright 2026 The evmlift Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmlift/lifter.hpp>
#include <evmlift/opcodes.hpp>

#include <algorithm>
#include <deque>
#include <map>

namespace evmlift
{
namespace
{
std::string value_name(std::uint64_t pc)
{
    return "v" + to_hex_digits(pc);
}

TacOperand operand_of(const AbstractValue& v)
{
    if (v.is_placeholder())
        return {std::string(unresolved_operand_name), std::nullopt};
    return {value_name(v.site), v.constant};
}

struct BlockView
{
    /// Slot-wise union of inputs across contexts; short stacks add placeholders.
    AbstractStack input;
    AbstractStack output;
    std::set<BlockId> targets;
};

std::map<BlockId, BlockView> merge_contexts(const AnalysisState& state)
{
    std::map<BlockId, BlockView> views;
    for (const auto& [key, node] : state.nodes)
    {
        auto& view = views[key.block];
        if (view.input.size() < node.input.size())
            view.input.resize(node.input.size());
        for (std::size_t k = 0; k < node.input.size(); ++k)
            view.input[k].merge(node.input[k]);
        if (view.output.size() < node.output.size())
            view.output.resize(node.output.size());
        for (std::size_t k = 0; k < node.output.size(); ++k)
            view.output[k].merge(node.output[k]);
    }
    // Slots some context did not supply at all.
    for (const auto& [key, node] : state.nodes)
    {
        auto& view = views[key.block];
        for (std::size_t k = node.input.size(); k < view.input.size(); ++k)
            view.input[k].insert(AbstractValue::entry_slot(key.block, static_cast<std::uint32_t>(k)));
    }
    for (const auto& f : state.block_jump_target)
        views[f.from].targets.insert(f.to);
    return views;
}

class InconsistentBlock
{};

class BlockLifter
{
public:
    BlockLifter(BlockId id, const BlockView& view) : id_{id}, view_{view} {}

    TacOperand operand(const SymValue& s)
    {
        if (s.is_def())
            return {value_name(s.id), s.constant};
        const auto k = s.id;
        if (k >= view_.input.size())
            return {std::string(unresolved_operand_name), std::nullopt};
        const auto& values = view_.input[k];
        const auto placeholders = static_cast<std::size_t>(std::count_if(
            values.begin(), values.end(), [](const AbstractValue& v) { return v.is_placeholder(); }));
        if (placeholders == values.size())
            return {std::string(unresolved_operand_name), std::nullopt};
        if (placeholders != 0)
            throw InconsistentBlock{};
        if (values.size() == 1)
            return operand_of(*values.begin());
        phi_slots_.insert(k);
        return {phi_name(k), std::nullopt};
    }

    std::string phi_name(std::uint64_t k) const { return value_name(id_) + "_" + to_hex_digits(k); }

    std::vector<TacStatement> phis() const
    {
        std::vector<TacStatement> out;
        for (const auto k : phi_slots_)
        {
            TacStatement s;
            s.pc_label = to_hex(id_) + "_" + to_hex(k);
            s.def = TacOperand{phi_name(k), std::nullopt};
            s.op = "PHI";
            for (const auto& v : view_.input[k])
                s.operands.push_back(operand_of(v));
            out.push_back(std::move(s));
        }
        return out;
    }

    bool has_phi(std::uint64_t k) const { return phi_slots_.contains(k); }

private:
    BlockId id_;
    const BlockView& view_;
    std::set<std::uint64_t> phi_slots_;
};

struct CallShape
{
    std::size_t continuation_slot = 0;
    std::vector<BlockId> continuations;
};

/// Topmost exit slot holding a continuation of the call.
std::optional<CallShape> find_call_shape(BlockId id, const BlockView& view,
    const BytecodeProgram& program, const ConfirmedFacts& facts)
{
    const bool confirmed = facts.is_private_caller(id);
    for (std::size_t i = 0; i < view.output.size(); ++i)
    {
        const auto& values = view.output[i];
        if (values.empty())
            continue;
        bool all_targets = true;
        bool pushes_confirmed = false;
        CallShape shape{i, {}};
        for (const auto& v : values)
        {
            if (v.is_placeholder() || !v.constant || !program.is_jump_target(*v.constant))
            {
                all_targets = false;
                continue;
            }
            const auto c = static_cast<BlockId>(*v.constant);
            shape.continuations.push_back(c);
            if (facts.pushes_continuation(id, c))
                pushes_confirmed = true;
        }
        if (confirmed ? pushes_confirmed : all_targets)
        {
            if (confirmed)
            {
                std::erase_if(shape.continuations,
                    [&](BlockId c) { return !facts.pushes_continuation(id, c); });
            }
            std::sort(shape.continuations.begin(), shape.continuations.end());
            shape.continuations.erase(
                std::unique(shape.continuations.begin(), shape.continuations.end()),
                shape.continuations.end());
            return shape;
        }
    }
    return std::nullopt;
}
}  // namespace

TacProgram lift(const AnalysisState& state, const BytecodeProgram& program,
    const SummaryMap& summaries, const ConfirmedFacts& facts)
{
    const auto views = merge_contexts(state);

    std::set<BlockId> private_entries;
    std::set<BlockId> continuations;
    for (const auto& [caller, cont] : facts.private_calls)
    {
        continuations.insert(cont);
        if (const auto it = summaries.find(caller); it != summaries.end() && it->second.local_jump_target)
            private_entries.insert(*it->second.local_jump_target);
    }

    std::map<BlockId, std::set<BlockId>> edges;
    for (const auto& [from, to] : state.edge_projection())
        edges[from].insert(to);

    TacProgram tac;
    for (const auto& [id, view] : views)
    {
        const auto* block = program.find_block(id);
        if (block == nullptr)
            continue;
        const auto& summary = summaries.at(id);

        bool is_call = false;
        bool is_return = false;
        std::optional<CallShape> call;
        if (block->terminator == TerminatorKind::jump)
        {
            const bool to_private = !view.targets.empty() &&
                std::all_of(view.targets.begin(), view.targets.end(),
                    [&](BlockId t) { return private_entries.contains(t); });
            if (facts.is_private_caller(id) || to_private)
            {
                call = find_call_shape(id, view, program, facts);
                is_call = call.has_value();
            }
            if (!is_call && facts.is_private_return(id) && !view.targets.empty())
            {
                is_return = std::all_of(view.targets.begin(), view.targets.end(),
                    [&](BlockId t) { return continuations.contains(t); });
            }
        }

        BlockLifter lifter{id, view};
        TacBlock out;
        out.id = id;
        try
        {
            std::vector<TacStatement> body;
            for (std::size_t i = 0; i < block->instructions.size(); ++i)
            {
                const auto& inst = block->instructions[i];
                const auto& info = summary.statements[i];
                const auto op = inst.opcode;
                if (op == OP_JUMPDEST || op == OP_POP || is_dup(op) || is_swap(op))
                    continue;

                TacStatement s;
                s.pc_label = to_hex(inst.pc);
                if (is_push(op))
                {
                    s.def = TacOperand{value_name(inst.pc), inst.pushed_value.value_or(0)};
                    s.op = "CONST";
                }
                else if (op == OP_JUMP && is_call)
                {
                    s.op = "CALLPRIVATE";
                    s.operands.push_back(lifter.operand(info.operands.at(0)));
                    for (std::size_t k = 0; k <= call->continuation_slot; ++k)
                        s.operands.push_back(lifter.operand(summary.exit_slot(k)));
                }
                else if (op == OP_JUMP && is_return)
                {
                    s.op = "RETURNPRIVATE";
                    s.operands.push_back(lifter.operand(info.operands.at(0)));
                }
                else
                {
                    s.op = std::string(inst.name());
                    for (const auto& v : info.operands)
                        s.operands.push_back(lifter.operand(v));
                    if (info.result)
                        s.def = TacOperand{value_name(inst.pc), info.result->constant};
                }
                body.push_back(std::move(s));
            }
            out.statements = lifter.phis();
            if (is_call && !(block->last().pc == id && lifter.has_phi(0)))
                body.back().def = TacOperand{value_name(block->last().pc) + "_0", std::nullopt};
            out.statements.insert(out.statements.end(), std::make_move_iterator(body.begin()),
                std::make_move_iterator(body.end()));
        }
        catch (const InconsistentBlock&)
        {
            tac.dropped_blocks.insert(id);
            continue;
        }

        if (is_call)
            out.succs = call->continuations;
        else if (!is_return)
        {
            if (const auto it = edges.find(id); it != edges.end())
                out.succs.assign(it->second.begin(), it->second.end());
        }
        tac.blocks.push_back(std::move(out));
    }

    std::map<BlockId, std::set<BlockId>> preds;
    for (const auto& b : tac.blocks)
        for (const auto s : b.succs)
            preds[s].insert(b.id);
    for (auto& b : tac.blocks)
    {
        if (const auto it = preds.find(b.id); it != preds.end())
            b.preds.assign(it->second.begin(), it->second.end());
    }
    return tac;
}

std::vector<TacFunction> reconstruct_functions(const TacProgram& tac,
    const SummaryMap& summaries, const ConfirmedFacts& facts, const PatternFacts& candidates)
{
    std::map<BlockId, TacFunction> functions;
    for (const auto& [block, target] : facts.public_calls)
    {
        auto& f = functions[target];
        f.entry = target;
        f.kind = TacFunction::Kind::public_function;
        for (const auto& c : candidates.public_call_candidates)
            if (c.block == block && c.target == target)
                f.selector = c.selector;
    }
    for (const auto& [caller, cont] : facts.private_calls)
    {
        const auto it = summaries.find(caller);
        if (it == summaries.end() || !it->second.local_jump_target)
            continue;
        const auto entry = *it->second.local_jump_target;
        if (!functions.contains(entry))
            functions[entry] = TacFunction{entry, TacFunction::Kind::private_function, {}, {}};
    }
    if (functions.empty())
        functions[0] = TacFunction{0, TacFunction::Kind::private_function, {}, {}};

    std::map<BlockId, std::set<BlockId>> owners;
    for (auto& [entry, f] : functions)
    {
        std::deque<BlockId> work{entry};
        while (!work.empty())
        {
            const auto b = work.front();
            work.pop_front();
            if (!f.members.insert(b).second)
                continue;
            owners[b].insert(entry);
            const auto* block = tac.find(b);
            if (block == nullptr)
                continue;
            for (const auto s : block->succs)
                if (!functions.contains(s) && !f.members.contains(s))
                    work.push_back(s);
        }
    }

    TacFunction shared{0, TacFunction::Kind::shared, {}, {}};
    for (const auto& [b, who] : owners)
    {
        if (who.size() < 2 || functions.contains(b))
            continue;
        for (const auto e : who)
            functions[e].members.erase(b);
        shared.members.insert(b);
    }

    std::vector<TacFunction> out;
    for (auto& [entry, f] : functions)
        out.push_back(std::move(f));
    if (!shared.members.empty())
    {
        shared.entry = *shared.members.begin();
        out.push_back(std::move(shared));
    }
    return out;
}
}  // namespace evmlift
