// evmlift: context-sensitive EVM bytecode lifter
// Copyright 2026 The evmlift Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmlift/global_analysis.hpp>

#include <algorithm>
#include <deque>

namespace evmlift
{
ValueSet::ValueSet(std::initializer_list<AbstractValue> values)
{
    for (const auto& v : values)
        insert(v);
}

bool ValueSet::insert(const AbstractValue& v)
{
    const auto it = std::lower_bound(values_.begin(), values_.end(), v);
    if (it != values_.end() && *it == v)
        return false;
    values_.insert(it, v);
    return true;
}

std::size_t ValueSet::merge(const ValueSet& other)
{
    if (other.values_.empty())
        return 0;
    if (values_.empty())
    {
        values_ = other.values_;
        return values_.size();
    }
    std::vector<AbstractValue> merged;
    merged.reserve(values_.size() + other.values_.size());
    std::set_union(values_.begin(), values_.end(), other.values_.begin(), other.values_.end(),
        std::back_inserter(merged));
    const auto added = merged.size() - values_.size();
    values_ = std::move(merged);
    return added;
}

bool ValueSet::contains(const AbstractValue& v) const
{
    return std::binary_search(values_.begin(), values_.end(), v);
}

std::string_view to_string(StopCondition s) noexcept
{
    switch (s)
    {
    case StopCondition::fixpoint:
        return "fixpoint";
    case StopCondition::fact_limit:
        return "fact-limit";
    case StopCondition::timeout:
        return "timeout";
    }
    return "unknown";
}

AnalysisLimits AnalysisLimits::with_timeout(double seconds)
{
    AnalysisLimits limits;
    limits.deadline = std::chrono::steady_clock::now() +
                      std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                          std::chrono::duration<double>(seconds));
    return limits;
}

TransferResult transfer_block(
    const BlockSummary& summary, const AbstractStack& input, unsigned max_stack_depth)
{
    TransferResult result;
    const auto resolve = [&](const SymValue& s) -> ValueSet {
        if (s.is_def())
            return {AbstractValue::def_site(s.id, s.constant)};
        if (s.id < input.size() && !input[s.id].empty())
            return input[s.id];
        return {AbstractValue::entry_slot(summary.block, static_cast<std::uint32_t>(s.id))};
    };

    for (const auto& stmt : summary.statements)
    {
        for (const auto& op : stmt.operands)
        {
            if (op.is_entry() && (op.id >= input.size() || input[op.id].empty()))
                result.unresolved_operand = true;
        }
    }

    std::size_t out_len = summary.exit_stack.size();
    if (input.size() > summary.consumed_depth)
        out_len += input.size() - summary.consumed_depth;
    out_len = std::min<std::size_t>(out_len, max_stack_depth);

    result.output.reserve(out_len);
    for (std::size_t i = 0; i < out_len; ++i)
        result.output.push_back(resolve(summary.exit_slot(i)));

    if (summary.jump_target)
        result.targets = resolve(*summary.jump_target);
    return result;
}

std::vector<StackFact> AnalysisState::block_input() const
{
    std::vector<StackFact> out;
    for (const auto& [key, node] : nodes)
    {
        for (std::size_t i = 0; i < node.input.size(); ++i)
        {
            for (const auto& v : node.input[i])
                out.push_back({key.ctx, key.block, static_cast<std::uint32_t>(i), v});
        }
    }
    return out;
}

std::vector<StackFact> AnalysisState::block_output() const
{
    std::vector<StackFact> out;
    for (const auto& [key, node] : nodes)
    {
        for (std::size_t i = 0; i < node.output.size(); ++i)
        {
            for (const auto& v : node.output[i])
                out.push_back({key.ctx, key.block, static_cast<std::uint32_t>(i), v});
        }
    }
    return out;
}

std::set<BlockId> AnalysisState::reached_blocks() const
{
    std::set<BlockId> out;
    for (const auto& [key, node] : nodes)
        out.insert(key.block);
    return out;
}

std::set<BlockEdge> AnalysisState::edge_projection() const
{
    std::set<BlockEdge> out;
    for (const auto& e : global_block_edge)
        out.emplace(e.from, e.to);
    return out;
}

namespace
{
std::size_t tuple_count(const AbstractStack& stack)
{
    std::size_t n = 0;
    for (const auto& s : stack)
        n += s.size();
    return n;
}

class Analyzer
{
public:
    Analyzer(const BytecodeProgram& program, const SummaryMap& summaries,
        const ConfirmedFacts& facts, const AnalysisOptions& options)
      : program_{program}, summaries_{summaries}, facts_{facts}, options_{options}
    {}

    AnalysisState run()
    {
        const auto initial = intern(Context{});
        if (program_.find_block(0) != nullptr)
        {
            state_.nodes.try_emplace(NodeKey{initial, 0});
            enqueue({initial, 0});
        }

        while (!worklist_.empty())
        {
            if (options_.limits.fact_limit && state_.fact_count >= *options_.limits.fact_limit)
            {
                state_.stop = StopCondition::fact_limit;
                break;
            }
            if (options_.limits.deadline &&
                std::chrono::steady_clock::now() >= *options_.limits.deadline)
            {
                state_.stop = StopCondition::timeout;
                break;
            }
            NodeKey key;
            if (options_.order == WorklistOrder::fifo)
            {
                key = worklist_.front();
                worklist_.pop_front();
            }
            else
            {
                key = worklist_.back();
                worklist_.pop_back();
            }
            queued_.erase(key);
            process(key);
        }
        return std::move(state_);
    }

private:
    ContextId intern(const Context& ctx)
    {
        const auto [it, inserted] =
            ids_.try_emplace(ctx, static_cast<ContextId>(state_.contexts.size()));
        if (inserted)
            state_.contexts.push_back(ctx);
        return it->second;
    }

    void enqueue(const NodeKey& key)
    {
        if (queued_.insert(key).second)
            worklist_.push_back(key);
    }

    void process(const NodeKey& key)
    {
        ++state_.transfers;
        const auto& block = program_.blocks.at(key.block);
        const auto& summary = summaries_.at(key.block);

        auto& node = state_.nodes.at(key);
        auto result = transfer_block(summary, node.input, options_.limits.max_stack_depth);
        if (result.unresolved_operand)
            state_.unresolved_operand_nodes.insert(key);

        state_.fact_count -= tuple_count(node.output);
        node.output = std::move(result.output);
        state_.fact_count += tuple_count(node.output);

        if (summary.unreachable_in_practice)
            return;

        std::vector<BlockId> successors;
        if (block.terminator == TerminatorKind::jump ||
            block.terminator == TerminatorKind::conditional_jump)
        {
            for (const auto& v : result.targets)
            {
                if (!v.constant)
                {
                    state_.unresolved_targets.emplace(key, v);
                    continue;
                }
                if (!program_.is_jump_target(*v.constant))
                {
                    state_.invalid_targets.emplace(key, *v.constant);
                    continue;
                }
                const auto to = static_cast<BlockId>(*v.constant);
                if (state_.block_jump_target.insert({key.ctx, key.block, v, to}).second)
                    ++state_.fact_count;
                successors.push_back(to);
            }
        }
        if (const auto next = program_.fallthrough_of(block))
            successors.push_back(*next);

        // std::map insertions in propagate() keep this reference valid.
        const auto& output = node.output;
        for (const auto succ : successors)
        {
            const auto next_ctx = intern(
                next_context(state_.contexts[key.ctx], key.block, succ, facts_, options_.scheme));
            if (state_.global_block_edge.insert({key.ctx, key.block, next_ctx, succ}).second)
                ++state_.fact_count;
            if (propagate({next_ctx, succ}, output))
                enqueue({next_ctx, succ});
        }
    }

    bool propagate(const NodeKey& to, const AbstractStack& output)
    {
        const auto [it, inserted] = state_.nodes.try_emplace(to);
        auto& node = it->second;
        const auto depth = output.size();
        if (inserted)
        {
            node.input = output;
            node.min_input_depth = depth;
            state_.fact_count += tuple_count(output);
            return true;
        }

        std::size_t added = 0;
        for (std::size_t k = 0; k < depth; ++k)
        {
            if (k >= node.input.size())
            {
                node.input.emplace_back();
                if (node.min_input_depth <= k)
                    added += node.input[k].insert(
                        AbstractValue::entry_slot(to.block, static_cast<std::uint32_t>(k)));
            }
            added += node.input[k].merge(output[k]);
        }
        for (std::size_t k = depth; k < node.input.size(); ++k)
            added += node.input[k].insert(
                AbstractValue::entry_slot(to.block, static_cast<std::uint32_t>(k)));
        node.min_input_depth = std::min(node.min_input_depth, depth);
        state_.fact_count += added;
        return added != 0;
    }

    const BytecodeProgram& program_;
    const SummaryMap& summaries_;
    const ConfirmedFacts& facts_;
    const AnalysisOptions& options_;

    AnalysisState state_;
    std::unordered_map<Context, ContextId, ContextHash> ids_;
    std::deque<NodeKey> worklist_;
    std::set<NodeKey> queued_;
};
}  // namespace

AnalysisState analyze(const BytecodeProgram& program, const SummaryMap& summaries,
    const ConfirmedFacts& facts, const AnalysisOptions& options)
{
    return Analyzer{program, summaries, facts, options}.run();
}
}  // namespace evmlift
