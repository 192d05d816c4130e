// evmlift: context-sensitive EVM bytecode lifter
// Copyright 2026 The evmlift Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <evmlift/bytecode.hpp>
#include <evmlift/context.hpp>
#include <evmlift/local_analysis.hpp>

#include <chrono>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

namespace evmlift
{
/// A virtual variable: the instruction that defined a value, or the stack
/// position at entry to a block when no predecessor supplied one.
struct AbstractValue
{
    enum class Kind : std::uint8_t
    {
        def_site,
        entry_slot,
    };

    Kind kind = Kind::def_site;
    /// Def-site pc, or the block for an entry slot.
    std::uint64_t site = 0;
    /// Slot index for entry slots; zero otherwise.
    std::uint32_t index = 0;
    std::optional<u256> constant;

    static AbstractValue def_site(std::uint64_t pc, std::optional<u256> c = std::nullopt)
    {
        return {Kind::def_site, pc, 0, std::move(c)};
    }
    static AbstractValue entry_slot(BlockId block, std::uint32_t index)
    {
        return {Kind::entry_slot, block, index, std::nullopt};
    }

    bool is_placeholder() const noexcept { return kind == Kind::entry_slot; }

    friend bool operator==(const AbstractValue& a, const AbstractValue& b) noexcept
    {
        return a.kind == b.kind && a.site == b.site && a.index == b.index;
    }
    friend std::strong_ordering operator<=>(const AbstractValue& a, const AbstractValue& b) noexcept
    {
        if (const auto c = a.kind <=> b.kind; c != 0)
            return c;
        if (const auto c = a.site <=> b.site; c != 0)
            return c;
        return a.index <=> b.index;
    }
};

/// Small sorted set of abstract values.
class ValueSet
{
public:
    ValueSet() = default;
    ValueSet(std::initializer_list<AbstractValue> values);

    /// Returns true when the value was not present.
    bool insert(const AbstractValue& v);
    /// Returns the number of values added.
    std::size_t merge(const ValueSet& other);
    bool contains(const AbstractValue& v) const;

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

    friend bool operator==(const ValueSet&, const ValueSet&) = default;

private:
    std::vector<AbstractValue> values_;
};

/// Slot 0 is the top of the stack.
using AbstractStack = std::vector<ValueSet>;

struct TransferResult
{
    AbstractStack output;
    ValueSet targets;
    /// An instruction operand read a slot no predecessor supplied.
    bool unresolved_operand = false;
};

/// Applies a block summary pointwise over value sets. Output is truncated at
/// max_stack_depth; reads past the input surface as entry-slot placeholders.
TransferResult transfer_block(const BlockSummary& summary, const AbstractStack& input,
    unsigned max_stack_depth);

struct AnalysisLimits
{
    /// Tuple budget across the four core relations.
    std::optional<std::size_t> fact_limit;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    unsigned max_stack_depth = 100;

    static AnalysisLimits with_timeout(double seconds);
};

enum class StopCondition
{
    fixpoint,
    fact_limit,
    timeout,
};

std::string_view to_string(StopCondition s) noexcept;

enum class WorklistOrder
{
    fifo,
    lifo,
};

using ContextId = std::uint32_t;

struct NodeKey
{
    ContextId ctx = 0;
    BlockId block = 0;

    friend auto operator<=>(const NodeKey&, const NodeKey&) = default;
};

struct NodeState
{
    AbstractStack input;
    AbstractStack output;
    /// Shallowest stack any predecessor delivered.
    std::size_t min_input_depth = 0;
};

struct JumpTargetFact
{
    ContextId ctx = 0;
    BlockId from = 0;
    AbstractValue value;
    BlockId to = 0;

    friend auto operator<=>(const JumpTargetFact&, const JumpTargetFact&) = default;
};

struct EdgeFact
{
    ContextId from_ctx = 0;
    BlockId from = 0;
    ContextId to_ctx = 0;
    BlockId to = 0;

    friend auto operator<=>(const EdgeFact&, const EdgeFact&) = default;
};

/// Flattened BlockInput / BlockOutput tuple.
struct StackFact
{
    ContextId ctx = 0;
    BlockId block = 0;
    std::uint32_t index = 0;
    AbstractValue value;

    friend auto operator<=>(const StackFact&, const StackFact&) = default;
};

struct AnalysisState
{
    /// Interned contexts; ContextId indexes this vector. Entry 0 is <Null|[]>.
    std::vector<Context> contexts;
    std::map<NodeKey, NodeState> nodes;
    std::set<JumpTargetFact> block_jump_target;
    std::set<EdgeFact> global_block_edge;
    std::size_t fact_count = 0;
    StopCondition stop = StopCondition::fixpoint;

    /// (node, target value) pairs whose target had no known constant.
    std::set<std::pair<NodeKey, AbstractValue>> unresolved_targets;
    /// (node, constant) pairs whose target constant was not a jump destination.
    std::set<std::pair<NodeKey, u256>> invalid_targets;
    std::set<NodeKey> unresolved_operand_nodes;
    std::size_t transfers = 0;

    const Context& context(ContextId id) const { return contexts.at(id); }

    std::vector<StackFact> block_input() const;
    std::vector<StackFact> block_output() const;

    /// Block ids appearing in any analyzed (context, block) pair.
    std::set<BlockId> reached_blocks() const;
    /// (from, to) projection of global_block_edge.
    std::set<BlockEdge> edge_projection() const;
};

struct AnalysisOptions
{
    SchemeConfig scheme;
    AnalysisLimits limits;
    WorklistOrder order = WorklistOrder::fifo;
};

/// Context-sensitive worklist fixpoint from <Null|[]> at block 0.
AnalysisState analyze(const BytecodeProgram& program, const SummaryMap& summaries,
    const ConfirmedFacts& facts, const AnalysisOptions& options);
}  // namespace evmlift
