// evmlift: context-sensitive EVM bytecode lifter
// Copyright 2026 The evmlift Authors.
// SPDX-License-Identifier: Apache-2.0

#include "support/assembler.hpp"
#include "support/fixtures.hpp"
#include "support/generator.hpp"

#include <evmlift/global_analysis.hpp>
#include <evmlift/interpreter.hpp>
#include <evmlift/preanalysis.hpp>

#include <gtest/gtest.h>

#include <map>

using namespace evmlift;
using namespace evmlift::test;

namespace
{
AnalysisState analyze_with(const BytecodeProgram& program, const ConfirmedFacts& facts,
    SchemeConfig scheme = {}, AnalysisLimits limits = {}, WorklistOrder order = WorklistOrder::fifo)
{
    const auto summaries = summarize_program(program);
    return analyze(program, summaries, facts, {scheme, limits, order});
}

ConfirmedFacts raw_facts(const BytecodeProgram& program)
{
    return facts_from_candidates(detect_patterns(program, summarize_program(program)));
}

// Order-independent view of a fixpoint: (context, block) -> input stack.
std::map<std::pair<Context, BlockId>, AbstractStack> keyed_inputs(const AnalysisState& s)
{
    std::map<std::pair<Context, BlockId>, AbstractStack> out;
    for (const auto& [key, node] : s.nodes)
        out.emplace(std::pair{s.context(key.ctx), key.block}, node.input);
    return out;
}
}  // namespace

TEST(global_analysis, transfer_resolves_entry_reads_from_input)
{
    // e0 + 5 stays; the jump target is the caller-supplied e1.
    const auto program = load_program(assemble("JUMPDEST PUSH1 0x05 ADD SWAP1 JUMP"));
    const auto summary = summarize_block(program.blocks.at(0));
    const AbstractStack input{{AbstractValue::def_site(0x100)},
        {AbstractValue::def_site(0x200, u256{0x40}), AbstractValue::def_site(0x300, u256{0x50})}};
    const auto r = transfer_block(summary, input, 100);
    ASSERT_EQ(r.output.size(), 1u);
    EXPECT_EQ(r.output[0], (ValueSet{AbstractValue::def_site(3)}));
    EXPECT_EQ(r.targets, input[1]);
    EXPECT_FALSE(r.unresolved_operand);
}

TEST(global_analysis, transfer_marks_missing_operands)
{
    const auto program = load_program(assemble("JUMPDEST PUSH1 0x05 ADD SWAP1 JUMP"));
    const auto summary = summarize_block(program.blocks.at(0));
    const auto r = transfer_block(summary, {}, 100);
    EXPECT_TRUE(r.unresolved_operand);
    EXPECT_EQ(r.targets, (ValueSet{AbstractValue::entry_slot(0, 1)}));
    EXPECT_EQ(r.output.size(), 1u);
}

TEST(global_analysis, transfer_truncates_at_max_depth)
{
    const auto program = load_program(assemble("JUMPDEST PUSH1 0x01 PUSH1 0x02 STOP"));
    const auto summary = summarize_block(program.blocks.at(0));
    AbstractStack input(6, ValueSet{AbstractValue::def_site(0x99)});
    EXPECT_EQ(transfer_block(summary, input, 100).output.size(), 8u);
    EXPECT_EQ(transfer_block(summary, input, 4).output.size(), 4u);
}

TEST(global_analysis, straight_line_reaches_fixpoint)
{
    const auto program = load_program(straight_line_program());
    const auto s = analyze_with(program, {});
    EXPECT_EQ(s.stop, StopCondition::fixpoint);
    EXPECT_EQ(s.reached_blocks(), (std::set<BlockId>{0}));
    EXPECT_TRUE(s.edge_projection().empty());
    EXPECT_EQ(s.contexts.size(), 1u);
}

TEST(global_analysis, masking_call_edges)
{
    const auto program = load_program(masking_call_program());
    const auto s = analyze_with(program, raw_facts(program));
    EXPECT_EQ(s.stop, StopCondition::fixpoint);
    EXPECT_TRUE(s.unresolved_targets.empty());
    EXPECT_EQ(s.edge_projection(),
        (std::set<BlockEdge>{{0x0, 0x128}, {0x128, 0x109}, {0x109, 0x132}}));
}

TEST(global_analysis, shallower_predecessor_leaves_placeholder)
{
    // One path reaches b with an empty stack, the other with one value.
    const auto program = load_program(assemble(
        "PUSH0 CALLDATALOAD PUSH1 @b JUMPI PUSH1 0x07 PUSH1 @b JUMP b: JUMPDEST STOP"));
    for (const auto order : {WorklistOrder::fifo, WorklistOrder::lifo})
    {
        const auto s = analyze_with(program, {}, {}, {}, order);
        const auto& node = s.nodes.at({0, 0xa});
        ASSERT_EQ(node.input.size(), 1u);
        EXPECT_EQ(node.input[0], (ValueSet{AbstractValue::def_site(5, u256{7}),
                                     AbstractValue::entry_slot(0xa, 0)}));
        EXPECT_EQ(node.min_input_depth, 0u);
    }
}

TEST(global_analysis, fact_limit_stops_early)
{
    const auto program = load_program(call_fanout_program(6));
    const auto facts = raw_facts(program);
    const SchemeConfig transactional{Scheme::transactional, 8};
    AnalysisLimits limits;
    limits.fact_limit = 1000;
    const auto limited = analyze_with(program, facts, transactional, limits);
    EXPECT_EQ(limited.stop, StopCondition::fact_limit);
    EXPECT_GE(limited.fact_count, 1000u);

    const auto shrinking = analyze_with(program, facts, {Scheme::shrinking, 8}, limits);
    EXPECT_EQ(shrinking.stop, StopCondition::fixpoint);
}

TEST(global_analysis, past_deadline_times_out)
{
    const auto program = load_program(masking_call_program());
    AnalysisLimits limits;
    limits.deadline = std::chrono::steady_clock::now() - std::chrono::seconds{1};
    const auto s = analyze_with(program, {}, {}, limits);
    EXPECT_EQ(s.stop, StopCondition::timeout);
    EXPECT_EQ(to_string(s.stop), "timeout");
}

TEST(global_analysis, fact_count_matches_relations)
{
    const auto program = load_program(chained_calls_program());
    const auto s = analyze_with(program, raw_facts(program));
    EXPECT_EQ(s.fact_count, s.block_input().size() + s.block_output().size() +
                                s.block_jump_target.size() + s.global_block_edge.size());
}

// The fixpoint does not depend on worklist order.
TEST(global_analysis, worklist_order_independent)
{
    for (std::uint64_t seed = 0; seed < 40; ++seed)
    {
        const auto program = load_program(generate_program(seed).code);
        const auto facts = raw_facts(program);
        const auto a = analyze_with(program, facts, {}, {}, WorklistOrder::fifo);
        const auto b = analyze_with(program, facts, {}, {}, WorklistOrder::lifo);
        ASSERT_EQ(a.stop, StopCondition::fixpoint);
        EXPECT_EQ(a.edge_projection(), b.edge_projection()) << "seed " << seed;
        EXPECT_EQ(keyed_inputs(a), keyed_inputs(b)) << "seed " << seed;
        EXPECT_EQ(a.fact_count, b.fact_count) << "seed " << seed;
    }
}

// Every edge a concrete run takes is in the analysis edge projection.
TEST(global_analysis, concrete_edges_are_covered)
{
    for (std::uint64_t seed = 0; seed < 60; ++seed)
    {
        const auto generated = generate_program(seed);
        const auto program = load_program(generated.code);
        const auto s = analyze_with(program, raw_facts(program));
        ASSERT_EQ(s.stop, StopCondition::fixpoint);
        if (!s.unresolved_targets.empty())
            continue;
        const auto oracle = enumerate_edges(program, generated.env);
        const auto projection = s.edge_projection();
        for (const auto& e : oracle.edges)
            EXPECT_TRUE(projection.contains(e))
                << "seed " << seed << " edge " << to_hex(e.first) << "->" << to_hex(e.second);
    }
}
