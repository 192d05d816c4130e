// evmlift: context-sensitive EVM bytecode lifter
// Copyright 2026 The evmlift Authors.
// SPDX-License-Identifier: Apache-2.0

#include "support/fixtures.hpp"
#include "support/generator.hpp"

#include <evmlift/pipeline.hpp>
#include <evmlift/tac.hpp>

#include <gtest/gtest.h>

#include <regex>
#include <sstream>

using namespace evmlift;
using namespace evmlift::test;

namespace
{
constexpr const char* sample = R"(Begin block 0x58
prev=[0x50], succ=[0x72]
=================================
0x5a: v5a(0x77) = CONST
0x5e: v5e = SUB v1, v5a(0x77)
0x60: v60_0 = CALLPRIVATE v5e, UNKNOWN

Begin block 0x72
prev=[0x58, 0x72], succ=[]
=================================
0x72_0x0: v72_0 = PHI v5e, v60_0
0x73: STOP

)";

void expect_parse_error(const std::string& text, std::size_t line)
{
    try
    {
        parse_tac(text);
        ADD_FAILURE() << "accepted: " << text;
    }
    catch (const TacParseError& e)
    {
        EXPECT_EQ(e.line(), line) << e.what();
    }
}
}  // namespace

TEST(tac, render_operands)
{
    EXPECT_EQ(render_operand({"v5a", u256{0x77}}), "v5a(0x77)");
    EXPECT_EQ(render_operand({"v5e", std::nullopt}), "v5e");
    EXPECT_EQ(render_operand({std::string{unresolved_operand_name}, std::nullopt}), "UNKNOWN");
    EXPECT_TRUE((TacOperand{"UNKNOWN", std::nullopt}).is_unresolved());
}

TEST(tac, render_statements)
{
    EXPECT_EQ(render_statement({"0x9", std::nullopt, "JUMP", {{"v6", u256{0x128}}}}),
        "0x9: JUMP v6(0x128)");
    EXPECT_EQ(render_statement({"0x0", TacOperand{"v0", u256{0x11}}, "CONST", {}}),
        "0x0: v0(0x11) = CONST");
    EXPECT_EQ(render_statement({"0x73", std::nullopt, "STOP", {}}), "0x73: STOP");
}

TEST(tac, parse_sample)
{
    const auto program = parse_tac(sample);
    ASSERT_EQ(program.blocks.size(), 2u);
    const auto& b = program.blocks[0];
    EXPECT_EQ(b.id, 0x58u);
    EXPECT_EQ(b.preds, (std::vector<BlockId>{0x50}));
    EXPECT_EQ(b.succs, (std::vector<BlockId>{0x72}));
    ASSERT_EQ(b.statements.size(), 3u);
    EXPECT_EQ(b.statements[1].op, "SUB");
    EXPECT_EQ(b.statements[1].operands.size(), 2u);
    EXPECT_TRUE(b.statements[2].operands[1].is_unresolved());
    EXPECT_EQ(b.terminator_op(), "CALLPRIVATE");
    EXPECT_EQ(program.blocks[1].statements[0].pc_label, "0x72_0x0");
    EXPECT_EQ(program.blocks[1].required_successors(), 0u);
    EXPECT_EQ(render_tac(program), sample);
}

TEST(tac, successor_counts_by_terminator)
{
    TacBlock b;
    b.statements.push_back({"0x1", std::nullopt, "JUMPI", {}});
    EXPECT_EQ(b.required_successors(), 2u);
    EXPECT_EQ(b.allowed_successors(), 2u);
    b.statements.back().op = "RETURNPRIVATE";
    EXPECT_EQ(b.allowed_successors(), 0u);
    b.statements.back().op = "REVERT";
    EXPECT_EQ(b.required_successors(), 0u);
    b.statements.back().op = "JUMP";
    EXPECT_EQ(b.required_successors(), 1u);
    EXPECT_EQ(b.allowed_successors(), 1u);
}

TEST(tac, rejects_malformed_text)
{
    expect_parse_error("Begin block 0x1\nprev=[], succ=[]\n", 3);
    expect_parse_error("Begin block 0x0A\n", 1);
    expect_parse_error("Begin block 0x1\nprev=[], succ=[]\n=================================\n0x1 STOP\n\n", 4);
    expect_parse_error(
        "Begin block 0x5\nprev=[], succ=[]\n=================================\n\n"
        "Begin block 0x1\nprev=[], succ=[]\n=================================\n\n",
        5);
    expect_parse_error("Begin block 0x1\nprev=[0x01], succ=[]\n", 2);
    expect_parse_error("garbage\n", 1);
}

// Lifted output matches the line grammar and survives a parse/render cycle.
TEST(tac, generated_programs_round_trip)
{
    const std::regex header{R"(Begin block 0x(0|[1-9a-f][0-9a-f]*))"};
    const std::regex edges{R"(prev=\[((0x[0-9a-f]+)(, 0x[0-9a-f]+)*)?\], succ=\[((0x[0-9a-f]+)(, 0x[0-9a-f]+)*)?\])"};
    const std::regex statement{
        R"(0x[0-9a-f]+(_0x[0-9a-f]+)?: ((v[0-9a-f_]+(\(0x[0-9a-f]+\))?) = )?[A-Z0-9]+( ((v[0-9a-f_]+(\(0x[0-9a-f]+\))?)|UNKNOWN)(, ((v[0-9a-f_]+(\(0x[0-9a-f]+\))?)|UNKNOWN))*)?)"};
    for (std::uint64_t seed = 0; seed < 40; ++seed)
    {
        const auto result = run_pipeline(generate_program(seed).code, {});
        const auto text = render_tac(result.tac);
        std::istringstream lines{text};
        std::string line;
        int state = 0;
        while (std::getline(lines, line))
        {
            if (state == 0)
                ASSERT_TRUE(std::regex_match(line, header)) << line;
            else if (state == 1)
                ASSERT_TRUE(std::regex_match(line, edges)) << line;
            else if (state == 2)
                ASSERT_EQ(line, std::string(33, '='));
            else if (line.empty())
            {
                state = 0;
                continue;
            }
            else
                ASSERT_TRUE(std::regex_match(line, statement)) << line;
            state = std::min(state + 1, 3);
        }
        const auto parsed = parse_tac(text);
        EXPECT_EQ(parsed.blocks, result.tac.blocks) << "seed " << seed;
        EXPECT_EQ(render_tac(parsed), text) << "seed " << seed;
    }
}
