// evmlift: context-sensitive EVM bytecode lifter
// Copyright 2026 The evmlift Authors.
// SPDX-License-Identifier: Apache-2.0

#include "support/assembler.hpp"

#include <evmlift/bytecode.hpp>
#include <evmlift/opcodes.hpp>

#include <gtest/gtest.h>

using namespace evmlift;
using evmlift::test::assemble;

TEST(bytecode, disassemble_push_immediates)
{
    const auto code = from_hex("6001600261ffff");
    const auto insts = disassemble(code);
    ASSERT_EQ(insts.size(), 3u);
    EXPECT_EQ(insts[0].pc, 0u);
    EXPECT_EQ(insts[1].pc, 2u);
    EXPECT_EQ(insts[2].pc, 4u);
    EXPECT_EQ(*insts[2].pushed_value, 0xffff);
}

TEST(bytecode, truncated_push_is_zero_padded)
{
    const auto insts = disassemble(from_hex("61ab"));
    ASSERT_EQ(insts.size(), 1u);
    EXPECT_EQ(*insts[0].pushed_value, 0xab00);
}

TEST(bytecode, jumpdest_inside_push_data_is_not_a_target)
{
    const auto program = load_program(from_hex("605b5b"));
    EXPECT_FALSE(program.is_jump_target(BlockId{1}));
    EXPECT_TRUE(program.is_jump_target(BlockId{2}));
}

TEST(bytecode, blocks_split_at_jumps_and_jumpdests)
{
    const auto program = load_program(assemble("PUSH1 0x04 JUMP INVALID JUMPDEST STOP"));
    ASSERT_EQ(program.blocks.size(), 3u);
    EXPECT_EQ(program.blocks.at(0).terminator, TerminatorKind::jump);
    EXPECT_EQ(program.blocks.at(3).terminator, TerminatorKind::halt);
    EXPECT_EQ(program.blocks.at(4).terminator, TerminatorKind::halt);
}

TEST(bytecode, fallthrough_after_jumpi)
{
    const auto program = load_program(assemble("PUSH0 PUSH1 0x05 JUMPI STOP JUMPDEST STOP"));
    const auto& first = program.blocks.at(0);
    EXPECT_EQ(first.terminator, TerminatorKind::conditional_jump);
    EXPECT_EQ(program.fallthrough_of(first), BlockId{4});
}

TEST(bytecode, hex_errors_name_the_offset)
{
    try
    {
        parse_bytecode_text("0x60zz");
        FAIL() << "expected a parse error";
    }
    catch (const BytecodeParseError& e)
    {
        EXPECT_EQ(e.offset(), 4u);
    }
}

TEST(bytecode, text_forms)
{
    EXPECT_EQ(parse_bytecode_text("0x6001\n"), (bytes{0x60, 0x01}));
    EXPECT_EQ(parse_bytecode_text("6001"), (bytes{0x60, 0x01}));
    EXPECT_THROW(parse_bytecode_text("6001zz"), BytecodeParseError);
    EXPECT_EQ(parse_bytecode_text(std::string{"\x60\x01\x00", 3}), (bytes{0x60, 0x01, 0x00}));
    EXPECT_EQ(to_hex_string(bytes{0x60, 0x01}), "6001");
}

TEST(opcodes, table_round_trips_names)
{
    for (unsigned b = 0; b < 256; ++b)
    {
        const auto& info = opcode_info(static_cast<std::uint8_t>(b));
        if (!info.defined)
            continue;
        const auto back = opcode_from_name(info.name);
        ASSERT_TRUE(back.has_value()) << info.name;
        EXPECT_EQ(*back, b) << info.name;
    }
}
