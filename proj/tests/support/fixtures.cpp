// evmlift: context-sensitive EVM bytecode lifter
// Copyright 2026 The evmlift Authors.
// SPDX-License-Identifier: Apache-2.0

#include "fixtures.hpp"

#include "assembler.hpp"

namespace evmlift::test
{
bytes selector_dispatch_program()
{
    return assemble(R"(
        PUSH1 0x80 PUSH1 0x40 MSTORE CALLVALUE DUP1 ISZERO PUSH2 @body JUMPI
        PUSH0 DUP1 REVERT
    body:
        JUMPDEST POP PUSH0 PUSH1 0x04 CALLDATASIZE LT PUSH2 @fallback JUMPI
        CALLDATALOAD PUSH1 0xe0 SHR DUP1 PUSH4 0x12e49406 EQ PUSH2 @transfer_with_fee JUMPI
        DUP1 PUSH4 0x87d7a5f4 EQ PUSH2 @simple_transfer JUMPI
    fallback:
        JUMPDEST PUSH0 DUP1 REVERT
    transfer_with_fee:
        JUMPDEST STOP
        .pad 0x54
    simple_transfer:
        JUMPDEST STOP
    )");
}

bytes masking_call_program()
{
    return assemble(R"(
        PUSH1 0x11 PUSH1 0x22 PUSH1 0x33 PUSH2 @caller JUMP
        .pad 0x109
    mask:
        JUMPDEST PUSH0 PUSH20 0xffffffffffffffffffffffffffffffffffffffff
        DUP3 AND SWAP1 POP SWAP2 SWAP1 POP JUMP
    caller:
        JUMPDEST PUSH0 PUSH2 @cont DUP3 PUSH2 @mask JUMP
    cont:
        JUMPDEST STOP
    )");
}

bytes chained_calls_program()
{
    return assemble(R"(
        PUSH1 0x00 CALLDATALOAD PUSH1 0xe0 SHR
        DUP1 PUSH4 0x12e49406 EQ PUSH2 @entry JUMPI
        DUP1 PUSH4 0x87d7a5f4 EQ PUSH2 @other JUMPI
        DUP1 PUSH4 0x2e1a7d4d EQ PUSH2 @third JUMPI
        PUSH0 DUP1 REVERT
        .pad 0x50
    entry:
        JUMPDEST CALLVALUE PUSH2 @body JUMP
        .pad 0x58
    body:
        JUMPDEST SWAP1
        PUSH2 @final PUSH1 0x84 CALLDATALOAD
        PUSH2 @chain PUSH1 0x64 CALLDATALOAD
        PUSH2 @chain PUSH0 SLOAD PUSH1 0x44 CALLDATALOAD
        PUSH2 @safe_sub JUMP
    chain:
        JUMPDEST PUSH2 @safe_sub JUMP
    final:
        JUMPDEST STOP
        .pad 0x100
    other:
        JUMPDEST PUSH2 @other_done PUSH1 0xa4 CALLDATALOAD
        PUSH2 @chain PUSH1 0xc4 CALLDATALOAD PUSH1 0xe4 CALLDATALOAD
        PUSH2 @add JUMP
        .pad 0x130
    third:
        JUMPDEST PUSH2 @third_done PUSH2 0x104 CALLDATALOAD
        PUSH2 @chain PUSH2 0x124 CALLDATALOAD PUSH2 0x144 CALLDATALOAD
        PUSH2 @safe_sub JUMP
        .pad 0x160
    other_done:
        JUMPDEST STOP
        .pad 0x170
    third_done:
        JUMPDEST STOP
        .pad 0x1c7
    safe_sub:
        JUMPDEST DUP2 DUP2 LT PUSH2 @underflow JUMPI
        SUB SWAP1 JUMP
        .pad 0x1e0
    underflow:
        JUMPDEST PUSH0 DUP1 REVERT
        .pad 0x1f0
    add:
        JUMPDEST ADD SWAP1 JUMP
    )");
}

bytes dead_continuation_program()
{
    return assemble(R"(
        PUSH1 @cont PUSH1 @callee JUMP
    cont:
        JUMPDEST STOP
    callee:
        JUMPDEST POP STOP
    )");
}

bytes storage_compare_program()
{
    return assemble(R"(
        PUSH0 SLOAD PUSH4 0x12345678 EQ PUSH1 @target JUMPI
        PUSH0 DUP1 REVERT
    target:
        JUMPDEST STOP
    )");
}

bytes constant_merge_program()
{
    return assemble(R"(
        PUSH0 CALLDATALOAD PUSH1 @right JUMPI
        PUSH1 0x01 PUSH1 @join JUMP
        .pad 0x20
    right:
        JUMPDEST PUSH1 0x02 PUSH1 @join JUMP
        .pad 0x30
    join:
        JUMPDEST POP STOP
    )");
}

bytes call_fanout_program(unsigned callers)
{
    Assembler a;
    a.code("PUSH2 @head JUMP head: JUMPDEST");
    for (unsigned i = 0; i < callers; ++i)
    {
        a.code("PUSH0 SLOAD").push(i, 1).code("LT");
        a.push_label("call" + std::to_string(i)).code("JUMPI");
    }
    a.code("STOP");
    for (unsigned i = 0; i < callers; ++i)
    {
        const auto n = std::to_string(i);
        a.label("call" + n).code("JUMPDEST");
        a.push_label("ret" + n).push(i + 1, 1).push_label("shared").code("JUMP");
        a.label("ret" + n).code("JUMPDEST PUSH2 @head JUMP");
    }
    a.code("shared: JUMPDEST POP JUMP");
    return a.build();
}

bytes straight_line_program()
{
    return assemble("PUSH1 0x02 PUSH1 0x03 ADD POP STOP");
}
}  // namespace evmlift::test
