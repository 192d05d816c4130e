// evmlift: context-sensitive EVM bytecode lifter
// Copyright 2026 The evmlift Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <evmlift/bytecode.hpp>

namespace evmlift::test
{
inline constexpr std::uint32_t transfer_with_fee_selector = 0x12e49406;
inline constexpr std::uint32_t simple_transfer_selector = 0x87d7a5f4;

/// Two-way selector dispatch; public entries at 0x38 and 0x54.
bytes selector_dispatch_program();

/// Caller at 0x128 pushes continuation 0x132 and calls the masking function at 0x109.
bytes masking_call_program();

/// Three public functions. The one at 0x50 runs three chained subtractions
/// through the shared continuation 0x72 (pushed at 0x60 and 0x66); the other
/// two also return through 0x72, one of them from an adder at 0x1f0.
bytes chained_calls_program();

/// Pushes a jump destination as a would-be continuation, calls a function
/// that pops it and stops.
bytes dead_continuation_program();

/// Compares an SLOAD result against a 4-byte constant before a JUMPI.
bytes storage_compare_program();

/// Blocks 0x5 and 0x20 push different constants and jump to 0x30.
bytes constant_merge_program();

/// A head block loops through `callers` call sites of one shared function;
/// the return always goes back to the head through a distinct continuation.
/// Context count grows quickly under the transactional scheme.
bytes call_fanout_program(unsigned callers);

/// Straight line: PUSH1 2 PUSH1 3 ADD POP STOP.
bytes straight_line_program();
}  // namespace evmlift::test
