// evmlift: context-sensitive EVM bytecode lifter
// Copyright 2026 The evmlift Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <evmlift/bytecode.hpp>
#include <evmlift/local_analysis.hpp>

#include <compare>
#include <set>

namespace evmlift
{
/// One PUSH statement whose pushed block gets its own private copy.
struct CloneInstance
{
    std::uint64_t push_pc = 0;
    BlockId original = 0;
    BlockId fresh = 0;

    friend auto operator<=>(const CloneInstance&, const CloneInstance&) = default;
};

/// Blocks ending in JUMP that are either continuations of private-call
/// candidates pushed by two or more statements, or stack-balancing blocks
/// pushed by two or more PUSH statements anywhere. Fresh ids are allocated in
/// (original, push_pc) order starting at the first multiple of 16 past the
/// code length, each past the end of the previous clone.
std::set<CloneInstance> select_clone_candidates(
    const BytecodeProgram& program, const PatternFacts& facts);

/// Rewrites each instance's PUSH to push the fresh id and adds the copied
/// block (pcs rebased onto the fresh id). Originals are kept.
/// Throws std::invalid_argument when an instance does not match the program.
BytecodeProgram apply_cloning(const BytecodeProgram& program, const std::set<CloneInstance>& instances);
}  // namespace evmlift
