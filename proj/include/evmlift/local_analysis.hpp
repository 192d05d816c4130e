// evmlift: context-sensitive EVM bytecode lifter
// Copyright 2026 The evmlift Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <evmlift/bytecode.hpp>

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace evmlift
{
/// A stack value as seen from inside one block: either the k-th entry slot
/// (0 = top at block entry) or the value defined by the instruction at a pc.
struct SymValue
{
    enum class Kind : std::uint8_t
    {
        entry,
        def,
    };

    Kind kind = Kind::entry;
    std::uint64_t id = 0;
    /// Known value of a def (PUSH or folded). Not part of identity.
    std::optional<u256> constant;

    static SymValue entry(std::uint64_t slot) { return {Kind::entry, slot, std::nullopt}; }
    static SymValue def(std::uint64_t pc, std::optional<u256> c = std::nullopt)
    {
        return {Kind::def, pc, std::move(c)};
    }

    bool is_entry() const noexcept { return kind == Kind::entry; }
    bool is_def() const noexcept { return kind == Kind::def; }

    friend bool operator==(const SymValue& a, const SymValue& b) noexcept
    {
        return a.kind == b.kind && a.id == b.id;
    }
    friend auto operator<=>(const SymValue& a, const SymValue& b) noexcept
    {
        if (const auto c = a.kind <=> b.kind; c != 0)
            return c;
        return a.id <=> b.id;
    }
};

/// Per-instruction operands in pop order (top of stack first) and result.
struct StatementInfo
{
    std::vector<SymValue> operands;
    std::optional<SymValue> result;
};

struct BlockSummary
{
    BlockId block = 0;
    /// Number of entry slots read (deepest referenced slot + 1).
    unsigned consumed_depth = 0;
    /// Exit stack down to the deepest entry slot read, top first.
    std::vector<SymValue> exit_stack;
    /// Parallel to the block's instructions.
    std::vector<StatementInfo> statements;
    std::optional<SymValue> jump_target;
    std::optional<SymValue> jump_condition;
    /// Target of the terminating jump when it is a block-local constant.
    std::optional<BlockId> local_jump_target;
    /// Set when the block would need more than 1024 entry slots.
    bool unreachable_in_practice = false;

    /// Exit slot i (0 = top), extending past exit_stack into untouched entry slots.
    SymValue exit_slot(std::size_t i) const;

    /// Index of the statement defining a def-site pc, if it is in this block.
    std::optional<std::size_t> statement_index(std::uint64_t pc) const;
};

/// Symbolically executes a block over an unbounded stack of entry placeholders.
BlockSummary summarize_block(const BasicBlock& block);

using SummaryMap = std::map<BlockId, BlockSummary>;
SummaryMap summarize_program(const BytecodeProgram& program);

struct PublicCallCandidate
{
    BlockId block = 0;
    std::uint32_t selector = 0;
    BlockId target = 0;
    /// pc of the EQ comparing against the selector constant.
    std::uint64_t eq_pc = 0;

    friend auto operator<=>(const PublicCallCandidate&, const PublicCallCandidate&) = default;
};

struct PrivateCallCandidate
{
    BlockId caller = 0;
    BlockId continuation = 0;
    std::uint64_t push_pc = 0;

    friend auto operator<=>(const PrivateCallCandidate&, const PrivateCallCandidate&) = default;
};

struct PatternFacts
{
    std::set<PublicCallCandidate> public_call_candidates;
    std::set<PrivateCallCandidate> private_call_candidates;
    std::set<BlockId> private_returns;
    std::set<BlockId> stack_balancing;
};

std::set<PublicCallCandidate> detect_public_call_candidates(
    const BytecodeProgram& program, const SummaryMap& summaries);
std::set<PrivateCallCandidate> detect_private_call_candidates(
    const BytecodeProgram& program, const SummaryMap& summaries);
std::set<BlockId> detect_private_returns(
    const BytecodeProgram& program, const SummaryMap& summaries);
std::set<BlockId> detect_stack_balancing_blocks(const BytecodeProgram& program);

PatternFacts detect_patterns(const BytecodeProgram& program, const SummaryMap& summaries);
}  // namespace evmlift
