// evmlift: context-sensitive EVM bytecode lifter
// Copyright 2026 The evmlift Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <evmlift/global_analysis.hpp>

#include <set>

namespace evmlift
{
inline constexpr std::size_t default_preanalysis_limit = 1'000'000;

/// Raw local candidates in the shape the context constructors consume.
ConfirmedFacts facts_from_candidates(const PatternFacts& candidates);

/// Work-bounded global analysis with raw candidates under the shrinking scheme
/// (important edges off). The returned state may be incomplete.
AnalysisState run_preanalysis(const BytecodeProgram& program, const SummaryMap& summaries,
    const PatternFacts& candidates, unsigned depth, std::optional<std::size_t> limit,
    const AnalysisLimits& limits = {});

/// Keeps (caller, continuation) when the pushed continuation value was used as
/// a jump target to that continuation somewhere in the pre-state.
std::set<BlockEdge> filter_private_calls(
    const std::set<PrivateCallCandidate>& candidates, const AnalysisState& pre);

/// Def-site pcs holding the function selector: SHR(0xe0, CALLDATALOAD(0)),
/// DIV(CALLDATALOAD(0), 2^224), or such a value masked with 0xffffffff.
std::set<std::uint64_t> selector_values(
    const BytecodeProgram& program, const SummaryMap& summaries, const AnalysisState& pre);

/// Keeps (block, target) when the candidate's EQ compares a selector value.
std::set<BlockEdge> filter_public_calls(const BytecodeProgram& program,
    const SummaryMap& summaries, const std::set<PublicCallCandidate>& candidates,
    const AnalysisState& pre);

/// Edges where a stack slot first becomes multi-valued.
std::set<BlockEdge> compute_important_edges(const AnalysisState& pre);

/// Confirmed public/private calls, raw returns, and important edges.
ConfirmedFacts confirm_facts(const BytecodeProgram& program, const SummaryMap& summaries,
    const PatternFacts& candidates, const AnalysisState& pre);
}  // namespace evmlift
