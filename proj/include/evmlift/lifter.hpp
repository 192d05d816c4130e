// evmlift: context-sensitive EVM bytecode lifter
// Copyright 2026 The evmlift Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <evmlift/global_analysis.hpp>
#include <evmlift/tac.hpp>

#include <vector>

namespace evmlift
{
/// One TAC block per analyzed block with operands merged across contexts.
/// Calls to private functions become CALLPRIVATE whose successor is the
/// continuation; returns become RETURNPRIVATE with no successors.
TacProgram lift(const AnalysisState& state, const BytecodeProgram& program,
    const SummaryMap& summaries, const ConfirmedFacts& facts);

/// Groups lifted blocks under public entries, private entries, and shared code.
std::vector<TacFunction> reconstruct_functions(const TacProgram& tac,
    const SummaryMap& summaries, const ConfirmedFacts& facts, const PatternFacts& candidates);
}  // namespace evmlift
