// evmlift: context-sensitive EVM bytecode lifter
// Copyright 2026 The evmlift Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <evmlift/global_analysis.hpp>
#include <evmlift/tac.hpp>

#include <string>

namespace evmlift
{
struct MetricsReport
{
    /// (context, block) pairs whose jump resolves to two or more targets.
    std::size_t polymorphic_jump_target = 0;
    /// TAC statements with an operand no predecessor supplied.
    std::size_t unresolved_operand = 0;
    /// TAC blocks with more successors than the terminator allows.
    std::size_t unstructured_control_flow = 0;
    /// Analyzed blocks without a TAC block.
    std::size_t missing_ir_block = 0;
    /// TAC blocks with fewer successors than the terminator needs.
    std::size_t missing_control_flow = 0;
    StopCondition stop_condition = StopCondition::fixpoint;

    friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

/// Fills the three precision counts and the stop condition.
MetricsReport precision_metrics(const AnalysisState& state, const TacProgram& tac);

/// Fills the two completeness counts.
MetricsReport completeness_metrics(const AnalysisState& state, const TacProgram& tac);

MetricsReport compute_metrics(const AnalysisState& state, const TacProgram& tac);

/// One "name: value" line per field.
std::string format_report(const MetricsReport& report);

/// JSON object with exactly the six fields.
std::string metrics_to_json(const MetricsReport& report);
MetricsReport metrics_from_json(const std::string& text);
}  // namespace evmlift
