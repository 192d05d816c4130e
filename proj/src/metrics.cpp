// evmlift: context-sensitive EVM bytecode lifter
// Copyright 2026 The evmlift Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmlift/metrics.hpp>

#include <json.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace evmlift
{
MetricsReport precision_metrics(const AnalysisState& state, const TacProgram& tac)
{
    MetricsReport r;
    std::map<NodeKey, std::set<BlockId>> targets;
    for (const auto& f : state.block_jump_target)
        targets[NodeKey{f.ctx, f.from}].insert(f.to);
    r.polymorphic_jump_target = static_cast<std::size_t>(std::count_if(
        targets.begin(), targets.end(), [](const auto& e) { return e.second.size() >= 2; }));

    for (const auto& block : tac.blocks)
    {
        for (const auto& s : block.statements)
        {
            if (std::any_of(s.operands.begin(), s.operands.end(),
                    [](const TacOperand& o) { return o.is_unresolved(); }))
                ++r.unresolved_operand;
        }
        if (block.succs.size() > block.allowed_successors())
            ++r.unstructured_control_flow;
    }
    r.stop_condition = state.stop;
    return r;
}

MetricsReport completeness_metrics(const AnalysisState& state, const TacProgram& tac)
{
    MetricsReport r;
    for (const auto b : state.reached_blocks())
        if (tac.find(b) == nullptr)
            ++r.missing_ir_block;
    for (const auto& block : tac.blocks)
        if (block.succs.size() < block.required_successors())
            ++r.missing_control_flow;
    r.stop_condition = state.stop;
    return r;
}

MetricsReport compute_metrics(const AnalysisState& state, const TacProgram& tac)
{
    auto r = precision_metrics(state, tac);
    const auto c = completeness_metrics(state, tac);
    r.missing_ir_block = c.missing_ir_block;
    r.missing_control_flow = c.missing_control_flow;
    return r;
}

std::string format_report(const MetricsReport& r)
{
    std::string s;
    s += "polymorphic_jump_target: " + std::to_string(r.polymorphic_jump_target) + "\n";
    s += "unresolved_operand: " + std::to_string(r.unresolved_operand) + "\n";
    s += "unstructured_control_flow: " + std::to_string(r.unstructured_control_flow) + "\n";
    s += "missing_ir_block: " + std::to_string(r.missing_ir_block) + "\n";
    s += "missing_control_flow: " + std::to_string(r.missing_control_flow) + "\n";
    s += "stop_condition: " + std::string(to_string(r.stop_condition)) + "\n";
    return s;
}

std::string metrics_to_json(const MetricsReport& r)
{
    nlohmann::ordered_json j;
    j["polymorphic_jump_target"] = r.polymorphic_jump_target;
    j["unresolved_operand"] = r.unresolved_operand;
    j["unstructured_control_flow"] = r.unstructured_control_flow;
    j["missing_ir_block"] = r.missing_ir_block;
    j["missing_control_flow"] = r.missing_control_flow;
    j["stop_condition"] = to_string(r.stop_condition);
    return j.dump(2) + "\n";
}

MetricsReport metrics_from_json(const std::string& text)
{
    const auto j = nlohmann::json::parse(text);
    MetricsReport r;
    r.polymorphic_jump_target = j.at("polymorphic_jump_target").get<std::size_t>();
    r.unresolved_operand = j.at("unresolved_operand").get<std::size_t>();
    r.unstructured_control_flow = j.at("unstructured_control_flow").get<std::size_t>();
    r.missing_ir_block = j.at("missing_ir_block").get<std::size_t>();
    r.missing_control_flow = j.at("missing_control_flow").get<std::size_t>();
    const auto stop = j.at("stop_condition").get<std::string>();
    if (stop == "fixpoint")
        r.stop_condition = StopCondition::fixpoint;
    else if (stop == "fact-limit")
        r.stop_condition = StopCondition::fact_limit;
    else if (stop == "timeout")
        r.stop_condition = StopCondition::timeout;
    else
        throw std::invalid_argument("unknown stop_condition '" + stop + "'");
    return r;
}
}  // namespace evmlift
