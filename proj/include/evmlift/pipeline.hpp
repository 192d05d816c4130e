// evmlift: context-sensitive EVM bytecode lifter
// Copyright 2026 The evmlift Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <evmlift/cloning.hpp>
#include <evmlift/lifter.hpp>
#include <evmlift/metrics.hpp>
#include <evmlift/preanalysis.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace evmlift
{
struct PipelineOptions
{
    SchemeConfig scheme;
    bool cloning = true;
    bool preanalysis = true;
    std::size_t preanalysis_limit = default_preanalysis_limit;
    double timeout_seconds = 200;
    unsigned max_stack_depth = 100;
    /// Tuple budget for the main analysis; none by default.
    std::optional<std::size_t> fact_limit;
    WorklistOrder order = WorklistOrder::fifo;
};

struct PipelineResult
{
    /// Program after cloning.
    BytecodeProgram program;
    SummaryMap summaries;
    PatternFacts candidates;
    std::set<CloneInstance> clones;
    std::optional<AnalysisState> preanalysis;
    ConfirmedFacts facts;
    /// Scheme the main analysis ran with.
    SchemeConfig scheme;
    AnalysisState state;
    TacProgram tac;
    MetricsReport metrics;
};

/// Local analysis, cloning, pre-analysis, main analysis, lifting and metrics
/// under one wall-clock deadline.
PipelineResult run_pipeline(bytes code, const PipelineOptions& options);

struct RunConfig
{
    std::filesystem::path input;
    bool batch = false;
    PipelineOptions pipeline;
    std::optional<std::filesystem::path> tac_out;
    std::optional<std::filesystem::path> metrics_out;
    unsigned jobs = 1;
};

/// Exit codes of run().
inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_timeout = 2;

struct ContractResult
{
    std::string name;
    bool ok = false;
    std::string error;
    MetricsReport metrics;
    std::string tac_text;
};

struct BatchReport
{
    std::vector<ContractResult> contracts;
    std::size_t failures = 0;
    std::size_t timeouts = 0;
    /// Absolute sums of the five counts over successful contracts.
    MetricsReport sums;
    /// Successful contracts with a nonzero count, per field.
    MetricsReport exhibiting;

    double timeout_percentage() const;
    std::string summary() const;
    std::string to_json() const;
};

/// Reads and analyzes one file. Never throws; failures land in `error`.
ContractResult analyze_file(const std::filesystem::path& path, const PipelineOptions& options);

/// Regular, non-hidden files of a directory in name order.
std::vector<std::filesystem::path> list_contracts(const std::filesystem::path& dir);

/// Analyzes every contract of config.input with config.jobs workers. Output
/// paths are directories receiving NAME.tac / NAME.json plus aggregate.json.
BatchReport run_batch(const RunConfig& config);

/// Single contract or batch; writes outputs and a report to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

struct SweepRow
{
    std::string name;
    PipelineOptions options;
    BatchReport report;
};

/// Default configuration against transactional depth 8, no cloning and no
/// pre-analysis, over config.input (file or directory).
std::vector<SweepRow> run_sweep(const RunConfig& config);
std::string format_sweep(const std::vector<SweepRow>& rows);

/// Writes through a temporary file in the same directory and renames it.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);
}  // namespace evmlift
