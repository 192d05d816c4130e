// evmlift: context-sensitive EVM bytecode lifter
// Copyright 2026 The evmlift Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmlift/pipeline.hpp>

#include <json.hpp>

#include <atomic>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

namespace evmlift
{
namespace fs = std::filesystem;

PipelineResult run_pipeline(bytes code, const PipelineOptions& options)
{
    auto limits = AnalysisLimits::with_timeout(options.timeout_seconds);
    limits.max_stack_depth = options.max_stack_depth;

    PipelineResult r;
    r.program = load_program(std::move(code));
    r.summaries = summarize_program(r.program);
    r.candidates = detect_patterns(r.program, r.summaries);

    if (options.cloning)
    {
        r.clones = select_clone_candidates(r.program, r.candidates);
        if (!r.clones.empty())
        {
            r.program = apply_cloning(r.program, r.clones);
            r.summaries = summarize_program(r.program);
            r.candidates = detect_patterns(r.program, r.summaries);
        }
    }

    r.scheme = options.scheme;
    if (options.preanalysis)
    {
        r.preanalysis = run_preanalysis(r.program, r.summaries, r.candidates, options.scheme.depth,
            options.preanalysis_limit, limits);
        r.facts = confirm_facts(r.program, r.summaries, r.candidates, *r.preanalysis);
        if (r.scheme.scheme == Scheme::shrinking)
            r.scheme.scheme = Scheme::shrinking_important_edges;
    }
    else
    {
        r.facts = facts_from_candidates(r.candidates);
    }

    AnalysisOptions analysis;
    analysis.scheme = r.scheme;
    analysis.limits = limits;
    analysis.limits.fact_limit = options.fact_limit;
    analysis.order = options.order;
    r.state = analyze(r.program, r.summaries, r.facts, analysis);

    r.tac = lift(r.state, r.program, r.summaries, r.facts);
    r.metrics = compute_metrics(r.state, r.tac);
    return r;
}

std::string read_file(const fs::path& path)
{
    std::ifstream in{path, std::ios::binary};
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad())
        throw std::runtime_error("cannot read " + path.string());
    return ss.str();
}

void write_file_atomic(const fs::path& path, const std::string& content)
{
    auto tmp = path;
    tmp += ".tmp." + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
    {
        std::ofstream out{tmp, std::ios::binary | std::ios::trunc};
        if (!out)
            throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out)
            throw std::runtime_error("cannot write " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec)
    {
        fs::remove(tmp);
        throw std::runtime_error("cannot rename onto " + path.string() + ": " + ec.message());
    }
}

ContractResult analyze_file(const fs::path& path, const PipelineOptions& options)
{
    ContractResult result;
    result.name = path.filename().string();
    try
    {
        auto code = parse_bytecode_text(read_file(path));
        const auto r = run_pipeline(std::move(code), options);
        result.metrics = r.metrics;
        result.tac_text = render_tac(r.tac);
        result.ok = true;
    }
    catch (const BytecodeParseError& e)
    {
        result.error = e.what();
    }
    catch (const std::exception& e)
    {
        result.error = e.what();
    }
    return result;
}

std::vector<fs::path> list_contracts(const fs::path& dir)
{
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator{dir})
    {
        if (entry.is_regular_file() && !entry.path().filename().string().starts_with("."))
            files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    return files;
}

namespace
{
void accumulate(MetricsReport& sums, MetricsReport& exhibiting, const MetricsReport& m)
{
    const auto add = [](std::size_t& sum, std::size_t& count, std::size_t v) {
        sum += v;
        count += v > 0 ? 1 : 0;
    };
    add(sums.polymorphic_jump_target, exhibiting.polymorphic_jump_target, m.polymorphic_jump_target);
    add(sums.unresolved_operand, exhibiting.unresolved_operand, m.unresolved_operand);
    add(sums.unstructured_control_flow, exhibiting.unstructured_control_flow, m.unstructured_control_flow);
    add(sums.missing_ir_block, exhibiting.missing_ir_block, m.missing_ir_block);
    add(sums.missing_control_flow, exhibiting.missing_control_flow, m.missing_control_flow);
}

std::string output_stem(const std::string& name)
{
    return fs::path{name}.stem().string();
}

BatchReport analyze_all(const std::vector<fs::path>& files, const PipelineOptions& options, unsigned jobs)
{
    BatchReport report;
    report.contracts.resize(files.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (auto i = next++; i < files.size(); i = next++)
            report.contracts[i] = analyze_file(files[i], options);
    };
    const auto n = std::min<std::size_t>(std::max(jobs, 1u), std::max<std::size_t>(files.size(), 1));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < n; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();

    for (const auto& c : report.contracts)
    {
        if (!c.ok)
        {
            ++report.failures;
            continue;
        }
        if (c.metrics.stop_condition == StopCondition::timeout)
            ++report.timeouts;
        accumulate(report.sums, report.exhibiting, c.metrics);
    }
    return report;
}

std::vector<fs::path> sweep_inputs(const RunConfig& config)
{
    if (fs::is_directory(config.input))
        return list_contracts(config.input);
    return {config.input};
}
}  // namespace

double BatchReport::timeout_percentage() const
{
    return contracts.empty() ? 0.0 : 100.0 * static_cast<double>(timeouts) / static_cast<double>(contracts.size());
}

std::string BatchReport::summary() const
{
    std::ostringstream s;
    s << "contracts: " << contracts.size() << "\n";
    s << "failures: " << failures << "\n";
    s << "timeouts: " << timeouts << "\n";
    s << "timeout_percentage: " << std::fixed << std::setprecision(2) << timeout_percentage() << "\n";
    const auto line = [&s](const char* name, std::size_t sum, std::size_t count) {
        s << name << ": " << sum << " (contracts: " << count << ")\n";
    };
    line("polymorphic_jump_target", sums.polymorphic_jump_target, exhibiting.polymorphic_jump_target);
    line("unresolved_operand", sums.unresolved_operand, exhibiting.unresolved_operand);
    line("unstructured_control_flow", sums.unstructured_control_flow, exhibiting.unstructured_control_flow);
    line("missing_ir_block", sums.missing_ir_block, exhibiting.missing_ir_block);
    line("missing_control_flow", sums.missing_control_flow, exhibiting.missing_control_flow);
    for (const auto& c : contracts)
        if (!c.ok)
            s << "error: " << c.name << ": " << c.error << "\n";
    return s.str();
}

std::string BatchReport::to_json() const
{
    const auto fields = [](const MetricsReport& m) {
        nlohmann::ordered_json j;
        j["polymorphic_jump_target"] = m.polymorphic_jump_target;
        j["unresolved_operand"] = m.unresolved_operand;
        j["unstructured_control_flow"] = m.unstructured_control_flow;
        j["missing_ir_block"] = m.missing_ir_block;
        j["missing_control_flow"] = m.missing_control_flow;
        return j;
    };
    nlohmann::ordered_json j;
    j["contracts"] = contracts.size();
    j["failures"] = failures;
    j["timeouts"] = timeouts;
    j["timeout_percentage"] = timeout_percentage();
    j["sums"] = fields(sums);
    j["contracts_exhibiting"] = fields(exhibiting);
    auto& per = j["results"] = nlohmann::ordered_json::array();
    for (const auto& c : contracts)
    {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        if (c.ok)
            e["stop_condition"] = to_string(c.metrics.stop_condition);
        else
            e["error"] = c.error;
        per.push_back(std::move(e));
    }
    return j.dump(2) + "\n";
}

BatchReport run_batch(const RunConfig& config)
{
    auto report = analyze_all(list_contracts(config.input), config.pipeline, config.jobs);
    if (config.tac_out)
        fs::create_directories(*config.tac_out);
    if (config.metrics_out)
        fs::create_directories(*config.metrics_out);
    for (const auto& c : report.contracts)
    {
        if (!c.ok)
            continue;
        const auto stem = output_stem(c.name);
        if (config.tac_out)
            write_file_atomic(*config.tac_out / (stem + ".tac"), c.tac_text);
        if (config.metrics_out)
            write_file_atomic(*config.metrics_out / (stem + ".json"), metrics_to_json(c.metrics));
    }
    if (config.metrics_out)
        write_file_atomic(*config.metrics_out / "aggregate.json", report.to_json());
    return report;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    try
    {
        if (config.batch)
        {
            if (!fs::is_directory(config.input))
            {
                err << "error: " << config.input.string() << " is not a directory\n";
                return exit_failure;
            }
            out << run_batch(config).summary();
            return exit_ok;
        }

        auto code = parse_bytecode_text(read_file(config.input));
        const auto r = run_pipeline(std::move(code), config.pipeline);
        if (config.tac_out)
            write_file_atomic(*config.tac_out, render_tac(r.tac));
        if (config.metrics_out)
            write_file_atomic(*config.metrics_out, metrics_to_json(r.metrics));
        out << format_report(r.metrics);
        return r.metrics.stop_condition == StopCondition::timeout ? exit_timeout : exit_ok;
    }
    catch (const BytecodeParseError& e)
    {
        err << "error: " << config.input.string() << ": " << e.what() << "\n";
    }
    catch (const std::exception& e)
    {
        err << "error: " << e.what() << "\n";
    }
    return exit_failure;
}

std::vector<SweepRow> run_sweep(const RunConfig& config)
{
    const auto base = config.pipeline;
    std::vector<SweepRow> rows;
    rows.push_back({"default", base, {}});

    auto transactional = base;
    transactional.scheme = SchemeConfig{Scheme::transactional, 8};
    rows.push_back({"transactional-depth-8", transactional, {}});

    auto no_cloning = base;
    no_cloning.cloning = false;
    rows.push_back({"no-cloning", no_cloning, {}});

    auto no_pre = base;
    no_pre.preanalysis = false;
    rows.push_back({"no-preanalysis", no_pre, {}});

    const auto files = sweep_inputs(config);
    for (auto& row : rows)
        row.report = analyze_all(files, row.options, config.jobs);
    return rows;
}

std::string format_sweep(const std::vector<SweepRow>& rows)
{
    std::ostringstream s;
    s << std::left << std::setw(24) << "configuration" << std::right << std::setw(10) << "contracts"
      << std::setw(10) << "timeouts" << std::setw(8) << "poly" << std::setw(12) << "unresolved"
      << std::setw(14) << "unstructured" << std::setw(12) << "missing_ir" << std::setw(12)
      << "missing_cf" << "\n";
    for (const auto& row : rows)
    {
        const auto& r = row.report;
        s << std::left << std::setw(24) << row.name << std::right << std::setw(10) << r.contracts.size()
          << std::setw(10) << r.timeouts << std::setw(8) << r.sums.polymorphic_jump_target
          << std::setw(12) << r.sums.unresolved_operand << std::setw(14)
          << r.sums.unstructured_control_flow << std::setw(12) << r.sums.missing_ir_block
          << std::setw(12) << r.sums.missing_control_flow << "\n";
    }
    return s.str();
}
}  // namespace evmlift
