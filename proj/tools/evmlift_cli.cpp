// evmlift: context-sensitive EVM bytecode lifter
// Copyright 2026 The evmlift Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmlift/interpreter.hpp>
#include <evmlift/pipeline.hpp>

#include <CLI11.hpp>

#include <iostream>

namespace
{
int run_trace(const std::string& path, const std::string& calldata_hex, std::size_t max_steps,
    const std::string& env_default)
{
    using namespace evmlift;
    try
    {
        const auto program = load_program(parse_bytecode_text(read_file(path)));
        EnvValuation env;
        env.calldata = from_hex(calldata_hex);
        env.env_default = u256{env_default};
        const auto trace = concrete_execute(program, env, max_steps);
        std::cout << "visits:";
        for (const auto b : trace.visits)
            std::cout << ' ' << to_hex(b);
        std::cout << "\nhalted: " << to_string(trace.halted) << "\nsteps: " << trace.step_count << "\n";
        return exit_ok;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failure;
    }
}
}  // namespace

int main(int argc, char** argv)
{
    using namespace evmlift;

    CLI::App app{"evmlift: lift EVM bytecode to three-address code"};
    app.require_subcommand(0, 1);

    std::string input;
    std::string batch_dir;
    std::string scheme_name = "shrinking";
    unsigned depth = 0;
    bool no_cloning = false;
    bool no_preanalysis = false;
    std::size_t preanalysis_limit = default_preanalysis_limit;
    double timeout = 200;
    unsigned max_stack_depth = 100;
    std::string tac_out;
    std::string metrics_out;
    unsigned jobs = 1;
    bool sweep = false;

    app.add_option("input", input, "Bytecode file (hex or raw binary)");
    app.add_option("--batch", batch_dir, "Analyze every file in a directory");
    app.add_option("--scheme", scheme_name, "Context scheme")
        ->check(CLI::IsMember({"shrinking", "transactional"}));
    app.add_option("--context-depth", depth, "Context depth (default 20, 8 for transactional)")
        ->check(CLI::PositiveNumber);
    app.add_flag("--no-cloning", no_cloning, "Disable block cloning");
    app.add_flag("--no-preanalysis", no_preanalysis, "Use unconfirmed local call facts");
    app.add_option("--preanalysis-limit", preanalysis_limit, "Fact budget of the pre-analysis")
        ->check(CLI::PositiveNumber);
    app.add_option("--timeout", timeout, "Seconds per contract")->check(CLI::PositiveNumber);
    app.add_option("--max-stack-depth", max_stack_depth, "Tracked stack slots per block")
        ->check(CLI::PositiveNumber);
    app.add_option("--tac-out", tac_out, "TAC output file (directory in batch mode)");
    app.add_option("--metrics-out", metrics_out, "Metrics JSON file (directory in batch mode)");
    app.add_option("--jobs", jobs, "Parallel contracts in batch mode")->check(CLI::PositiveNumber);
    app.add_flag("--sweep", sweep, "Compare the default against three ablated configurations");

    auto* trace = app.add_subcommand("trace", "Execute concretely and print the block trace");
    trace->group("");
    std::string trace_input;
    std::string calldata;
    std::size_t max_steps = default_max_steps;
    std::string env_default = "0";
    trace->add_option("input", trace_input, "Bytecode file")->required();
    trace->add_option("--calldata", calldata, "Calldata as hex");
    trace->add_option("--max-steps", max_steps)->check(CLI::PositiveNumber);
    trace->add_option("--env-default", env_default, "Value of unmodeled environment reads");

    CLI11_PARSE(app, argc, argv);

    if (trace->parsed())
        return run_trace(trace_input, calldata, max_steps, env_default);

    RunConfig config;
    config.batch = !batch_dir.empty();
    config.input = config.batch ? batch_dir : input;
    if (config.input.empty())
    {
        std::cerr << "error: no input (give a file or --batch DIR)\n";
        return exit_failure;
    }
    const auto scheme = *parse_scheme(scheme_name);
    config.pipeline.scheme = SchemeConfig::with_default_depth(scheme);
    if (depth != 0)
        config.pipeline.scheme.depth = depth;
    config.pipeline.cloning = !no_cloning;
    config.pipeline.preanalysis = !no_preanalysis;
    config.pipeline.preanalysis_limit = preanalysis_limit;
    config.pipeline.timeout_seconds = timeout;
    config.pipeline.max_stack_depth = max_stack_depth;
    if (!tac_out.empty())
        config.tac_out = tac_out;
    if (!metrics_out.empty())
        config.metrics_out = metrics_out;
    config.jobs = jobs;

    if (sweep)
    {
        try
        {
            std::cout << format_sweep(run_sweep(config));
            return exit_ok;
        }
        catch (const std::exception& e)
        {
            std::cerr << "error: " << e.what() << "\n";
            return exit_failure;
        }
    }
    return run(config, std::cout, std::cerr);
}
