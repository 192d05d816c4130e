// evmlift: context-sensitive EVM bytecode lifter
// Copyright 2026 The evmlift Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <evmlift/bytecode.hpp>
#include <evmlift/context.hpp>

#include <map>
#include <set>
#include <string_view>
#include <vector>

namespace evmlift
{
inline constexpr std::size_t default_max_steps = 100'000;
inline constexpr std::size_t max_env_valuations = 10'000;

struct EnvValuation
{
    bytes calldata;
    std::map<u256, u256> storage;
    /// Result of every environment read the interpreter does not model.
    u256 env_default = 0;
};

enum class HaltReason
{
    stop,
    return_,
    revert,
    invalid,
    out_of_steps,
};

std::string_view to_string(HaltReason r) noexcept;

struct Trace
{
    std::vector<BlockId> visits;
    HaltReason halted = HaltReason::stop;
    std::size_t step_count = 0;
    /// Stack when execution ended, top first.
    std::vector<u256> final_stack;

    /// Consecutive visit pairs.
    std::set<BlockEdge> edges() const;
};

/// Runs block by block, so cloned programs execute through their fresh blocks.
Trace concrete_execute(const BytecodeProgram& program, const EnvValuation& env,
    std::size_t max_steps = default_max_steps);

/// Candidate values for each environment read a test wants to vary.
struct EnvSets
{
    /// 32-byte calldata words keyed by byte offset.
    std::map<std::uint64_t, std::vector<u256>> calldata_words;
    std::map<u256, std::vector<u256>> storage;
    std::vector<u256> env_defaults{0};

    /// Number of valuations; saturates instead of overflowing.
    std::size_t product() const;
    /// All valuations in a fixed order. Throws std::invalid_argument past max_env_valuations.
    std::vector<EnvValuation> valuations() const;
};

struct EdgeEnumeration
{
    std::set<BlockEdge> edges;
    std::size_t runs = 0;
    /// Runs that hit max_steps; their edges are not included.
    std::size_t out_of_steps = 0;
};

/// Union of trace edges over every valuation.
EdgeEnumeration enumerate_edges(const BytecodeProgram& program, const EnvSets& env_sets,
    std::size_t max_steps = default_max_steps);
}  // namespace evmlift
