// evmlift: context-sensitive EVM bytecode lifter
// Copyright 2026 The evmlift Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <evmlift/uint256.hpp>

#include <compare>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace evmlift
{
using BlockEdge = std::pair<BlockId, BlockId>;

/// Public entry plus a bounded list of private blocks, most recent first.
struct Context
{
    std::optional<BlockId> public_part;
    std::vector<BlockId> private_part;

    friend auto operator<=>(const Context&, const Context&) = default;
    friend bool operator==(const Context&, const Context&) = default;

    std::string to_string() const;
};

struct ContextHash
{
    std::size_t operator()(const Context& c) const noexcept;
};

enum class Scheme
{
    shrinking,
    shrinking_important_edges,
    transactional,
};

std::string_view to_string(Scheme s) noexcept;
std::optional<Scheme> parse_scheme(std::string_view s) noexcept;

struct SchemeConfig
{
    Scheme scheme = Scheme::shrinking;
    unsigned depth = 20;

    /// 20 for the shrinking variants, 8 for transactional.
    static SchemeConfig with_default_depth(Scheme s);
};

/// Call/return facts consumed by the context constructors. Either raw local
/// candidates or their pre-analysis-confirmed subsets.
struct ConfirmedFacts
{
    std::set<BlockEdge> public_calls;
    /// (caller, continuation)
    std::set<BlockEdge> private_calls;
    std::set<BlockId> private_returns;
    std::set<BlockEdge> important_edges;

    bool is_public_call(BlockId cur, BlockId next) const { return public_calls.contains({cur, next}); }
    bool is_private_caller(BlockId cur) const;
    bool is_private_return(BlockId cur) const { return private_returns.contains(cur); }
    bool pushes_continuation(BlockId caller, BlockId cont) const
    {
        return private_calls.contains({caller, cont});
    }
};

/// Drops the first (most recent) occurrence of `c` and everything more recent.
/// Throws std::invalid_argument if `c` is not in `p`.
std::vector<BlockId> cut_to(const std::vector<BlockId>& p, BlockId c);

/// Shrinking context constructor, with important edges when the scheme says so.
Context merge(const Context& ctx, BlockId cur, BlockId next, const ConfirmedFacts& facts,
    const SchemeConfig& cfg);

/// Sticky public part plus the n most recent likely calls or returns.
Context merge_transactional(const Context& ctx, BlockId cur, BlockId next,
    const ConfirmedFacts& facts, const SchemeConfig& cfg);

/// Dispatches on cfg.scheme.
Context next_context(const Context& ctx, BlockId cur, BlockId next, const ConfirmedFacts& facts,
    const SchemeConfig& cfg);
}  // namespace evmlift
