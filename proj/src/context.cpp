// evmlift: context-sensitive EVM bytecode lifter
// Copyright 2026 The evmlift Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmlift/context.hpp>

#include <algorithm>
#include <stdexcept>

namespace evmlift
{
std::string Context::to_string() const
{
    std::string s = "<";
    s += public_part ? to_hex(*public_part) : "Null";
    s += "|[";
    for (std::size_t i = 0; i < private_part.size(); ++i)
    {
        if (i != 0)
            s += ", ";
        s += to_hex(private_part[i]);
    }
    return s + "]>";
}

std::size_t ContextHash::operator()(const Context& c) const noexcept
{
    std::size_t h = c.public_part ? std::hash<BlockId>{}(*c.public_part) + 1 : 0;
    for (const auto b : c.private_part)
        h = h * 1000003u ^ std::hash<BlockId>{}(b);
    return h;
}

std::string_view to_string(Scheme s) noexcept
{
    switch (s)
    {
    case Scheme::shrinking:
        return "shrinking";
    case Scheme::shrinking_important_edges:
        return "shrinking+important-edges";
    case Scheme::transactional:
        return "transactional";
    }
    return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view s) noexcept
{
    if (s == "shrinking")
        return Scheme::shrinking;
    if (s == "shrinking+important-edges")
        return Scheme::shrinking_important_edges;
    if (s == "transactional")
        return Scheme::transactional;
    return std::nullopt;
}

SchemeConfig SchemeConfig::with_default_depth(Scheme s)
{
    return {s, s == Scheme::transactional ? 8u : 20u};
}

bool ConfirmedFacts::is_private_caller(BlockId cur) const
{
    const auto it = private_calls.lower_bound({cur, 0});
    return it != private_calls.end() && it->first == cur;
}

std::vector<BlockId> cut_to(const std::vector<BlockId>& p, BlockId c)
{
    const auto it = std::find(p.begin(), p.end(), c);
    if (it == p.end())
        throw std::invalid_argument("cut_to: " + to_hex(c) + " is not in the private context");
    return {it + 1, p.end()};
}

namespace
{
Context push_private(const Context& ctx, BlockId cur, unsigned depth)
{
    Context out;
    out.public_part = ctx.public_part;
    const auto keep = std::min<std::size_t>(ctx.private_part.size(), depth - 1);
    out.private_part.reserve(keep + 1);
    out.private_part.push_back(cur);
    out.private_part.insert(
        out.private_part.end(), ctx.private_part.begin(), ctx.private_part.begin() + keep);
    return out;
}
}  // namespace

Context merge(const Context& ctx, BlockId cur, BlockId next, const ConfirmedFacts& facts,
    const SchemeConfig& cfg)
{
    if (facts.is_public_call(cur, next))
        return {next, ctx.private_part};

    const auto& p = ctx.private_part;
    const bool is_return = facts.is_private_return(cur);
    // Most recent matching call site.
    auto match = p.end();
    if (is_return)
    {
        match = std::find_if(
            p.begin(), p.end(), [&](BlockId c) { return facts.pushes_continuation(c, next); });
    }

    const bool important = cfg.scheme == Scheme::shrinking_important_edges &&
                           facts.important_edges.contains({cur, next});
    if (facts.is_private_caller(cur) || (is_return && match == p.end()) || important)
        return push_private(ctx, cur, cfg.depth);

    if (is_return)
        return {ctx.public_part, std::vector<BlockId>(match + 1, p.end())};

    return ctx;
}

Context merge_transactional(const Context& ctx, BlockId cur, BlockId next,
    const ConfirmedFacts& facts, const SchemeConfig& cfg)
{
    if (facts.is_public_call(cur, next))
        return {next, ctx.private_part};
    if (facts.is_private_caller(cur) || facts.is_private_return(cur))
        return push_private(ctx, cur, cfg.depth);
    return ctx;
}

Context next_context(const Context& ctx, BlockId cur, BlockId next, const ConfirmedFacts& facts,
    const SchemeConfig& cfg)
{
    if (cfg.scheme == Scheme::transactional)
        return merge_transactional(ctx, cur, next, facts, cfg);
    return merge(ctx, cur, next, facts, cfg);
}
}  // namespace evmlift
