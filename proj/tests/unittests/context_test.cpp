// evmlift: context-sensitive EVM bytecode lifter
// Copyright 2026 The evmlift Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmlift/context.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace evmlift;

namespace
{
Context ctx(std::vector<BlockId> p, std::optional<BlockId> u = std::nullopt)
{
    return Context{u, std::move(p)};
}

const SchemeConfig shrinking4{Scheme::shrinking, 4};
const SchemeConfig transactional4{Scheme::transactional, 4};
}  // namespace

TEST(context, cut_to)
{
    EXPECT_EQ(cut_to({3, 2, 9, 1}, 9), (std::vector<BlockId>{1}));
    EXPECT_EQ(cut_to({9}, 9), (std::vector<BlockId>{}));
    EXPECT_EQ(cut_to({9, 1, 9, 0}, 9), (std::vector<BlockId>{1, 9, 0}));
    EXPECT_THROW(cut_to({1, 2}, 9), std::invalid_argument);
}

TEST(context, public_call_replaces_public_part)
{
    ConfirmedFacts facts;
    facts.public_calls = {{0x1a, 0x38}};
    EXPECT_EQ(merge(ctx({}), 0x1a, 0x38, facts, shrinking4), ctx({}, 0x38));
    EXPECT_EQ(merge_transactional(ctx({5}), 0x1a, 0x38, facts, transactional4), ctx({5}, 0x38));
}

TEST(context, private_call_pushes_caller)
{
    ConfirmedFacts facts;
    facts.private_calls = {{0x1ca, 0x1d3}};
    EXPECT_EQ(merge(ctx({0xa}, 7), 0x1ca, 0x1b9, facts, shrinking4), ctx({0x1ca, 0xa}, 7));
}

TEST(context, matched_return_restores_call_site_context)
{
    ConfirmedFacts facts;
    facts.private_calls = {{0x1ca, 0x1d3}};
    facts.private_returns = {0x300};
    EXPECT_EQ(merge(ctx({0x99, 0x1ca, 0xa}, 7), 0x300, 0x1d3, facts, shrinking4), ctx({0xa}, 7));
}

TEST(context, unmatched_return_pushes)
{
    ConfirmedFacts facts;
    facts.private_returns = {0x300};
    EXPECT_EQ(merge(ctx({1, 2, 3, 4}), 0x300, 0x55, facts, shrinking4), ctx({0x300, 1, 2, 3}));
}

TEST(context, unrelated_transition_keeps_context)
{
    EXPECT_EQ(merge(ctx({1, 2}, 3), 10, 11, ConfirmedFacts{}, shrinking4), ctx({1, 2}, 3));
    EXPECT_EQ(merge_transactional(ctx({1, 2}, 3), 10, 11, ConfirmedFacts{}, transactional4), ctx({1, 2}, 3));
}

TEST(context, important_edges_only_with_their_scheme)
{
    ConfirmedFacts facts;
    facts.important_edges = {{4, 5}};
    EXPECT_EQ(merge(ctx({1}), 4, 5, facts, shrinking4), ctx({1}));
    const SchemeConfig with_edges{Scheme::shrinking_important_edges, 4};
    EXPECT_EQ(merge(ctx({1}), 4, 5, facts, with_edges), ctx({4, 1}));
    EXPECT_EQ(merge_transactional(ctx({1}), 4, 5, facts, transactional4), ctx({1}));
}

TEST(context, call_takes_precedence_over_return)
{
    ConfirmedFacts facts;
    facts.private_calls = {{0x10, 0x20}, {0x30, 0x40}};
    facts.private_returns = {0x10};
    EXPECT_EQ(merge(ctx({0x30}), 0x10, 0x40, facts, shrinking4), ctx({0x10, 0x30}));
}

TEST(context, most_recent_match_is_cut)
{
    ConfirmedFacts facts;
    facts.private_calls = {{0x10, 0x50}, {0x20, 0x50}};
    facts.private_returns = {0x99};
    EXPECT_EQ(merge(ctx({0x7, 0x20, 0x10, 0x1}), 0x99, 0x50, facts, shrinking4), ctx({0x10, 0x1}));
}

TEST(context, transactional_prepends_and_truncates)
{
    ConfirmedFacts facts;
    facts.private_calls = {{1, 100}, {2, 100}, {3, 100}, {4, 100}, {5, 100}};
    facts.private_returns = {0x300};
    Context c;
    for (BlockId b = 1; b <= 5; ++b)
        c = merge_transactional(c, b, 0x1000, facts, transactional4);
    EXPECT_EQ(c, ctx({5, 4, 3, 2}));
    EXPECT_EQ(merge_transactional(ctx({0x1ca}), 0x300, 0x1d3, facts, transactional4), ctx({0x300, 0x1ca}));
}

TEST(context, scheme_names)
{
    EXPECT_EQ(parse_scheme("shrinking"), Scheme::shrinking);
    EXPECT_EQ(parse_scheme("transactional"), Scheme::transactional);
    EXPECT_FALSE(parse_scheme("other"));
    EXPECT_EQ(SchemeConfig::with_default_depth(Scheme::transactional).depth, 8u);
    EXPECT_EQ(SchemeConfig::with_default_depth(Scheme::shrinking).depth, 20u);
    EXPECT_EQ(ctx({0x1ca, 0xa}).to_string(), "<Null|[0x1ca, 0xa]>");
}

// Random facts and transitions: depth bound and suffix-on-matched-return.
TEST(context, depth_bound_and_shrink_restore)
{
    std::mt19937_64 rng{11};
    for (int round = 0; round < 2000; ++round)
    {
        ConfirmedFacts facts;
        for (int i = 0; i < 6; ++i)
        {
            facts.private_calls.emplace(rng() % 8, 16 + rng() % 8);
            facts.private_returns.insert(rng() % 8);
            facts.important_edges.emplace(rng() % 8, rng() % 24);
            facts.public_calls.emplace(rng() % 8, 40 + rng() % 4);
        }
        const SchemeConfig cfg{static_cast<Scheme>(rng() % 3), static_cast<unsigned>(1 + rng() % 5)};
        Context c;
        for (int step = 0; step < 30; ++step)
        {
            const BlockId cur = rng() % 8;
            const BlockId next = rng() % 24;
            const auto out = next_context(c, cur, next, facts, cfg);
            ASSERT_LE(out.private_part.size(), cfg.depth);
            const bool call = facts.is_private_caller(cur);
            const bool matched = std::any_of(c.private_part.begin(), c.private_part.end(),
                [&](BlockId p) { return facts.pushes_continuation(p, next); });
            const bool important = cfg.scheme == Scheme::shrinking_important_edges &&
                                   facts.important_edges.contains({cur, next});
            if (cfg.scheme != Scheme::transactional && !facts.is_public_call(cur, next) && !call &&
                !important && facts.is_private_return(cur) && matched)
            {
                const auto& p = c.private_part;
                const auto& q = out.private_part;
                ASSERT_LE(q.size(), p.size());
                EXPECT_TRUE(std::equal(q.begin(), q.end(), p.end() - static_cast<std::ptrdiff_t>(q.size())));
            }
            c = out;
        }
    }
}
