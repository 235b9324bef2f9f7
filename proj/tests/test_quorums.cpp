// Copyright 2026 the fbaskit developers. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include <doctest.h>

#include "intactness.hpp"
#include "oracles.hpp"
#include "quorums.hpp"
#include "slice_defs.hpp"
#include "trust_graph.hpp"

#include <algorithm>

using namespace fbas;

namespace
{

Fbas
twoCliquesFbas()
{
    std::vector<std::vector<NodeSet>> slices(7);
    NodeSet left(7, {0, 1, 2, 6});
    NodeSet right(7, {3, 4, 5, 6});
    for (uint32_t v = 0; v < 3; ++v)
    {
        slices[v] = {left};
    }
    for (uint32_t v = 3; v < 6; ++v)
    {
        slices[v] = {right};
    }
    slices[6] = {NodeSet(7, {6})};
    return makeGeneral(7, slices);
}

Fbas
loneVoters(uint32_t n)
{
    std::vector<NodeSet> q;
    std::vector<uint32_t> t;
    for (uint32_t v = 0; v < n; ++v)
    {
        q.push_back(NodeSet(n, {v}));
        t.push_back(1);
    }
    return makeSimple(n, std::move(q), std::move(t));
}

std::vector<NodeSet>
sorted(std::vector<NodeSet> sets)
{
    std::sort(sets.begin(), sets.end(),
              [](NodeSet const& a, NodeSet const& b) {
                  return a.toVector() < b.toVector();
              });
    return sets;
}

} // namespace

TEST_CASE("containsSlice on the two-clique example")
{
    Fbas f = twoCliquesFbas();
    CHECK(containsSlice(f, NodeSet(7, {0, 1, 2, 6}), 0));
    CHECK(!containsSlice(f, NodeSet(7, {0, 1, 2}), 0));
    CHECK(containsSlice(f, NodeSet(7, {6}), 6));
    CHECK_THROWS_AS(containsSlice(f, NodeSet(7, {1}), 0), Error);
}

TEST_CASE("containsSlice under deletion for simple FBAS")
{
    // Symmetric (4,3): u = {a} with {c,d} deleted satisfies |{a,c,d}| >= 3.
    Fbas f = generateSymmetric(4, 3);
    CHECK(containsSlice(f, NodeSet(4, {0}), 0, NodeSet(4, {2, 3})));
    CHECK(!containsSlice(f, NodeSet(4, {0}), 0, NodeSet(4, {2})));

    // Cross-check against explicit deletion of the expanded FBAS.
    NodeSet d(4, {2, 3});
    auto without = deleteNodes(expandSimple(f), d);
    // a is node 0 in both index spaces here.
    CHECK(isQuorum(without.fbas, NodeSet(2, {0})));
}

TEST_CASE("isQuorum lists the four quorums of the two-clique example")
{
    Fbas f = twoCliquesFbas();
    CHECK(isQuorum(f, NodeSet(7, {6})));
    CHECK(!isQuorum(f, NodeSet(7, {0, 1, 2})));
    CHECK(isQuorum(f, NodeSet(7, {0, 1, 2, 6})));
    CHECK(isQuorum(f, NodeSet(7, {3, 4, 5, 6})));
    CHECK(isQuorum(f, NodeSet::full(7)));
    CHECK(!isQuorum(f, NodeSet(7, {0, 6})));
    CHECK_THROWS_AS(isQuorum(f, NodeSet(7)), Error);
}

TEST_CASE("symmetric quorums are exactly the large-enough sets")
{
    for (uint32_t n = 1; n <= 8; ++n)
    {
        for (uint32_t k = 1; k <= n; ++k)
        {
            Fbas f = generateSymmetric(n, k);
            for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask)
            {
                NodeSet u(n);
                for (uint32_t v = 0; v < n; ++v)
                {
                    if (mask & (uint32_t(1) << v))
                    {
                        u.insert(v);
                    }
                }
                CHECK(isQuorum(f, u) == (u.size() >= k));
            }
        }
    }
}

TEST_CASE("greatestQuorum shrinks to the right fixed point")
{
    Fbas f = twoCliquesFbas();
    NodeSet none(7);

    CHECK(greatestQuorum(f, NodeSet(7, {0, 1, 2, 3, 4, 5})).empty());
    CHECK(greatestQuorum(f, NodeSet(7, {3, 4, 5, 6}), NodeSet(7, {3}),
                         none) == NodeSet(7, {3, 4, 5, 6}));
    // The greatest quorum inside {0,1,6} is {6}, which misses the pin 0.
    CHECK(greatestQuorum(f, NodeSet(7, {0, 1, 6}), NodeSet(7, {0}), none)
              .empty());
    CHECK(greatestQuorum(f, NodeSet::full(7)) == NodeSet::full(7));

    CHECK_THROWS_AS(greatestQuorum(f, NodeSet(7, {1}), NodeSet(7, {0}), none),
                    Error);
}

TEST_CASE("containsProperSubQuorum")
{
    Fbas f = twoCliquesFbas();
    CHECK(containsProperSubQuorum(f, NodeSet(7, {0, 1, 2, 6})));
    CHECK(!containsProperSubQuorum(f, NodeSet(7, {6})));
    CHECK(!containsProperSubQuorum(generateSymmetric(4, 3),
                                   NodeSet(4, {0, 1, 2})));
}

TEST_CASE("enumerateQuorums emits each quorum once, greatest first")
{
    Fbas f = twoCliquesFbas();
    auto all = collectQuorums(f, EnumMode::kAll, NodeSet(7), 1000);
    REQUIRE(all.size() == 4);
    CHECK(all[0] == NodeSet::full(7));
    auto s = sorted(all);
    CHECK(s[0] == NodeSet::full(7));
    CHECK(s[1] == NodeSet(7, {0, 1, 2, 6}));
    CHECK(s[2] == NodeSet(7, {3, 4, 5, 6}));
    CHECK(s[3] == NodeSet(7, {6}));
}

TEST_CASE("lone voters have every non-empty subset as a quorum")
{
    auto all = collectQuorums(loneVoters(3), EnumMode::kAll, NodeSet(3), 100);
    CHECK(all.size() == 7);
}

TEST_CASE("minimal quorum enumeration respects the size bound")
{
    // Two-clique example: {6} is the only minimal quorum within half of 7.
    auto mins =
        collectQuorums(twoCliquesFbas(), EnumMode::kMinimalBounded, NodeSet(7),
                       100);
    REQUIRE(mins.size() == 1);
    CHECK(mins[0] == NodeSet(7, {6}));

    // Pairwise-trust example with 4 nodes: all six 2-element subsets.
    Fbas two = generateSymmetric(4, 2);
    auto pairs =
        collectQuorums(two, EnumMode::kMinimalBounded, NodeSet(4), 100);
    CHECK(pairs.size() == 6);
    for (auto const& q : pairs)
    {
        CHECK(q.size() == 2);
    }

    // Symmetric (4,3): no quorum fits within half the universe.
    CHECK(collectQuorums(generateSymmetric(4, 3), EnumMode::kMinimalBounded,
                         NodeSet(4), 100)
              .empty());
    // Without the bound, the four 3-element quorums appear.
    CHECK(collectQuorums(generateSymmetric(4, 3), EnumMode::kMinimalAll,
                         NodeSet(4), 100)
              .size() == 4);
}

TEST_CASE("quorum intersection on the running examples")
{
    CHECK(quorumIntersection(twoCliquesFbas()).intersects);

    auto split = quorumIntersection(generateSymmetric(4, 2));
    REQUIRE(!split.intersects);
    REQUIRE(split.witness.has_value());
    auto const& [q1, q2] = *split.witness;
    CHECK(!q1.intersects(q2));
    CHECK(isQuorum(generateSymmetric(4, 2), q1));
    CHECK(isQuorum(generateSymmetric(4, 2), q2));

    for (uint32_t n = 1; n <= 9; ++n)
    {
        for (uint32_t k = 1; k <= n; ++k)
        {
            CHECK(quorumIntersection(generateSymmetric(n, k)).intersects ==
                  (2 * k > n));
        }
    }
}

TEST_CASE("quorum intersection under deletion follows the deletion law")
{
    // (V,k) without D has quorums of size >= max(1, k - |D|).
    for (uint32_t n = 2; n <= 7; ++n)
    {
        for (uint32_t k = 1; k <= n; ++k)
        {
            Fbas f = generateSymmetric(n, k);
            for (uint32_t dmask = 0; dmask < (uint32_t(1) << n); ++dmask)
            {
                NodeSet d(n);
                for (uint32_t v = 0; v < n; ++v)
                {
                    if (dmask & (uint32_t(1) << v))
                    {
                        d.insert(v);
                    }
                }
                uint32_t left = n - d.size();
                uint32_t need = k > d.size() ? k - d.size() : 1;
                bool expect = left == 0 || need > left / 2.0;
                CHECK(quorumIntersection(f, d).intersects == expect);
            }
        }
    }
}

TEST_CASE("scc preprocessing agrees with the plain check")
{
    CHECK(quorumIntersectionWithSccPreprocessing(twoCliquesFbas()).intersects);

    auto lone = quorumIntersectionWithSccPreprocessing(loneVoters(2));
    REQUIRE(!lone.intersects);
    REQUIRE(lone.witness.has_value());
    CHECK(lone.witness->first.size() == 1);
    CHECK(lone.witness->second.size() == 1);
    CHECK(!lone.witness->first.intersects(lone.witness->second));

    Rng rng(0x5ccf);
    for (int round = 0; round < 150; ++round)
    {
        uint32_t n = 1 + uint32_t(rng.nextBelow(8));
        Fbas f = round % 2 == 0 ? randomGeneralFbas(rng, n)
                                : randomSimpleFbas(rng, n);
        auto plain = quorumIntersection(f);
        auto pre = quorumIntersectionWithSccPreprocessing(f);
        CHECK(plain.intersects == pre.intersects);
        if (!pre.intersects)
        {
            auto const& [q1, q2] = *pre.witness;
            CHECK(isQuorum(f, q1));
            CHECK(isQuorum(f, q2));
            CHECK(!q1.intersects(q2));
        }
    }
}

TEST_CASE("minIntersectionSize of the running examples")
{
    CHECK(minIntersectionSize(twoCliquesFbas()) == 1);
    // A single-quorum FBAS has no quorum pair to measure.
    std::vector<NodeSet> q(3, NodeSet::full(3));
    std::vector<uint32_t> t(3, 3);
    CHECK(!minIntersectionSize(makeSimple(3, q, t)).has_value());
    // Disjoint quorums meet in zero nodes.
    CHECK(minIntersectionSize(generateSymmetric(4, 2)) == 0);
    // Symmetric (5,4): two 4-subsets share at least 3 nodes.
    CHECK(minIntersectionSize(generateSymmetric(5, 4)) == 3);
}

TEST_CASE("union of any two quorums is a quorum")
{
    Rng rng(0xdeed);
    for (int round = 0; round < 60; ++round)
    {
        uint32_t n = 1 + uint32_t(rng.nextBelow(7));
        Fbas f = randomGeneralFbas(rng, n);
        auto quorums = collectQuorums(f, EnumMode::kAll, NodeSet(n), 10000);
        for (size_t i = 0; i < quorums.size(); ++i)
        {
            for (size_t j = i + 1; j < quorums.size(); ++j)
            {
                CHECK(isQuorum(f, quorums[i] | quorums[j]));
            }
        }
    }
}

TEST_CASE("witnesses are valid whenever intersection fails")
{
    Rng rng(0x3117);
    for (int round = 0; round < 150; ++round)
    {
        uint32_t n = 1 + uint32_t(rng.nextBelow(8));
        Fbas f = round % 2 == 0 ? randomGeneralFbas(rng, n)
                                : randomSimpleFbas(rng, n);
        auto res = quorumIntersection(f);
        if (!res.intersects)
        {
            auto const& [q1, q2] = *res.witness;
            CHECK(isQuorum(f, q1));
            CHECK(isQuorum(f, q2));
            CHECK(!q1.intersects(q2));
            // The first witness is a minimal quorum within half the universe.
            CHECK(2 * q1.size() <= n);
            CHECK(!containsProperSubQuorum(f, q1));
        }
    }
}

TEST_CASE("deletion-parametrized results match materialized deletion")
{
    Rng rng(0xde1e7e);
    for (int round = 0; round < 40; ++round)
    {
        uint32_t n = 2 + uint32_t(rng.nextBelow(6));
        Fbas f = randomGeneralFbas(rng, n);
        for (int trial = 0; trial < 6; ++trial)
        {
            NodeSet d(n);
            for (uint32_t v = 0; v < n; ++v)
            {
                if (rng.nextBool(0.3))
                {
                    d.insert(v);
                }
            }
            auto without = deleteNodes(f, d);
            if (without.fbas.isEmpty())
            {
                CHECK(quorumIntersection(f, d).intersects);
                continue;
            }
            auto direct = sorted(
                collectQuorums(without.fbas, EnumMode::kAll,
                               NodeSet(without.fbas.universe()), 10000));
            auto threaded =
                sorted(collectQuorums(f, EnumMode::kAll, d, 10000));
            REQUIRE(direct.size() == threaded.size());
            for (size_t i = 0; i < direct.size(); ++i)
            {
                NodeSet lifted(n);
                for (NodeId v : direct[i])
                {
                    lifted.insert(without.toParent[v]);
                }
                CHECK(lifted == threaded[i]);
            }
            CHECK(quorumIntersection(f, d).intersects ==
                  !bruteDisjointQuorums(without.fbas).has_value());
        }
    }
}

TEST_CASE("preprocessing catches a quorum outside the greatest component")
{
    // Node 1 trusts itself or both nodes; node 0 only itself. The greatest
    // component is {0}, but {1} is a quorum of its own component, so the
    // preprocessed check reports the split without descending further.
    std::vector<std::vector<NodeSet>> slices(2);
    slices[0] = {NodeSet(2, {0})};
    slices[1] = {NodeSet(2, {1}), NodeSet(2, {0, 1})};
    Fbas f = makeGeneral(2, slices);

    auto part = sccPartition(buildTrustGraph(f));
    REQUIRE(part.greatest.has_value());
    CHECK(part.components[*part.greatest] == NodeSet(2, {0}));

    auto res = quorumIntersectionWithSccPreprocessing(f);
    REQUIRE(!res.intersects);
    CHECK(!res.witness->first.intersects(res.witness->second));
    CHECK(isQuorum(f, res.witness->first));
    CHECK(isQuorum(f, res.witness->second));
    CHECK(!quorumIntersection(f).intersects);
}
