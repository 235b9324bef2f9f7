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

// Reachability by brute-force closure, as an SCC cross-check.
std::vector<NodeSet>
reachability(TrustGraph const& g)
{
    std::vector<NodeSet> reach(g.universe, NodeSet(g.universe));
    for (uint32_t v = 0; v < g.universe; ++v)
    {
        NodeSet r(g.universe, {v});
        bool grew = true;
        while (grew)
        {
            grew = false;
            NodeSet next = r;
            for (NodeId u : r)
            {
                next |= g.out[u];
            }
            if (!(next == r))
            {
                r = next;
                grew = true;
            }
        }
        reach[v] = r;
    }
    return reach;
}

} // namespace

TEST_CASE("trust graph of the two-clique example")
{
    Fbas f = twoCliquesFbas();
    TrustGraph g = buildTrustGraph(f);
    CHECK(g.out[0] == NodeSet(7, {0, 1, 2, 6}));
    CHECK(g.out[4] == NodeSet(7, {3, 4, 5, 6}));
    CHECK(g.out[6] == NodeSet(7, {6}));
}

TEST_CASE("complete graph for symmetric FBAS and self-loops for lone voters")
{
    TrustGraph sym = buildTrustGraph(generateSymmetric(5, 3));
    for (uint32_t v = 0; v < 5; ++v)
    {
        CHECK(sym.out[v] == NodeSet::full(5));
    }
    TrustGraph lone = buildTrustGraph(loneVoters(3));
    for (uint32_t v = 0; v < 3; ++v)
    {
        CHECK(lone.out[v] == NodeSet(3, {v}));
    }
}

TEST_CASE("scc partition of the two-clique example")
{
    auto part = sccPartition(buildTrustGraph(twoCliquesFbas()));
    REQUIRE(part.components.size() == 3);
    std::vector<NodeSet> comps = part.components;
    std::sort(comps.begin(), comps.end(),
              [](NodeSet const& a, NodeSet const& b) {
                  return a.first() < b.first();
              });
    CHECK(comps[0] == NodeSet(7, {0, 1, 2}));
    CHECK(comps[1] == NodeSet(7, {3, 4, 5}));
    CHECK(comps[2] == NodeSet(7, {6}));
    REQUIRE(part.greatest.has_value());
    CHECK(part.components[*part.greatest] == NodeSet(7, {6}));
    REQUIRE(part.maximal.size() == 1);
    CHECK(part.components[part.maximal[0]] == NodeSet(7, {6}));
}

TEST_CASE("complete graph forms one greatest component")
{
    auto part = sccPartition(buildTrustGraph(generateSymmetric(6, 4)));
    REQUIRE(part.components.size() == 1);
    CHECK(part.components[0] == NodeSet::full(6));
    CHECK(part.greatest.has_value());
}

TEST_CASE("lone voters form singleton components with no greatest")
{
    auto part = sccPartition(buildTrustGraph(loneVoters(3)));
    CHECK(part.components.size() == 3);
    CHECK(!part.greatest.has_value());
    CHECK(part.maximal.size() == 3);
}

TEST_CASE("partition covers the universe disjointly")
{
    Rng rng(0x5cc);
    for (int round = 0; round < 100; ++round)
    {
        uint32_t n = 1 + uint32_t(rng.nextBelow(8));
        Fbas f = randomGeneralFbas(rng, n);
        auto g = buildTrustGraph(f);
        auto part = sccPartition(g);
        NodeSet all(n);
        uint32_t total = 0;
        for (auto const& comp : part.components)
        {
            CHECK(!comp.intersects(all));
            all |= comp;
            total += comp.size();
        }
        CHECK(all == NodeSet::full(n));
        CHECK(total == n);

        // Cross-check strong connectivity against reachability closures.
        auto reach = reachability(g);
        for (uint32_t v = 0; v < n; ++v)
        {
            for (uint32_t u = 0; u < n; ++u)
            {
                bool together = part.componentOf[v] == part.componentOf[u];
                bool mutual = reach[v].contains(u) && reach[u].contains(v);
                CHECK(together == mutual);
            }
        }

        if (part.greatest.has_value())
        {
            NodeSet const& core = part.components[*part.greatest];
            for (uint32_t v = 0; v < n; ++v)
            {
                CHECK(reach[v].intersects(core));
            }
        }
    }
}

TEST_CASE("trust clusters of the two-clique example")
{
    Fbas f = twoCliquesFbas();
    auto g = buildTrustGraph(f);
    CHECK(isTrustCluster(g, NodeSet(7, {6})));
    CHECK(!isTrustCluster(g, NodeSet(7, {0, 1, 2})));
    CHECK(isTrustCluster(g, NodeSet(7, {0, 1, 2, 6})));
    CHECK(isTrustCluster(g, NodeSet::full(7)));
    CHECK(isTrustCluster(g, NodeSet(7)));
}

TEST_CASE("every trust cluster is a quorum")
{
    Rng rng(0xc157e4);
    for (int round = 0; round < 80; ++round)
    {
        uint32_t n = 1 + uint32_t(rng.nextBelow(7));
        Fbas f = randomGeneralFbas(rng, n);
        auto g = buildTrustGraph(f);
        for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask)
        {
            NodeSet z(n);
            for (uint32_t v = 0; v < n; ++v)
            {
                if (mask & (uint32_t(1) << v))
                {
                    z.insert(v);
                }
            }
            if (isTrustCluster(g, z))
            {
                CHECK(isQuorum(f, z));
            }
        }
    }
}

TEST_CASE("restriction keeps slices and quorums")
{
    Fbas f = twoCliquesFbas();

    auto solo = restrictToCluster(f, NodeSet(7, {6}));
    CHECK(solo.fbas.universe() == 1);
    CHECK(solo.fbas.general().slices[0].slice(0) == NodeSet(1, {0}));
    CHECK(solo.toParent == std::vector<NodeId>{6});

    auto whole = restrictToCluster(f, NodeSet::full(7));
    CHECK(whole.fbas.universe() == 7);
    CHECK(fbasSize(whole.fbas) == fbasSize(f));

    CHECK_THROWS_AS(restrictToCluster(f, NodeSet(7, {0, 1, 2})), Error);
}

TEST_CASE("quorums of a restriction are quorums of the whole FBAS")
{
    Rng rng(0x7e57);
    for (int round = 0; round < 60; ++round)
    {
        uint32_t n = 2 + uint32_t(rng.nextBelow(7));
        Fbas f = randomGeneralFbas(rng, n);
        auto g = buildTrustGraph(f);
        for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask)
        {
            NodeSet z(n);
            for (uint32_t v = 0; v < n; ++v)
            {
                if (mask & (uint32_t(1) << v))
                {
                    z.insert(v);
                }
            }
            if (!isTrustCluster(g, z))
            {
                continue;
            }
            auto restricted = restrictToCluster(f, z);
            for (auto const& q :
                 collectQuorums(restricted.fbas, EnumMode::kAll,
                                NodeSet(restricted.fbas.universe()), 10000))
            {
                NodeSet lifted(n);
                for (NodeId v : q)
                {
                    lifted.insert(restricted.toParent[v]);
                }
                CHECK(isQuorum(f, lifted));
            }
        }
    }
}

TEST_CASE("restriction equals deletion of the complement")
{
    Rng rng(0x2e57);
    int clusters = 0;
    for (int round = 0; round < 60; ++round)
    {
        uint32_t n = 2 + uint32_t(rng.nextBelow(6));
        Fbas f = randomGeneralFbas(rng, n);
        auto g = buildTrustGraph(f);
        for (uint32_t mask = 1; mask + 1 < (uint32_t(1) << n); ++mask)
        {
            NodeSet z(n);
            for (uint32_t v = 0; v < n; ++v)
            {
                if (mask & (uint32_t(1) << v))
                {
                    z.insert(v);
                }
            }
            if (!isTrustCluster(g, z))
            {
                continue;
            }
            ++clusters;
            auto restricted = restrictToCluster(f, z);
            auto deleted = deleteNodes(f, z.complement());
            REQUIRE(restricted.toParent == deleted.toParent);
            REQUIRE(restricted.fbas.universe() == deleted.fbas.universe());
            for (uint32_t v = 0; v < restricted.fbas.universe(); ++v)
            {
                auto const& a = restricted.fbas.general().slices[v];
                auto const& b = deleted.fbas.general().slices[v];
                REQUIRE(a.count() == b.count());
                std::vector<NodeSet> sa, sb;
                for (uint32_t i = 0; i < a.count(); ++i)
                {
                    sa.push_back(a.slice(i));
                    sb.push_back(b.slice(i));
                }
                auto byWords = [](NodeSet const& x, NodeSet const& y) {
                    return x.toVector() < y.toVector();
                };
                std::sort(sa.begin(), sa.end(), byWords);
                std::sort(sb.begin(), sb.end(), byWords);
                CHECK(sa == sb);
            }
        }
    }
    CHECK(clusters > 20);
}
