// Copyright 2026 the fbaskit developers. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include <doctest.h>

#include "model.hpp"
#include "oracles.hpp"
#include "quorums.hpp"
#include "rng.hpp"
#include "slice_defs.hpp"

using namespace fbas;

namespace
{

// The seven-node FBAS with two three-node cliques both trusting node 7
// (index 6). Used all over the suite.
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

} // namespace

TEST_CASE("general construction accepts the two-clique example")
{
    Fbas f = twoCliquesFbas();
    CHECK(f.universe() == 7);
    CHECK(!f.isSimple());
    CHECK(f.general().slices[0].count() == 1);
}

TEST_CASE("general construction rejects a slice missing its owner")
{
    std::vector<std::vector<NodeSet>> slices(2);
    slices[0] = {NodeSet(2, {1})};
    slices[1] = {NodeSet(2, {1})};
    try
    {
        makeGeneral(2, slices);
        CHECK(false);
    }
    catch (Error const& e)
    {
        CHECK(e.code() == ErrorCode::kMembershipViolation);
    }
}

TEST_CASE("general construction rejects empty slice lists and duplicates")
{
    std::vector<std::vector<NodeSet>> slices(1);
    CHECK_THROWS_AS(makeGeneral(1, slices), Error);

    slices[0] = {NodeSet(1, {0}), NodeSet(1, {0})};
    try
    {
        makeGeneral(1, slices);
        CHECK(false);
    }
    catch (Error const& e)
    {
        CHECK(e.code() == ErrorCode::kDuplicateSlice);
    }
}

TEST_CASE("single node FBAS is valid")
{
    Fbas f = makeGeneral(1, {{NodeSet(1, {0})}});
    CHECK(f.universe() == 1);
    CHECK(fbasSize(f) == 2);
}

TEST_CASE("simple construction validates membership and threshold")
{
    CHECK_NOTHROW(generateSymmetric(4, 3));

    // q(1) = {1,2,3} with n = 4 is out of range.
    std::vector<NodeSet> q{NodeSet(3, {0, 1, 2}), NodeSet(3, {1}),
                           NodeSet(3, {2})};
    std::vector<uint32_t> t{4, 1, 1};
    try
    {
        makeSimple(3, q, t);
        CHECK(false);
    }
    catch (Error const& e)
    {
        CHECK(e.code() == ErrorCode::kThresholdOutOfRange);
    }

    // v not in q(v).
    q[1] = NodeSet(3, {0});
    t[0] = 1;
    CHECK_THROWS_AS(makeSimple(3, q, t), Error);
}

TEST_CASE("lone-voter simple FBAS")
{
    std::vector<NodeSet> q;
    std::vector<uint32_t> t;
    for (uint32_t v = 0; v < 4; ++v)
    {
        q.push_back(NodeSet(4, {v}));
        t.push_back(1);
    }
    Fbas f = makeSimple(4, std::move(q), std::move(t));
    CHECK(f.isSimple());
    CHECK(fbasSize(f) == 4 + 4);
}

TEST_CASE("expandSimple produces all threshold subsets containing the owner")
{
    // Symmetric 3 nodes, k = 2: node 0 gets {0,1} and {0,2}.
    Fbas f = generateSymmetric(3, 2);
    Fbas g = expandSimple(f);
    auto const& fam = g.general().slices[0];
    CHECK(fam.count() == 2);
    CHECK(fam.slice(0) == NodeSet(3, {0, 1}));
    CHECK(fam.slice(1) == NodeSet(3, {0, 2}));

    // Symmetric 4 nodes, k = 3: binomial(3, 2) = 3 slices per node.
    Fbas g43 = expandSimple(generateSymmetric(4, 3));
    for (uint32_t v = 0; v < 4; ++v)
    {
        CHECK(g43.general().slices[v].count() == 3);
    }

    // k = n gives a single slice, the whole node set.
    Fbas gnn = expandSimple(generateSymmetric(5, 5));
    for (uint32_t v = 0; v < 5; ++v)
    {
        CHECK(gnn.general().slices[v].count() == 1);
        CHECK(gnn.general().slices[v].slice(0) == NodeSet::full(5));
    }
}

TEST_CASE("expansion cap trips")
{
    Fbas f = generateSymmetric(40, 20);
    CHECK_THROWS_AS(expandSimple(f, 1000), Error);
}

TEST_CASE("fbasSize for the examples")
{
    CHECK(fbasSize(twoCliquesFbas()) == 7 + (4 + 4 + 4 + 4 + 4 + 4 + 1));
    CHECK(fbasSize(generateSymmetric(4, 3)) == 4 + 4 * 4);
    CHECK(fbasSize(makeGeneral(1, {{NodeSet(1, {0})}})) == 2);
}

TEST_CASE("simple and expanded FBAS agree on every subset")
{
    Rng rng(0xfba5);
    for (int round = 0; round < 50; ++round)
    {
        uint32_t n = 2 + uint32_t(rng.nextBelow(7)); // up to 8 nodes
        Fbas simple = randomSimpleFbas(rng, n);
        Fbas expanded = expandSimple(simple);
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
            CHECK(isQuorum(simple, u) == isQuorum(expanded, u));
        }
    }
}

TEST_CASE("name table round trips")
{
    NameTable names({"alpha", "beta", "gamma"});
    CHECK(names.size() == 3);
    CHECK(names.name(1) == "beta");
    CHECK(names.indexOf("gamma") == 2);
    CHECK(names.indexOf("delta") == NameTable::kNone);
}
