// Copyright 2026 the fbaskit developers. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
//
// End-to-end acceptance suite. Each criterion prints one PASS / FAIL line;
// the process exits with the number of failed criteria.

#include "format.hpp"
#include "intactness.hpp"
#include "oracles.hpp"
#include "probability.hpp"
#include "quorums.hpp"
#include "slice_defs.hpp"
#include "trust_graph.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace fbas;

namespace
{

std::string gCliPath;

struct CheckFailure
{
    std::string message;
};

void
expect(bool condition, std::string const& what)
{
    if (!condition)
    {
        throw CheckFailure{what};
    }
}

template <typename T>
void
expectEq(T const& got, T const& want, std::string const& what)
{
    if (!(got == want))
    {
        std::ostringstream os;
        os << what << " (got " << got << ", want " << want << ")";
        throw CheckFailure{os.str()};
    }
}

void
expectNear(double got, double want, double tolerance, std::string const& what)
{
    if (!(std::abs(got - want) <= tolerance))
    {
        std::ostringstream os;
        os.precision(15);
        os << what << " (got " << got << ", want " << want << " +- "
           << tolerance << ")";
        throw CheckFailure{os.str()};
    }
}

int gFailures = 0;
int gIndex = 0;

void
criterion(std::string const& name, double timeLimitSeconds,
          std::function<void()> const& body)
{
    ++gIndex;
    auto start = std::chrono::steady_clock::now();
    std::string failure;
    try
    {
        body();
    }
    catch (CheckFailure const& f)
    {
        failure = f.message;
    }
    catch (std::exception const& e)
    {
        failure = std::string("exception: ") + e.what();
    }
    std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start;
    if (failure.empty() && timeLimitSeconds > 0 &&
        elapsed.count() > timeLimitSeconds)
    {
        std::ostringstream os;
        os << "time limit exceeded (" << elapsed.count() << " s > "
           << timeLimitSeconds << " s)";
        failure = os.str();
    }
    if (failure.empty())
    {
        std::printf("[%2d/10] PASS %-34s (%.2f s)\n", gIndex, name.c_str(),
                    elapsed.count());
    }
    else
    {
        ++gFailures;
        std::printf("[%2d/10] FAIL %-34s (%.2f s): %s\n", gIndex,
                    name.c_str(), elapsed.count(), failure.c_str());
    }
    std::fflush(stdout);
}

NodeSet
maskSet(uint32_t n, uint32_t mask)
{
    NodeSet s(n);
    for (uint32_t v = 0; v < n; ++v)
    {
        if (mask & (uint32_t(1) << v))
        {
            s.insert(v);
        }
    }
    return s;
}

std::vector<NodeSet>
sortedSets(std::vector<NodeSet> sets)
{
    std::sort(sets.begin(), sets.end(),
              [](NodeSet const& a, NodeSet const& b) {
                  return a.toVector() < b.toVector();
              });
    return sets;
}

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

// Six organizations, five of three nodes and one of five, thresholds 2/3,
// root threshold 5: the 20-node hierarchy.
SliceDefinition
sixOrgDefinition()
{
    SliceDefinition d;
    d.threshold = 5;
    uint32_t next = 0;
    for (uint32_t org = 0; org < 6; ++org)
    {
        uint32_t size = org == 5 ? 5 : 3;
        SliceDefinition child;
        child.threshold = org == 5 ? 3 : 2;
        child.validators = NodeSet(20);
        for (uint32_t i = 0; i < size; ++i)
        {
            child.validators.insert(next++);
        }
        d.children.push_back(std::move(child));
    }
    return d;
}

std::vector<NodeSet>
evenOrgs(uint32_t orgCount, uint32_t orgSize)
{
    uint32_t n = orgCount * orgSize;
    std::vector<NodeSet> orgs;
    for (uint32_t o = 0; o < orgCount; ++o)
    {
        NodeSet members(n);
        for (uint32_t i = 0; i < orgSize; ++i)
        {
            members.insert(o * orgSize + i);
        }
        orgs.push_back(std::move(members));
    }
    return orgs;
}

Fbas
hierarchicalFbas(uint32_t orgCount, uint32_t orgSize, uint32_t orgPick,
                 uint32_t nodePick)
{
    auto orgs = evenOrgs(orgCount, orgSize);
    uint32_t n = orgCount * orgSize;
    std::vector<NodeSet> pool;
    for (auto const& combo : kSubsets(NodeSet::full(orgCount), orgPick))
    {
        std::vector<std::vector<NodeSet>> families;
        for (NodeId o : combo)
        {
            families.push_back(kSubsets(orgs[o], nodePick));
        }
        for (auto const& u : productSetUnion(families))
        {
            pool.push_back(u);
        }
    }
    std::vector<std::vector<NodeSet>> slices(n);
    for (uint32_t v = 0; v < n; ++v)
    {
        for (auto const& u : pool)
        {
            if (u.contains(v))
            {
                slices[v].push_back(u);
            }
        }
    }
    return makeGeneral(n, slices);
}

Fbas
familyMember(Rng& rng, int family, uint32_t n)
{
    switch (family)
    {
    case 0:
        return randomGeneralFbas(rng, n);
    case 1:
        return randomSimpleFbas(rng, n);
    case 2:
        return randomSymmetricFbas(rng, n);
    default:
        return randomOrgTreeFbas(rng, std::max<uint32_t>(n, 3));
    }
}

// ------------------------------------------------------------------

void
criterion1()
{
    Fbas f = twoCliquesFbas();

    auto quorums = sortedSets(collectQuorums(f, EnumMode::kAll, NodeSet(7),
                                             100));
    std::vector<NodeSet> expected = sortedSets(
        {NodeSet(7, {0, 1, 2, 6}), NodeSet(7, {3, 4, 5, 6}), NodeSet(7, {6}),
         NodeSet::full(7)});
    expect(quorums == expected, "quorum list of the two-clique example");

    expect(quorumIntersection(f).intersects, "intersection holds");
    expect(quorumIntersectionWithSccPreprocessing(f).intersects,
           "intersection holds with preprocessing");

    expectEq<uint32_t>(minIntersectionSize(f).value_or(0), 1,
                       "minimum pairwise intersection");

    auto dsets = sortedSets(bruteDsets(f));
    std::vector<NodeSet> wantDsets = sortedSets(
        {NodeSet(7), NodeSet(7, {0, 1, 2}), NodeSet(7, {3, 4, 5}),
         NodeSet(7, {0, 1, 2, 3, 4, 5}), NodeSet::full(7)});
    expect(dsets == wantDsets, "DSet family");
    for (auto const& d : wantDsets)
    {
        expect(isDset(f, d), "isDset confirms each family member");
    }

    auto part = sccPartition(buildTrustGraph(f));
    expectEq<size_t>(part.components.size(), 3, "component count");
    std::set<std::vector<NodeId>> comps;
    for (auto const& c : part.components)
    {
        comps.insert(c.toVector());
    }
    expect(comps.count({0, 1, 2}) == 1 && comps.count({3, 4, 5}) == 1 &&
               comps.count({6}) == 1,
           "component content");
    expect(part.greatest.has_value() &&
               part.components[*part.greatest] == NodeSet(7, {6}),
           "greatest component is node 7");
}

void
criterion2()
{
    auto pool = generateSlices(sixOrgDefinition());
    expectEq<size_t>(pool.size(), 4293, "generated subset count");

    uint32_t n = 20;
    std::vector<std::vector<NodeSet>> slices(n);
    for (uint32_t v = 0; v < n; ++v)
    {
        for (auto const& u : pool)
        {
            if (u.contains(v))
            {
                slices[v].push_back(u);
            }
        }
    }
    Fbas f = makeGeneral(n, slices);
    for (uint32_t v = 0; v < 15; ++v)
    {
        expectEq<uint32_t>(f.general().slices[v].count(), 2322,
                           "slice count of a three-node-org member");
    }
    for (uint32_t v = 15; v < 20; ++v)
    {
        expectEq<uint32_t>(f.general().slices[v].count(), 2430,
                           "slice count of a five-node-org member");
    }

    uint64_t quorums = 0;
    QuorumEnumerator en(f, EnumMode::kAll);
    while (en.next().has_value())
    {
        ++quorums;
    }
    expectEq<uint64_t>(quorums, 37888, "quorum count");

    expectEq<uint32_t>(minIntersectionSize(f).value_or(0), 4,
                       "minimum pairwise intersection");
}

void
criterion3()
{
    auto of = generateOrgFbas({3, 3, 3, 3, 3, 5}, {2, 2, 2, 2, 2, 3}, 5);
    Fbas const& f = of.fbas;
    for (uint32_t v = 0; v < 15; ++v)
    {
        expectEq<uint32_t>(f.general().slices[v].count(), 3132,
                           "slice count outside the five-node org");
    }
    for (uint32_t v = 15; v < 20; ++v)
    {
        expectEq<uint32_t>(f.general().slices[v].count(), 2673,
                           "slice count inside the five-node org");
    }

    uint64_t quorums = 0;
    QuorumEnumerator en(f, EnumMode::kAll);
    while (en.next().has_value())
    {
        ++quorums;
    }
    expectEq<uint64_t>(quorums, 114688, "quorum count");

    expect(quorumIntersection(f).intersects, "plain intersection check");
    expect(quorumIntersectionWithSccPreprocessing(f).intersects,
           "preprocessed intersection check");

    expectEq<uint32_t>(minIntersectionSize(f).value_or(0), 4,
                       "minimum pairwise intersection");
}

void
criterion4()
{
    for (uint32_t n = 1; n <= 10; ++n)
    {
        for (uint32_t k = 1; k <= n; ++k)
        {
            Fbas f = generateSymmetric(n, k);

            // Quorums are exactly the sets of size >= k.
            for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask)
            {
                NodeSet u = maskSet(n, mask);
                expect(isQuorum(f, u) == (u.size() >= k),
                       "symmetric quorum law");
            }
            expect(quorumIntersection(f).intersects == (2 * k > n),
                   "symmetric intersection law");

            // Deletion law over every deletion set and every survivor set.
            for (uint32_t dmask = 0; dmask < (uint32_t(1) << n); ++dmask)
            {
                NodeSet d = maskSet(n, dmask);
                uint32_t need = k > d.size() ? k - d.size() : 1;
                uint32_t rest = n - d.size();
                for (uint32_t qmask = 1; qmask < (uint32_t(1) << n);
                     ++qmask)
                {
                    if (qmask & dmask)
                    {
                        continue;
                    }
                    NodeSet q = maskSet(n, qmask);
                    expect(isQuorum(f, q, d) == (q.size() >= need),
                           "symmetric deletion law");
                }
                // DSet family matches the closed form.
                expect(isDset(f, d) == isSymmetricDset(n, k, d),
                       "symmetric DSet law");
                (void)rest;
            }
        }
    }
}

void
criterion5()
{
    for (uint32_t m = 1; m <= 2; ++m)
    {
        uint32_t n = 3 * m + 1;
        uint32_t k = 2 * m + 1;
        Fbas f = generateSymmetric(n, k);
        for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask)
        {
            NodeSet b = maskSet(n, mask);
            if (b.size() > m)
            {
                continue;
            }
            auto rep = intactNodes(f, b);
            expect(rep.intact == b.complement(),
                   "no well-behaved node is befouled in the resilient "
                   "layout");
        }

        // Any smaller symmetric FBAS with intersection loses a well-behaved
        // node to some failure of size at most m.
        for (uint32_t small = 2; small <= 3 * m; ++small)
        {
            for (uint32_t kk = small / 2 + 1; kk <= small; ++kk)
            {
                Fbas g = generateSymmetric(small, kk);
                expect(quorumIntersection(g).intersects,
                       "candidate layout has intersection");
                bool someoneBefouled = false;
                for (uint32_t mask = 1;
                     mask < (uint32_t(1) << small) && !someoneBefouled;
                     ++mask)
                {
                    NodeSet b = maskSet(small, mask);
                    if (b.size() > m || b.size() >= small)
                    {
                        continue;
                    }
                    auto rep = intactNodes(g, b);
                    if (!(rep.intact == b.complement()))
                    {
                        someoneBefouled = true;
                    }
                }
                expect(someoneBefouled,
                       "a small failure befouls a well-behaved node below "
                       "the resilience bound");
            }
        }
    }
}

void
criterion6()
{
    Rng rng(0xacce97);
    for (int family = 0; family < 4; ++family)
    {
        int intactChecked = 0;
        for (int round = 0; round < 200; ++round)
        {
            uint32_t n = 1 + uint32_t(rng.nextBelow(8));
            Fbas f = familyMember(rng, family, n);
            uint32_t universe = f.universe();

            auto expected = sortedSets(bruteQuorums(f));
            auto got = sortedSets(
                collectQuorums(f, EnumMode::kAll, NodeSet(universe), 100000));
            expect(expected == got, "enumerateQuorums matches brute force");

            expect(quorumIntersection(f).intersects ==
                       !bruteDisjointQuorums(f).has_value(),
                   "quorumIntersection matches brute force");

            auto expectedMin = sortedSets(bruteMinimalQuorums(f, true));
            auto gotMin =
                sortedSets(collectQuorums(f, EnumMode::kMinimalBounded,
                                          NodeSet(universe), 100000));
            expect(expectedMin == gotMin,
                   "minimal quorum enumeration matches brute force");

            if (quorumIntersection(f).intersects)
            {
                ++intactChecked;
                NodeSet b(universe);
                for (uint32_t v = 0; v < universe; ++v)
                {
                    if (rng.nextBool(0.3))
                    {
                        b.insert(v);
                    }
                }
                expect(intactNodes(f, b).intact == bruteIntactNodes(f, b),
                       "intactNodes matches brute force");
            }

            // Delay instrumentation: one greatestQuorum call per visited
            // frame; only outputting frames spawn children, so a full run
            // costs at most 1 + outputs * |V| calls, and no gap exceeds the
            // residual frames of the chain.
            QuorumEnumerator en(f, EnumMode::kAll);
            uint64_t outputs = 0, total = 0;
            uint64_t gapBound = 1 + universe * (universe + 1) / 2;
            while (en.next().has_value())
            {
                ++outputs;
                total += en.gqCallsSinceLastYield();
                expect(en.gqCallsSinceLastYield() <= gapBound,
                       "per-gap greatestQuorum bound");
            }
            expect(total <= 1 + outputs * universe,
                   "amortized greatestQuorum bound");
        }
        expect(intactChecked >= 50, "enough intersecting instances");
    }
}

void
criterion7()
{
    // The four-node counterexample separating intact nodes from intact
    // sets.
    std::vector<std::vector<NodeSet>> slices(4);
    slices[0] = {NodeSet(4, {0, 1})};
    slices[1] = {NodeSet::full(4)};
    slices[2] = {NodeSet(4, {1, 2}), NodeSet(4, {2, 3})};
    slices[3] = {NodeSet(4, {1, 3}), NodeSet(4, {2, 3})};
    Fbas f = makeGeneral(4, slices);
    NodeSet b(4, {0});

    auto bQuorums = sortedSets(bruteBQuorums(f, b));
    std::vector<NodeSet> wantBQuorums = sortedSets(
        {NodeSet(4, {0}), NodeSet(4, {0, 2, 3}), NodeSet(4, {2, 3}),
         NodeSet::full(4)});
    expect(bQuorums == wantBQuorums, "B-quorum family");

    expect(isBIntactSet(f, b, NodeSet(4, {2, 3})), "{c,d} is a B-intact set");
    expect(intactNodes(f, b).intact.empty(), "no node is B-intact");
    expect(!hasSubsliceProperty(f, b), "the subslice property fails");

    // Theorem correspondence, exhaustively over a small corpus: every
    // B-intact node lies in a B-intact set, and under the subslice property
    // the two notions coincide.
    auto checkEquivalence = [](Fbas const& g) {
        uint32_t n = g.universe();
        for (uint32_t bmask = 0; bmask < (uint32_t(1) << n); ++bmask)
        {
            NodeSet bad = maskSet(n, bmask);
            // Side one: B-intact nodes by the DSet definition.
            NodeSet viaDsets(n);
            for (uint32_t dmask = 0; dmask < (uint32_t(1) << n); ++dmask)
            {
                NodeSet d = maskSet(n, dmask);
                if (!bad.subsetOf(d) || !bruteIsDset(g, d))
                {
                    continue;
                }
                viaDsets |= d.complement();
            }
            // Side two: union of all B-intact sets.
            auto bqs = bruteBQuorums(g, bad);
            NodeSet viaSets(n);
            for (auto const& candidate : bqs)
            {
                if (candidate.intersects(bad))
                {
                    continue;
                }
                bool ok = true;
                for (size_t i = 0; i < bqs.size() && ok; ++i)
                {
                    if (!bqs[i].intersects(candidate))
                    {
                        continue;
                    }
                    for (size_t j = i + 1; j < bqs.size(); ++j)
                    {
                        if (bqs[j].intersects(candidate) &&
                            !(bqs[i] & bqs[j]).intersects(candidate))
                        {
                            ok = false;
                            break;
                        }
                    }
                }
                if (ok)
                {
                    viaSets |= candidate;
                }
            }
            expect(viaDsets.subsetOf(viaSets),
                   "every B-intact node lies in a B-intact set");
            if (hasSubsliceProperty(g, bad))
            {
                expect(viaDsets == viaSets,
                       "equivalence under the subslice property");
            }
        }
    };

    checkEquivalence(f);

    // All simple three-node FBAS, exhaustively.
    {
        std::vector<std::pair<NodeSet, uint32_t>> perNode[3];
        for (uint32_t v = 0; v < 3; ++v)
        {
            for (uint32_t qmask = 0; qmask < 8; ++qmask)
            {
                if (!(qmask & (1u << v)))
                {
                    continue;
                }
                NodeSet q = maskSet(3, qmask);
                for (uint32_t t = 1; t <= q.size(); ++t)
                {
                    perNode[v].emplace_back(q, t);
                }
            }
        }
        for (auto const& [q0, t0] : perNode[0])
        {
            for (auto const& [q1, t1] : perNode[1])
            {
                for (auto const& [q2, t2] : perNode[2])
                {
                    Fbas g = makeSimple(3, {q0, q1, q2}, {t0, t1, t2});
                    checkEquivalence(g);
                }
            }
        }
    }

    // Randomized general and simple FBAS up to six nodes, plus every
    // symmetric layout.
    Rng rng(0x7404);
    for (int round = 0; round < 150; ++round)
    {
        uint32_t n = 2 + uint32_t(rng.nextBelow(5));
        checkEquivalence(round % 2 == 0 ? randomGeneralFbas(rng, n)
                                        : randomSimpleFbas(rng, n));
    }
    for (uint32_t n = 1; n <= 6; ++n)
    {
        for (uint32_t k = 1; k <= n; ++k)
        {
            checkEquivalence(generateSymmetric(n, k));
        }
    }
}

void
criterion8()
{
    // Exhaustive 3-CNF formulas with r <= 3 variables and m <= 3 clauses,
    // up to variable permutation, sign flips and clause order.
    uint64_t checked = 0;
    for (uint32_t r = 1; r <= 3; ++r)
    {
        // All clauses as sorted triples over the 2r literals.
        std::vector<std::array<Literal, 3>> clausePool;
        std::vector<Literal> literals;
        for (uint32_t v = 0; v < r; ++v)
        {
            literals.push_back({v, false});
            literals.push_back({v, true});
        }
        for (size_t i = 0; i < literals.size(); ++i)
        {
            for (size_t j = i; j < literals.size(); ++j)
            {
                for (size_t k = j; k < literals.size(); ++k)
                {
                    clausePool.push_back(
                        {literals[i], literals[j], literals[k]});
                }
            }
        }

        auto encodeLit = [&](Literal const& l, std::vector<uint32_t> const& perm,
                             uint32_t flips) {
            bool neg = l.negated ^ ((flips >> l.variable) & 1u);
            return perm[l.variable] * 2 + (neg ? 1 : 0);
        };
        std::vector<std::vector<uint32_t>> perms;
        {
            std::vector<uint32_t> p(r);
            for (uint32_t i = 0; i < r; ++i)
            {
                p[i] = i;
            }
            do
            {
                perms.push_back(p);
            } while (std::next_permutation(p.begin(), p.end()));
        }
        auto canonical = [&](std::vector<size_t> const& clauseIdx) {
            std::string best;
            for (auto const& perm : perms)
            {
                for (uint32_t flips = 0; flips < (1u << r); ++flips)
                {
                    std::vector<std::string> encoded;
                    for (size_t ci : clauseIdx)
                    {
                        std::array<uint32_t, 3> lits;
                        for (int i = 0; i < 3; ++i)
                        {
                            lits[i] =
                                encodeLit(clausePool[ci][i], perm, flips);
                        }
                        std::sort(lits.begin(), lits.end());
                        encoded.push_back(std::to_string(lits[0]) + "," +
                                          std::to_string(lits[1]) + "," +
                                          std::to_string(lits[2]));
                    }
                    std::sort(encoded.begin(), encoded.end());
                    std::string whole;
                    for (auto const& e : encoded)
                    {
                        whole += e;
                        whole += ';';
                    }
                    if (best.empty() || whole < best)
                    {
                        best = whole;
                    }
                }
            }
            return best;
        };

        std::set<std::string> seen;
        std::vector<size_t> picks;
        std::function<void(size_t, uint32_t)> walk = [&](size_t from,
                                                         uint32_t left) {
            if (!picks.empty())
            {
                if (seen.insert(canonical(picks)).second)
                {
                    CnfFormula phi;
                    phi.variables = r;
                    for (size_t ci : picks)
                    {
                        phi.clauses.push_back(clausePool[ci]);
                    }
                    auto reduced = reduce3Sat(phi);
                    expectEq<uint32_t>(reduced.fbas.universe(),
                                       1 + 3 * r +
                                           4 * uint32_t(phi.clauses.size()),
                                       "reduction node count");
                    bool sat = bruteSatisfiable(phi);
                    auto res = quorumIntersection(reduced.fbas);
                    expect(res.intersects == !sat,
                           "quorum split exactly for satisfiable formulas");
                    if (!res.intersects)
                    {
                        auto const& [q1, q2] = *res.witness;
                        expect(isQuorum(reduced.fbas, q1) &&
                                   isQuorum(reduced.fbas, q2) &&
                                   !q1.intersects(q2),
                               "witness quorums are disjoint");
                    }
                    ++checked;
                }
            }
            if (left == 0)
            {
                return;
            }
            for (size_t ci = from; ci < clausePool.size(); ++ci)
            {
                picks.push_back(ci);
                walk(ci, left - 1);
                picks.pop_back();
            }
        };
        walk(0, 3);
    }
    expect(checked >= 500, "enough canonical formulas were exercised");
}

void
criterion9()
{
    // At most one failure on the symmetric four-node FBAS.
    {
        Fbas f = generateSymmetric(4, 3);
        auto d = FailureDistribution::atMostOne(4, 0.6, {0.2, 0.1, 0.1, 0.0});
        auto all = intactProbabilityExactAll(f, d);
        double want[4] = {0.8, 0.9, 0.9, 1.0};
        for (uint32_t v = 0; v < 4; ++v)
        {
            expectNear(all[v].pIntact, want[v], 1e-12, "at-most-one value");
            expectNear(all[v].pIntactGivenWellBehaved, 1.0, 1e-12,
                       "at-most-one conditional");
        }
        auto mc = intactProbabilityMcAll(f, d, 100000, 0xfba5);
        for (uint32_t v = 0; v < 4; ++v)
        {
            expect(std::abs(mc[v].pIntact - want[v]) <=
                       3 * mc[v].stdError + 1e-9,
                   "at-most-one monte carlo within three sigma");
        }
    }

    // Independent failures on the same FBAS.
    {
        Fbas f = generateSymmetric(4, 3);
        auto d = FailureDistribution::independent(4, {0.2, 0.1, 0.1, 0.0});
        auto all = intactProbabilityExactAll(f, d);
        double want[4] = {0.792, 0.882, 0.882, 0.954};
        double wantCond[4] = {0.99, 0.98, 0.98, 0.954};
        for (uint32_t v = 0; v < 4; ++v)
        {
            expectNear(all[v].pIntact, want[v], 1e-9, "independent value");
            expectNear(all[v].pIntactGivenWellBehaved, wantCond[v], 1e-9,
                       "independent conditional");
        }
        auto mc = intactProbabilityMcAll(f, d, 100000, 0x5eed);
        for (uint32_t v = 0; v < 4; ++v)
        {
            expect(std::abs(mc[v].pIntact - want[v]) <=
                       3 * mc[v].stdError + 1e-9,
                   "independent monte carlo within three sigma");
        }
    }

    // Grouped Byzantine on the 12-node layouts.
    Fbas hier = hierarchicalFbas(4, 3, 3, 2);
    Fbas sym = generateSymmetric(12, 8);
    auto orgs = evenOrgs(4, 3);
    {
        auto d = FailureDistribution::groupedByzantine(
            12, orgs, std::vector<double>(4, 0.1),
            std::vector<double>(4, 0.01));
        auto hierAll = intactProbabilityExactAll(hier, d);
        double closed = hierarchy4IntactProbabilityByzantine(0.1, 0.01);
        for (uint32_t v = 0; v < 12; ++v)
        {
            expectNear(hierAll[v].pIntact, closed, 1e-12,
                       "hierarchical value matches the closed form");
        }
        expectNear(std::round(hierAll[0].pIntact * 100) / 100, 0.65, 1e-9,
                   "hierarchical value to two decimals");

        auto symAll = intactProbabilityExactAll(sym, d);
        expectNear(std::round(symAll[0].pIntact * 100) / 100, 0.86, 1e-9,
                   "symmetric value to two decimals");

        auto mcHier = intactProbabilityMc(hier, 0, d, 100000, 0x6f4);
        expect(std::abs(mcHier.pIntact - closed) <=
                   3 * mcHier.stdError + 1e-9,
               "hierarchical monte carlo within three sigma");
        auto mcSym = intactProbabilityMc(sym, 0, d, 100000, 0x6f5);
        expect(std::abs(mcSym.pIntact - symAll[0].pIntact) <=
                   3 * mcSym.stdError + 1e-9,
               "symmetric monte carlo within three sigma");
    }

    // Dominance for randomized failure parameters.
    {
        IntactTable hierTable(hier);
        IntactTable symTable(sym);
        Rng rng(0xd0717);
        for (int round = 0; round < 50; ++round)
        {
            double q = rng.nextDouble() * 0.6;
            double r = rng.nextDouble() * 0.4;
            auto d = FailureDistribution::groupedByzantine(
                12, orgs, std::vector<double>(4, q),
                std::vector<double>(4, r));
            auto h = hierTable.probabilities(d);
            auto s = symTable.probabilities(d);
            for (uint32_t v = 0; v < 12; ++v)
            {
                expect(s[v].pIntact + 1e-12 >= h[v].pIntact,
                       "symmetric layout dominates the hierarchical one");
            }
        }
    }
}

void
criterion10()
{
    expect(!gCliPath.empty(), "CLI path provided");
    std::string command = gCliPath + " bench --min-orgs 2 --max-orgs 6";
    FILE* pipe = popen(command.c_str(), "r");
    expect(pipe != nullptr, "bench runs");
    std::string output;
    char buffer[512];
    while (fgets(buffer, sizeof buffer, pipe))
    {
        output += buffer;
    }
    int status = pclose(pipe);
    expect(status == 0, "bench exits cleanly");

    // Parse the delimited table.
    std::map<std::string, std::vector<std::pair<uint64_t, double>>> rows;
    std::istringstream in(output);
    std::string line;
    std::getline(in, line); // header
    expect(line.rfind("rule\t", 0) == 0, "bench emits a header line");
    while (std::getline(in, line))
    {
        std::istringstream fields(line);
        std::string rule;
        uint32_t orgsCount, nodes, threshold;
        uint64_t quorums;
        double seconds;
        fields >> rule >> orgsCount >> nodes >> threshold >> quorums >>
            seconds;
        expect(!fields.fail(), "bench rows parse");
        rows[rule].emplace_back(quorums, seconds);
    }
    expect(rows.size() == 2, "both threshold rules appear");
    for (auto const& [rule, data] : rows)
    {
        expect(data.size() == 5, "five sizes per rule");
        for (size_t i = 1; i < data.size(); ++i)
        {
            expect(data[i].first > data[i - 1].first,
                   "quorum counts strictly increase");
        }
        // Least-squares slope of log time against the instance index.
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (size_t i = 0; i < data.size(); ++i)
        {
            double x = double(i);
            double y = std::log(std::max(data[i].second, 1e-9));
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        double k = data.size();
        double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
        expect(slope > 0, "log-time trend is positive");
    }
}

} // namespace

int
main(int argc, char** argv)
{
    if (argc > 1)
    {
        gCliPath = argv[1];
    }
    criterion("two-clique example suite", 1.0, criterion1);
    criterion("twenty-node hierarchy", 60.0, criterion2);
    criterion("six-organization network", 600.0, criterion3);
    criterion("symmetric laws", 60.0, criterion4);
    criterion("resilience bound", 60.0, criterion5);
    criterion("oracle equivalence", 0.0, criterion6);
    criterion("intact-set counterexample", 0.0, criterion7);
    criterion("hardness reduction", 300.0, criterion8);
    criterion("intactness probabilities", 0.0, criterion9);
    criterion("figure-shape bench", 0.0, criterion10);
    if (gFailures == 0)
    {
        std::printf("all 10 acceptance criteria passed\n");
    }
    else
    {
        std::printf("%d acceptance criteria failed\n", gFailures);
    }
    return gFailures;
}
