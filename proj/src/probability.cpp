// Copyright 2026 the fbaskit developers. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "probability.hpp"
#include "intactness.hpp"
#include "quorums.hpp"
#include "trust_graph.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace fbas
{

namespace
{

constexpr double kMassTolerance = 1e-12;

void
checkProbability(double p, char const* what)
{
    if (!(p >= 0.0 && p <= 1.0))
    {
        raise(ErrorCode::kInvalidArgument,
              std::string(what) + " must lie in [0, 1]");
    }
}

void
checkPartition(uint32_t universe, std::vector<NodeSet> const& orgs)
{
    NodeSet seen(universe);
    for (auto const& o : orgs)
    {
        if (o.universe() != universe || o.empty())
        {
            raise(ErrorCode::kPartitionInvalid,
                  "organizations must be non-empty sets over the universe");
        }
        if (o.intersects(seen))
        {
            raise(ErrorCode::kPartitionInvalid, "organizations overlap");
        }
        seen |= o;
    }
    if (!(seen == NodeSet::full(universe)))
    {
        raise(ErrorCode::kPartitionInvalid,
              "organizations must cover every node");
    }
}

} // namespace

FailureDistribution
FailureDistribution::atMostOne(uint32_t universe, double pEmpty,
                               std::vector<double> pSingle)
{
    if (pSingle.size() != universe)
    {
        raise(ErrorCode::kInvalidArgument,
              "need one single-failure probability per node");
    }
    checkProbability(pEmpty, "p(empty)");
    double mass = pEmpty;
    for (double p : pSingle)
    {
        checkProbability(p, "p({v})");
        mass += p;
    }
    if (std::abs(mass - 1.0) > kMassTolerance)
    {
        raise(ErrorCode::kInvalidArgument,
              "at-most-one probabilities must sum to 1");
    }
    FailureDistribution d;
    d.mKind = DistKind::kAtMostOne;
    d.mUniverse = universe;
    d.mPEmpty = pEmpty;
    d.mP = std::move(pSingle);
    return d;
}

FailureDistribution
FailureDistribution::independent(uint32_t universe, std::vector<double> p)
{
    if (p.size() != universe)
    {
        raise(ErrorCode::kInvalidArgument,
              "need one failure probability per node");
    }
    for (double x : p)
    {
        checkProbability(x, "p_v");
    }
    FailureDistribution d;
    d.mKind = DistKind::kIndependent;
    d.mUniverse = universe;
    d.mP = std::move(p);
    return d;
}

FailureDistribution
FailureDistribution::grouped(
    uint32_t universe, std::vector<NodeSet> orgs,
    std::vector<std::vector<std::pair<NodeSet, double>>> tables)
{
    checkPartition(universe, orgs);
    if (tables.size() != orgs.size())
    {
        raise(ErrorCode::kInvalidArgument, "need one table per organization");
    }
    for (size_t i = 0; i < orgs.size(); ++i)
    {
        double mass = 0;
        for (auto const& [subset, p] : tables[i])
        {
            if (!subset.subsetOf(orgs[i]))
            {
                raise(ErrorCode::kInvalidArgument,
                      "table entries must be subsets of their organization");
            }
            checkProbability(p, "p_O(B)");
            mass += p;
        }
        if (std::abs(mass - 1.0) > kMassTolerance)
        {
            raise(ErrorCode::kInvalidArgument,
                  "each organization table must sum to 1");
        }
    }
    FailureDistribution d;
    d.mKind = DistKind::kGrouped;
    d.mUniverse = universe;
    d.mOrgs = std::move(orgs);
    d.mTables = std::move(tables);
    return d;
}

FailureDistribution
FailureDistribution::groupedByzantine(uint32_t universe,
                                      std::vector<NodeSet> orgs,
                                      std::vector<double> nodeFail,
                                      std::vector<double> orgByz)
{
    checkPartition(universe, orgs);
    if (nodeFail.size() != orgs.size() || orgByz.size() != orgs.size())
    {
        raise(ErrorCode::kInvalidArgument,
              "need q and r for every organization");
    }
    for (size_t i = 0; i < orgs.size(); ++i)
    {
        checkProbability(nodeFail[i], "q_O");
        checkProbability(orgByz[i], "r_O");
    }
    FailureDistribution d;
    d.mKind = DistKind::kGroupedByzantine;
    d.mUniverse = universe;
    d.mOrgs = std::move(orgs);
    d.mNodeFail = std::move(nodeFail);
    d.mOrgByz = std::move(orgByz);
    return d;
}

FailureDistribution
FailureDistribution::explicitTable(uint32_t universe,
                                   std::vector<std::pair<NodeSet, double>> t)
{
    double mass = 0;
    for (auto const& [set, p] : t)
    {
        if (set.universe() != universe)
        {
            raise(ErrorCode::kInvalidArgument,
                  "table sets must range over the universe");
        }
        checkProbability(p, "p(B)");
        mass += p;
    }
    if (std::abs(mass - 1.0) > kMassTolerance)
    {
        raise(ErrorCode::kInvalidArgument, "the table must sum to 1");
    }
    FailureDistribution d;
    d.mKind = DistKind::kExplicit;
    d.mUniverse = universe;
    d.mTable = std::move(t);
    return d;
}

namespace
{

double
byzantineOrgProb(NodeSet const& org, NodeSet const& inside, double q, double r)
{
    uint32_t orgSize = org.size();
    uint32_t bad = inside.size();
    if (bad == orgSize)
    {
        return r + (1.0 - r) * std::pow(q, orgSize);
    }
    return (1.0 - r) * std::pow(q, bad) * std::pow(1.0 - q, orgSize - bad);
}

} // namespace

double
FailureDistribution::probOf(NodeSet const& b) const
{
    switch (mKind)
    {
    case DistKind::kAtMostOne:
    {
        uint32_t n = b.size();
        if (n == 0)
        {
            return mPEmpty;
        }
        if (n == 1)
        {
            return mP[b.first()];
        }
        return 0.0;
    }
    case DistKind::kIndependent:
    {
        double p = 1.0;
        for (uint32_t v = 0; v < mUniverse; ++v)
        {
            p *= b.contains(v) ? mP[v] : 1.0 - mP[v];
        }
        return p;
    }
    case DistKind::kGrouped:
    {
        double p = 1.0;
        for (size_t i = 0; i < mOrgs.size(); ++i)
        {
            NodeSet inside = b & mOrgs[i];
            double q = 0.0;
            for (auto const& [subset, prob] : mTables[i])
            {
                if (subset == inside)
                {
                    q = prob;
                    break;
                }
            }
            p *= q;
        }
        return p;
    }
    case DistKind::kGroupedByzantine:
    {
        double p = 1.0;
        for (size_t i = 0; i < mOrgs.size(); ++i)
        {
            p *= byzantineOrgProb(mOrgs[i], b & mOrgs[i], mNodeFail[i],
                                  mOrgByz[i]);
        }
        return p;
    }
    case DistKind::kExplicit:
    {
        double p = 0.0;
        for (auto const& [set, prob] : mTable)
        {
            if (set == b)
            {
                p += prob;
            }
        }
        return p;
    }
    }
    return 0.0;
}

NodeSet
FailureDistribution::sample(Rng& rng) const
{
    NodeSet b(mUniverse);
    switch (mKind)
    {
    case DistKind::kAtMostOne:
    {
        double u = rng.nextDouble() - mPEmpty;
        if (u < 0)
        {
            return b;
        }
        for (uint32_t v = 0; v < mUniverse; ++v)
        {
            u -= mP[v];
            if (u < 0)
            {
                b.insert(v);
                return b;
            }
        }
        return b; // numeric slack lands on the empty set
    }
    case DistKind::kIndependent:
        for (uint32_t v = 0; v < mUniverse; ++v)
        {
            if (rng.nextBool(mP[v]))
            {
                b.insert(v);
            }
        }
        return b;
    case DistKind::kGrouped:
        for (size_t i = 0; i < mOrgs.size(); ++i)
        {
            double u = rng.nextDouble();
            for (auto const& [subset, prob] : mTables[i])
            {
                u -= prob;
                if (u < 0)
                {
                    b |= subset;
                    break;
                }
            }
        }
        return b;
    case DistKind::kGroupedByzantine:
        for (size_t i = 0; i < mOrgs.size(); ++i)
        {
            if (rng.nextBool(mOrgByz[i]))
            {
                b |= mOrgs[i];
            }
            else
            {
                for (NodeId v : mOrgs[i])
                {
                    if (rng.nextBool(mNodeFail[i]))
                    {
                        b.insert(v);
                    }
                }
            }
        }
        return b;
    case DistKind::kExplicit:
    {
        double u = rng.nextDouble();
        for (auto const& [set, prob] : mTable)
        {
            u -= prob;
            if (u < 0)
            {
                return set;
            }
        }
        return mTable.empty() ? b : mTable.back().first;
    }
    }
    return b;
}

FailureDistribution
FailureDistribution::restrictTo(NodeSet const& z,
                                std::vector<NodeId> const& toChild) const
{
    if (mKind != DistKind::kGrouped && mKind != DistKind::kGroupedByzantine)
    {
        raise(ErrorCode::kInvalidArgument,
              "only grouped distributions can be restricted");
    }
    uint32_t m = z.size();
    auto remap = [&](NodeSet const& s) {
        NodeSet r(m);
        for (NodeId v : s)
        {
            r.insert(toChild[v]);
        }
        return r;
    };
    FailureDistribution d;
    d.mKind = mKind;
    d.mUniverse = m;
    for (size_t i = 0; i < mOrgs.size(); ++i)
    {
        if (!mOrgs[i].intersects(z))
        {
            continue;
        }
        if (!mOrgs[i].subsetOf(z))
        {
            raise(ErrorCode::kPartitionInvalid,
                  "an organization straddles the cluster boundary");
        }
        d.mOrgs.push_back(remap(mOrgs[i]));
        if (mKind == DistKind::kGrouped)
        {
            std::vector<std::pair<NodeSet, double>> table;
            table.reserve(mTables[i].size());
            for (auto const& [subset, p] : mTables[i])
            {
                table.emplace_back(remap(subset), p);
            }
            d.mTables.push_back(std::move(table));
        }
        else
        {
            d.mNodeFail.push_back(mNodeFail[i]);
            d.mOrgByz.push_back(mOrgByz[i]);
        }
    }
    return d;
}

namespace
{

NodeSet
setFromMask(uint32_t universe, uint32_t mask)
{
    NodeSet s(universe);
    for (uint32_t v = 0; v < universe; ++v)
    {
        if (mask & (uint32_t(1) << v))
        {
            s.insert(v);
        }
    }
    return s;
}

void
requireIntersection(Fbas const& f)
{
    if (!quorumIntersection(f).intersects)
    {
        raise(ErrorCode::kNoQuorumIntersection,
              "intactness probabilities require quorum intersection");
    }
}

IntactProbability
fromSums(double num, double den)
{
    IntactProbability r;
    r.method = ProbMethod::kExact;
    r.pIntact = num;
    if (den > 0)
    {
        r.pIntactGivenWellBehaved = num / den;
    }
    else
    {
        r.conditionalDefined = false;
        r.pIntactGivenWellBehaved = 0;
    }
    return r;
}

std::vector<IntactProbability>
exactAtMostOne(Fbas const& f, FailureDistribution const& dist)
{
    uint32_t n = f.universe();
    // Intact sets under each single ill-behaved node.
    std::vector<NodeSet> intactUnder;
    intactUnder.reserve(n);
    for (uint32_t u = 0; u < n; ++u)
    {
        intactUnder.push_back(
            intactNodesAssumingIntersection(f, NodeSet(n, {u})).intact);
    }
    auto const& p = dist.singleProbs();
    std::vector<IntactProbability> out;
    out.reserve(n);
    for (uint32_t v = 0; v < n; ++v)
    {
        double num = dist.emptyProb();
        double den = dist.emptyProb();
        for (uint32_t u = 0; u < n; ++u)
        {
            if (u == v)
            {
                continue;
            }
            den += p[u];
            if (intactUnder[u].contains(v))
            {
                num += p[u];
            }
        }
        out.push_back(fromSums(num, den));
    }
    return out;
}

// Smallest trust cluster containing v: the reachability closure of {v}.
NodeSet
closureOf(TrustGraph const& g, NodeId v)
{
    NodeSet reach(g.universe, {v});
    bool grew = true;
    while (grew)
    {
        grew = false;
        NodeSet next = reach;
        for (NodeId u : reach)
        {
            next |= g.out[u];
        }
        if (!(next == reach))
        {
            reach = std::move(next);
            grew = true;
        }
    }
    return reach;
}

bool
orgsInsideSccs(Fbas const& f, std::vector<NodeSet> const& orgs)
{
    auto part = sccPartition(buildTrustGraph(f));
    for (auto const& org : orgs)
    {
        uint32_t comp = part.componentOf[org.first()];
        if (!org.subsetOf(part.components[comp]))
        {
            return false;
        }
    }
    return true;
}

std::vector<IntactProbability>
exactAll(Fbas const& f, FailureDistribution const& dist, uint32_t exactGuard);

// Grouped computation factorized to the trust cluster of v.
IntactProbability
exactGroupedFactorized(Fbas const& f, NodeId v, FailureDistribution const& dist,
                       uint32_t exactGuard)
{
    if (!orgsInsideSccs(f, dist.orgs()))
    {
        raise(ErrorCode::kInstanceTooLarge,
              "instance too large for the exact sweep and organizations do "
              "not factorize along strongly connected components");
    }
    auto graph = buildTrustGraph(f);
    NodeSet z = closureOf(graph, v);
    if (z.size() > exactGuard)
    {
        raise(ErrorCode::kInstanceTooLarge,
              "the trust cluster still exceeds the exact guard");
    }
    auto restricted = restrictToCluster(f, z);
    std::vector<NodeId> toChild(f.universe(), NodeSet::kNone);
    for (uint32_t i = 0; i < restricted.toParent.size(); ++i)
    {
        toChild[restricted.toParent[i]] = i;
    }
    auto sub = dist.restrictTo(z, toChild);
    auto all = exactAll(restricted.fbas, sub, exactGuard);
    return all[toChild[v]];
}

std::vector<IntactProbability>
exactAll(Fbas const& f, FailureDistribution const& dist, uint32_t exactGuard)
{
    requireIntersection(f);
    if (dist.kind() == DistKind::kAtMostOne)
    {
        return exactAtMostOne(f, dist);
    }
    return IntactTable(f, exactGuard).probabilities(dist);
}

} // namespace

IntactTable::IntactTable(Fbas const& f, uint32_t exactGuard)
    : mUniverse(f.universe())
{
    if (mUniverse > exactGuard || mUniverse > 24)
    {
        raise(ErrorCode::kInstanceTooLarge,
              "instance exceeds the exact-mode guard");
    }
    requireIntersection(f);
    mIntactMask.resize(size_t(1) << mUniverse);
    for (uint32_t mask = 0; mask < (uint32_t(1) << mUniverse); ++mask)
    {
        NodeSet b = setFromMask(mUniverse, mask);
        NodeSet intact = intactNodesAssumingIntersection(f, b).intact;
        uint32_t bits = 0;
        for (NodeId v : intact)
        {
            bits |= uint32_t(1) << v;
        }
        mIntactMask[mask] = bits;
    }
}

std::vector<IntactProbability>
IntactTable::probabilities(FailureDistribution const& d) const
{
    if (d.universe() != mUniverse)
    {
        raise(ErrorCode::kInvalidArgument,
              "distribution does not match the FBAS");
    }
    std::vector<double> num(mUniverse, 0.0), den(mUniverse, 0.0);
    for (uint32_t mask = 0; mask < (uint32_t(1) << mUniverse); ++mask)
    {
        double pb = d.probOf(setFromMask(mUniverse, mask));
        if (pb == 0.0)
        {
            continue;
        }
        uint32_t intact = mIntactMask[mask];
        for (uint32_t v = 0; v < mUniverse; ++v)
        {
            if (!(mask & (uint32_t(1) << v)))
            {
                den[v] += pb;
            }
            if (intact & (uint32_t(1) << v))
            {
                num[v] += pb;
            }
        }
    }
    std::vector<IntactProbability> out;
    out.reserve(mUniverse);
    for (uint32_t v = 0; v < mUniverse; ++v)
    {
        out.push_back(fromSums(num[v], den[v]));
    }
    return out;
}

IntactProbability
intactProbabilityExact(Fbas const& f, NodeId v, FailureDistribution const& d,
                       uint32_t exactGuard)
{
    if (v >= f.universe() || d.universe() != f.universe())
    {
        raise(ErrorCode::kInvalidArgument,
              "node or distribution does not match the FBAS");
    }
    bool grouped = d.kind() == DistKind::kGrouped ||
                   d.kind() == DistKind::kGroupedByzantine;
    if (grouped && f.universe() > exactGuard)
    {
        requireIntersection(f);
        return exactGroupedFactorized(f, v, d, exactGuard);
    }
    return exactAll(f, d, exactGuard)[v];
}

std::vector<IntactProbability>
intactProbabilityExactAll(Fbas const& f, FailureDistribution const& d,
                          uint32_t exactGuard)
{
    if (d.universe() != f.universe())
    {
        raise(ErrorCode::kInvalidArgument,
              "distribution does not match the FBAS");
    }
    return exactAll(f, d, exactGuard);
}

IntactProbability
intactProbabilityInclExcl(Fbas const& f, NodeId v,
                          FailureDistribution const& d,
                          uint32_t maxMaximalDsets)
{
    if (d.kind() != DistKind::kIndependent)
    {
        raise(ErrorCode::kInvalidArgument,
              "inclusion-exclusion applies to independent failures only");
    }
    if (v >= f.universe() || d.universe() != f.universe())
    {
        raise(ErrorCode::kInvalidArgument,
              "node or distribution does not match the FBAS");
    }
    uint32_t n = f.universe();
    if (n > kDefaultExactGuard)
    {
        raise(ErrorCode::kInstanceTooLarge,
              "maximal-DSet enumeration is guarded to small instances");
    }
    requireIntersection(f);

    // All DSets avoiding v, then the maximal ones among them.
    std::vector<NodeSet> avoiding;
    for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask)
    {
        if (mask & (uint32_t(1) << v))
        {
            continue;
        }
        NodeSet cand = setFromMask(n, mask);
        if (isDset(f, cand))
        {
            avoiding.push_back(std::move(cand));
        }
    }
    std::vector<NodeSet> maximal;
    for (auto const& a : avoiding)
    {
        bool covered = false;
        for (auto const& b : avoiding)
        {
            if (!(a == b) && a.subsetOf(b))
            {
                covered = true;
                break;
            }
        }
        if (!covered)
        {
            maximal.push_back(a);
        }
    }
    if (maximal.size() > maxMaximalDsets)
    {
        raise(ErrorCode::kTooManyMaximalDsets,
              "too many maximal DSets for inclusion-exclusion");
    }

    // P(exists maximal DSet containing B) by inclusion-exclusion;
    // P(B subset of D) for independent failures is the product of the
    // survival probabilities outside D.
    auto const& p = d.singleProbs();
    auto probInside = [&](NodeSet const& set) {
        double prob = 1.0;
        for (uint32_t u = 0; u < n; ++u)
        {
            if (!set.contains(u))
            {
                prob *= 1.0 - p[u];
            }
        }
        return prob;
    };
    double num = 0.0;
    size_t k = maximal.size();
    for (uint64_t pick = 1; pick < (uint64_t(1) << k); ++pick)
    {
        NodeSet inter = NodeSet::full(n);
        int bits = 0;
        for (size_t i = 0; i < k; ++i)
        {
            if (pick & (uint64_t(1) << i))
            {
                inter &= maximal[i];
                ++bits;
            }
        }
        num += (bits % 2 == 1 ? 1.0 : -1.0) * probInside(inter);
    }
    double den = 1.0 - p[v];
    IntactProbability r;
    r.method = ProbMethod::kInclusionExclusion;
    r.pIntact = num;
    if (den > 0)
    {
        r.pIntactGivenWellBehaved = num / den;
    }
    else
    {
        r.conditionalDefined = false;
    }
    return r;
}

namespace
{

struct McCounts
{
    std::vector<uint64_t> intact;
    std::vector<uint64_t> wellBehaved;
};

McCounts
runMc(Fbas const& f, FailureDistribution const& d, uint64_t samples,
      uint64_t seed)
{
    requireIntersection(f);
    uint32_t n = f.universe();
    McCounts counts;
    counts.intact.assign(n, 0);
    counts.wellBehaved.assign(n, 0);
    std::unordered_map<NodeSet, NodeSet, NodeSetHash> memo;
    for (uint64_t i = 0; i < samples; ++i)
    {
        Rng sub(splitMix64At(seed, i));
        NodeSet b = d.sample(sub);
        auto it = memo.find(b);
        if (it == memo.end())
        {
            it = memo.emplace(b, intactNodesAssumingIntersection(f, b).intact)
                     .first;
        }
        NodeSet const& intact = it->second;
        for (uint32_t v = 0; v < n; ++v)
        {
            if (!b.contains(v))
            {
                ++counts.wellBehaved[v];
            }
            if (intact.contains(v))
            {
                ++counts.intact[v];
            }
        }
    }
    return counts;
}

IntactProbability
mcResult(McCounts const& counts, NodeId v, uint64_t samples, uint64_t seed)
{
    IntactProbability r;
    r.method = ProbMethod::kMonteCarlo;
    r.samples = samples;
    r.seed = seed;
    double est = samples ? double(counts.intact[v]) / double(samples) : 0.0;
    r.pIntact = est;
    r.stdError = samples ? std::sqrt(est * (1.0 - est) / double(samples)) : 0.0;
    if (counts.wellBehaved[v] > 0)
    {
        r.pIntactGivenWellBehaved =
            double(counts.intact[v]) / double(counts.wellBehaved[v]);
    }
    else
    {
        r.conditionalDefined = false;
    }
    return r;
}

} // namespace

IntactProbability
intactProbabilityMc(Fbas const& f, NodeId v, FailureDistribution const& d,
                    uint64_t samples, uint64_t seed)
{
    if (v >= f.universe() || d.universe() != f.universe())
    {
        raise(ErrorCode::kInvalidArgument,
              "node or distribution does not match the FBAS");
    }
    auto counts = runMc(f, d, samples, seed);
    return mcResult(counts, v, samples, seed);
}

std::vector<IntactProbability>
intactProbabilityMcAll(Fbas const& f, FailureDistribution const& d,
                       uint64_t samples, uint64_t seed)
{
    if (d.universe() != f.universe())
    {
        raise(ErrorCode::kInvalidArgument,
              "distribution does not match the FBAS");
    }
    auto counts = runMc(f, d, samples, seed);
    std::vector<IntactProbability> out;
    out.reserve(f.universe());
    for (uint32_t v = 0; v < f.universe(); ++v)
    {
        out.push_back(mcResult(counts, v, samples, seed));
    }
    return out;
}

double
hierarchy4IntactProbability(double orgEmptyProb, double singleA2,
                            double singleA3)
{
    double e = orgEmptyProb;
    return e * e * e * (singleA2 + singleA3 + 3.0 - 2.0 * e);
}

double
hierarchy4IntactProbabilityByzantine(double q, double r)
{
    double e = (1.0 - r) * std::pow(1.0 - q, 3);
    double single = (1.0 - r) * q * std::pow(1.0 - q, 2);
    return hierarchy4IntactProbability(e, single, single);
}

} // namespace fbas
