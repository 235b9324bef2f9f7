// Copyright 2026 the fbaskit developers. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "intactness.hpp"
#include "trust_graph.hpp"

#include <algorithm>
#include <unordered_set>

namespace fbas
{

DeletedFbas
deleteNodes(Fbas const& f, NodeSet const& d)
{
    if (d.universe() != f.universe())
    {
        raise(ErrorCode::kInvalidArgument,
              "deletion set is sized for a different universe");
    }
    NodeSet survivors = NodeSet::full(f.universe());
    survivors -= d;
    if (survivors.empty())
    {
        return {makeEmpty(), {}};
    }
    std::vector<NodeId> toParent = survivors.toVector();
    std::vector<NodeId> toChild(f.universe(), NodeSet::kNone);
    uint32_t m = static_cast<uint32_t>(toParent.size());
    for (uint32_t i = 0; i < m; ++i)
    {
        toChild[toParent[i]] = i;
    }
    auto remap = [&](NodeSet const& s) {
        NodeSet r(m);
        for (NodeId v : s)
        {
            if (toChild[v] != NodeSet::kNone)
            {
                r.insert(toChild[v]);
            }
        }
        return r;
    };

    // Deletion does not preserve the simple form; expand through slices.
    Fbas const* src = &f;
    Fbas expanded = makeEmpty();
    if (f.isSimple())
    {
        expanded = expandSimple(f);
        src = &expanded;
    }
    auto const& gen = src->general();
    std::vector<std::vector<NodeSet>> slices(m);
    for (uint32_t i = 0; i < m; ++i)
    {
        auto const& fam = gen.slices[toParent[i]];
        std::unordered_set<NodeSet, NodeSetHash> seen;
        for (uint32_t s = 0; s < fam.count(); ++s)
        {
            NodeSet cut = remap(fam.slice(s));
            if (seen.insert(cut).second)
            {
                slices[i].push_back(std::move(cut));
            }
        }
    }
    return {makeGeneral(m, slices), std::move(toParent)};
}

bool
isDset(Fbas const& f, NodeSet const& d)
{
    if (d.universe() != f.universe())
    {
        raise(ErrorCode::kInvalidArgument,
              "deletion set is sized for a different universe");
    }
    if (!quorumIntersection(f, d).intersects)
    {
        return false;
    }
    NodeSet rest = d.complement();
    return rest.empty() || isQuorum(f, rest);
}

bool
isSymmetricDset(uint32_t n, uint32_t k, NodeSet const& d)
{
    uint32_t size = d.size();
    if (size == n)
    {
        return true;
    }
    if (k == 1 && size == n - 1)
    {
        return true;
    }
    int64_t bound = std::min<int64_t>(int64_t(n) - k, 2 * int64_t(k) - n - 1);
    return bound >= 0 && size <= static_cast<uint64_t>(bound);
}

IntactnessReport
intactNodesAssumingIntersection(Fbas const& f, NodeSet const& b)
{
    NodeSet u = b.complement();
    while (true)
    {
        NodeSet q = greatestQuorum(f, u);
        NodeSet outside = q.complement();
        auto res = quorumIntersection(f, outside);
        if (res.intersects)
        {
            return {q, std::move(outside), b};
        }
        auto const& [q1, q2] = *res.witness;
        NodeSet w1 = greatestQuorum(f, q - q1);
        NodeSet w2 = greatestQuorum(f, q - q2);
        if (w1.empty())
        {
            u = std::move(w2);
        }
        else if (w2.empty())
        {
            u = std::move(w1);
        }
        else
        {
            u = w1 & w2;
        }
    }
}

IntactnessReport
intactNodes(Fbas const& f, NodeSet const& b)
{
    if (b.universe() != f.universe())
    {
        raise(ErrorCode::kInvalidArgument,
              "b is sized for a different universe");
    }
    if (!quorumIntersection(f).intersects)
    {
        raise(ErrorCode::kNoQuorumIntersection,
              "intact nodes are only defined for an FBAS with quorum "
              "intersection");
    }
    return intactNodesAssumingIntersection(f, b);
}

NodeSet
intactInCluster(Fbas const& f, NodeSet const& z, NodeSet const& b)
{
    auto restricted = restrictToCluster(f, z);
    uint32_t m = restricted.fbas.universe();
    NodeSet bInside(m);
    for (uint32_t i = 0; i < m; ++i)
    {
        if (b.contains(restricted.toParent[i]))
        {
            bInside.insert(i);
        }
    }
    auto rep = intactNodes(restricted.fbas, bInside);
    NodeSet out(f.universe());
    for (NodeId v : rep.intact)
    {
        out.insert(restricted.toParent[v]);
    }
    return out;
}

bool
isBQuorum(Fbas const& f, NodeSet const& b, NodeSet const& q)
{
    if (q.empty())
    {
        raise(ErrorCode::kEmptySet, "a B-quorum is non-empty by definition");
    }
    for (NodeId v : q)
    {
        if (!b.contains(v) && !containsSlice(f, q, v))
        {
            return false;
        }
    }
    return true;
}

bool
isBIntactSet(Fbas const& f, NodeSet const& b, NodeSet const& u,
             uint32_t maxNodes)
{
    if (u.intersects(b))
    {
        raise(ErrorCode::kPreconditionViolation,
              "a B-intact set contains no ill-behaved nodes");
    }
    if (u.empty())
    {
        return true;
    }
    if (f.universe() > maxNodes)
    {
        raise(ErrorCode::kInstanceTooLarge,
              "B-intact set checking is guarded to small instances");
    }
    if (!isBQuorum(f, b, u))
    {
        return false;
    }
    QuorumEnumerator en(f, EnumMode::kAll, NodeSet(f.universe()), b);
    std::vector<NodeSet> meeting;
    while (auto q = en.next())
    {
        if (q->intersects(u))
        {
            meeting.push_back(std::move(*q));
        }
        if (meeting.size() > 20000)
        {
            raise(ErrorCode::kInstanceTooLarge,
                  "too many B-quorums meet the candidate set");
        }
    }
    for (size_t i = 0; i < meeting.size(); ++i)
    {
        for (size_t j = i + 1; j < meeting.size(); ++j)
        {
            if (!(meeting[i] & meeting[j]).intersects(u))
            {
                return false;
            }
        }
    }
    return true;
}

namespace
{

bool
subsliceHoldsGeneral(Fbas const& f, NodeSet const& b)
{
    auto const& gen = f.general();
    uint32_t n = gen.universe;
    // Materialize the slice lists once.
    std::vector<std::vector<NodeSet>> slices(n);
    for (uint32_t v = 0; v < n; ++v)
    {
        auto const& fam = gen.slices[v];
        slices[v].reserve(fam.count());
        for (uint32_t i = 0; i < fam.count(); ++i)
        {
            slices[v].push_back(fam.slice(i));
        }
    }
    for (uint32_t v = 0; v < n; ++v)
    {
        if (b.contains(v))
        {
            continue;
        }
        for (auto const& sv : slices[v])
        {
            for (NodeId u : sv)
            {
                if (b.contains(u))
                {
                    continue;
                }
                bool nested = false;
                for (auto const& su : slices[u])
                {
                    if (su.subsetOf(sv))
                    {
                        nested = true;
                        break;
                    }
                }
                if (!nested)
                {
                    return false;
                }
            }
        }
    }
    return true;
}

// For a simple FBAS the worst slice of v containing u can be characterized
// directly: it holds v, u and n(v)-2 further members of q(v) drawn from
// outside q(u) as long as they last.
bool
subsliceHoldsSimple(Fbas const& f, NodeSet const& b)
{
    auto const& s = f.simple();
    uint32_t n = s.universe;
    for (uint32_t v = 0; v < n; ++v)
    {
        if (b.contains(v))
        {
            continue;
        }
        if (s.threshold[v] < 2)
        {
            continue; // the only slice containing another node needs n(v)>=2
        }
        for (NodeId u : s.quorumSet[v])
        {
            if (u == v || b.contains(u))
            {
                continue;
            }
            uint32_t base = 1 + (s.quorumSet[u].contains(v) ? 1 : 0);
            NodeSet outside = s.quorumSet[v] - s.quorumSet[u];
            outside.erase(v);
            uint32_t picks = s.threshold[v] - 2;
            uint32_t forcedIn =
                picks > outside.size() ? picks - outside.size() : 0;
            if (base + forcedIn < s.threshold[u])
            {
                return false;
            }
        }
    }
    return true;
}

} // namespace

bool
hasSubsliceProperty(Fbas const& f, NodeSet const& b)
{
    if (f.isEmpty())
    {
        return true;
    }
    return f.isSimple() ? subsliceHoldsSimple(f, b)
                        : subsliceHoldsGeneral(f, b);
}

} // namespace fbas
