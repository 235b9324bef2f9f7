// Copyright 2026 the fbaskit developers. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "quorums.hpp"
#include "trust_graph.hpp"

#include <algorithm>
#include <bit>
#include <memory>

namespace fbas
{

namespace
{

// Shared machinery for slice-containment checks under a deletion set and an
// optional free-pass set (for B-quorums).
struct SliceProbe
{
    Fbas const& fbas;
    std::vector<uint64_t> deletedWords;
    NodeSet freePass;
    bool anyFreePass;

    SliceProbe(Fbas const& f, NodeSet const& deleted, NodeSet const& free)
        : fbas(f), freePass(free), anyFreePass(!free.empty())
    {
        auto w = deleted.words();
        deletedWords.assign(w.begin(), w.end());
        if (deletedWords.empty())
        {
            deletedWords.assign((f.universe() + 63) >> 6, 0);
        }
    }

    // allowed must hold the words of u | deleted.
    bool
    satisfied(std::span<uint64_t const> allowed, NodeId v) const
    {
        if (anyFreePass && freePass.contains(v))
        {
            return true;
        }
        if (fbas.isSimple())
        {
            auto const& s = fbas.simple();
            auto qw = s.quorumSet[v].words();
            uint32_t have = 0;
            for (size_t i = 0; i < qw.size(); ++i)
            {
                have += static_cast<uint32_t>(
                    std::popcount(qw[i] & allowed[i]));
            }
            return have >= s.threshold[v];
        }
        return fbas.general().slices[v].anySliceWithin(allowed);
    }
};

std::vector<uint64_t>
allowedWords(NodeSet const& u, std::vector<uint64_t> const& deletedWords)
{
    auto uw = u.words();
    std::vector<uint64_t> allowed(deletedWords);
    for (size_t i = 0; i < uw.size(); ++i)
    {
        allowed[i] |= uw[i];
    }
    return allowed;
}

// Fixed-point shrink: the greatest quorum q with w <= q <= u, else empty.
NodeSet
greatestQuorumImpl(SliceProbe const& probe, NodeSet u, NodeSet const& w)
{
    uint32_t universe = probe.fbas.universe();
    while (true)
    {
        auto allowed = allowedWords(u, probe.deletedWords);
        NodeSet next(universe);
        bool shrank = false;
        for (NodeId v : u)
        {
            if (probe.satisfied(allowed, v))
            {
                next.insert(v);
            }
            else
            {
                if (w.contains(v))
                {
                    return NodeSet(universe);
                }
                shrank = true;
            }
        }
        if (!shrank || next.empty())
        {
            return next;
        }
        u = std::move(next);
    }
}

bool
containsProperSubQuorumImpl(SliceProbe const& probe, NodeSet const& u,
                            uint64_t* gqCalls)
{
    NodeSet none(probe.fbas.universe());
    for (NodeId v : u)
    {
        NodeSet candidate = u;
        candidate.erase(v);
        if (gqCalls)
        {
            ++*gqCalls;
        }
        if (!greatestQuorumImpl(probe, candidate, none).empty())
        {
            return true;
        }
    }
    return false;
}

void
checkSameUniverse(Fbas const& f, NodeSet const& s, char const* what)
{
    if (s.universe() != f.universe())
    {
        raise(ErrorCode::kInvalidArgument,
              std::string(what) + " is sized for a different universe");
    }
}

} // namespace

bool
containsSlice(Fbas const& f, NodeSet const& u, NodeId v,
              NodeSet const& deleted)
{
    checkSameUniverse(f, u, "u");
    checkSameUniverse(f, deleted, "deletion set");
    if (!u.contains(v) || u.intersects(deleted))
    {
        raise(ErrorCode::kPreconditionViolation,
              "containsSlice requires v in u and u disjoint from the "
              "deletion set");
    }
    SliceProbe probe(f, deleted, NodeSet(f.universe()));
    return probe.satisfied(allowedWords(u, probe.deletedWords), v);
}

bool
containsSlice(Fbas const& f, NodeSet const& u, NodeId v)
{
    return containsSlice(f, u, v, NodeSet(f.universe()));
}

bool
isQuorum(Fbas const& f, NodeSet const& u, NodeSet const& deleted)
{
    checkSameUniverse(f, u, "u");
    checkSameUniverse(f, deleted, "deletion set");
    if (u.empty())
    {
        raise(ErrorCode::kEmptySet, "a quorum is non-empty by definition");
    }
    if (u.intersects(deleted))
    {
        raise(ErrorCode::kPreconditionViolation,
              "u must be disjoint from the deletion set");
    }
    SliceProbe probe(f, deleted, NodeSet(f.universe()));
    auto allowed = allowedWords(u, probe.deletedWords);
    for (NodeId v : u)
    {
        if (!probe.satisfied(allowed, v))
        {
            return false;
        }
    }
    return true;
}

bool
isQuorum(Fbas const& f, NodeSet const& u)
{
    return isQuorum(f, u, NodeSet(f.universe()));
}

NodeSet
greatestQuorum(Fbas const& f, NodeSet const& u, NodeSet const& w,
               NodeSet const& deleted)
{
    checkSameUniverse(f, u, "u");
    checkSameUniverse(f, w, "w");
    checkSameUniverse(f, deleted, "deletion set");
    if (!w.subsetOf(u) || u.intersects(deleted))
    {
        raise(ErrorCode::kPreconditionViolation,
              "greatestQuorum requires w <= u and u disjoint from the "
              "deletion set");
    }
    SliceProbe probe(f, deleted, NodeSet(f.universe()));
    return greatestQuorumImpl(probe, u, w);
}

NodeSet
greatestQuorum(Fbas const& f, NodeSet const& u)
{
    return greatestQuorum(f, u, NodeSet(f.universe()), NodeSet(f.universe()));
}

bool
containsProperSubQuorum(Fbas const& f, NodeSet const& u,
                        NodeSet const& deleted)
{
    checkSameUniverse(f, u, "u");
    checkSameUniverse(f, deleted, "deletion set");
    if (u.intersects(deleted))
    {
        raise(ErrorCode::kPreconditionViolation,
              "u must be disjoint from the deletion set");
    }
    SliceProbe probe(f, deleted, NodeSet(f.universe()));
    return containsProperSubQuorumImpl(probe, u, nullptr);
}

bool
containsProperSubQuorum(Fbas const& f, NodeSet const& u)
{
    return containsProperSubQuorum(f, u, NodeSet(f.universe()));
}

struct QuorumEnumerator::Impl
{
    SliceProbe probe;
    EnumMode mode;
    uint32_t universe;
    uint32_t activeCount;
    std::vector<uint32_t> inDegree; // pick heuristic, minimal modes only

    struct Frame
    {
        NodeSet u;
        NodeSet r;
        NodeSet q; // kAll: greatest quorum of the frame once computed
        NodeSet w; // kAll: unprocessed part of q - u
        bool fresh = true;
    };
    std::vector<Frame> stack;

    Impl(Fbas const& f, EnumMode m, NodeSet deleted, NodeSet freePass)
        : probe(f, deleted, std::move(freePass)),
          mode(m),
          universe(f.universe())
    {
        NodeSet active = NodeSet::full(universe);
        active -= deleted;
        activeCount = active.size();
        if (!active.empty())
        {
            Frame root;
            root.u = NodeSet(universe);
            root.r = std::move(active);
            stack.push_back(std::move(root));
        }
        if (mode != EnumMode::kAll)
        {
            inDegree = buildTrustGraph(f).inDegrees();
        }
    }

    // Highest static trust-graph in-degree within r, ties to lowest index.
    NodeId
    pick(NodeSet const& r) const
    {
        NodeId best = r.first();
        for (NodeId v : r)
        {
            if (inDegree[v] > inDegree[best])
            {
                best = v;
            }
        }
        return best;
    }

    std::optional<NodeSet>
    nextAll(uint64_t& gqCalls)
    {
        while (!stack.empty())
        {
            Frame& f = stack.back();
            if (f.fresh)
            {
                NodeSet scope = f.u | f.r;
                ++gqCalls;
                NodeSet q = greatestQuorumImpl(probe, scope, f.u);
                if (q.empty())
                {
                    stack.pop_back();
                    continue;
                }
                f.q = q;
                f.w = q - f.u;
                f.fresh = false;
                return q;
            }
            NodeId v = f.w.first();
            if (v == NodeSet::kNone)
            {
                stack.pop_back();
                continue;
            }
            Frame child;
            child.u = f.q - f.w;
            child.r = f.w;
            child.r.erase(v);
            f.w.erase(v);
            stack.push_back(std::move(child));
        }
        return std::nullopt;
    }

    std::optional<NodeSet>
    nextMinimal(uint64_t& gqCalls)
    {
        bool bounded = mode == EnumMode::kMinimalBounded;
        NodeSet none(universe);
        while (!stack.empty())
        {
            Frame frame = std::move(stack.back());
            stack.pop_back();
            if (bounded && 2 * frame.u.size() > activeCount)
            {
                continue;
            }
            ++gqCalls;
            NodeSet q = greatestQuorumImpl(probe, frame.u, none);
            if (!q.empty())
            {
                if (q == frame.u &&
                    !containsProperSubQuorumImpl(probe, frame.u, &gqCalls))
                {
                    return frame.u;
                }
                continue;
            }
            if (frame.r.empty())
            {
                continue;
            }
            ++gqCalls;
            NodeSet scope = frame.u | frame.r;
            if (greatestQuorumImpl(probe, scope, frame.u).empty())
            {
                continue;
            }
            NodeId v = pick(frame.r);
            Frame with;
            with.u = frame.u;
            with.u.insert(v);
            with.r = frame.r;
            with.r.erase(v);
            Frame without;
            without.u = frame.u;
            without.r = with.r;
            stack.push_back(std::move(with));
            stack.push_back(std::move(without));
        }
        return std::nullopt;
    }
};

QuorumEnumerator::QuorumEnumerator(Fbas const& f, EnumMode mode,
                                   NodeSet deleted, NodeSet freePass)
    : mImpl(std::make_unique<Impl>(f, mode, std::move(deleted),
                                   std::move(freePass)))
{
}

QuorumEnumerator::QuorumEnumerator(Fbas const& f, EnumMode mode)
    : QuorumEnumerator(f, mode, NodeSet(f.universe()), NodeSet(f.universe()))
{
}

QuorumEnumerator::QuorumEnumerator(Fbas const& f, EnumMode mode,
                                   NodeSet deleted)
    : QuorumEnumerator(f, mode, std::move(deleted), NodeSet(f.universe()))
{
}

QuorumEnumerator::~QuorumEnumerator() = default;
QuorumEnumerator::QuorumEnumerator(QuorumEnumerator&&) noexcept = default;
QuorumEnumerator& QuorumEnumerator::operator=(QuorumEnumerator&&) noexcept =
    default;

std::optional<NodeSet>
QuorumEnumerator::next()
{
    mGqSinceYield = 0;
    if (!mImpl)
    {
        return std::nullopt;
    }
    return mImpl->mode == EnumMode::kAll ? mImpl->nextAll(mGqSinceYield)
                                         : mImpl->nextMinimal(mGqSinceYield);
}

std::vector<NodeSet>
collectQuorums(Fbas const& f, EnumMode mode, NodeSet const& deleted,
               uint64_t cap)
{
    QuorumEnumerator en(f, mode, deleted);
    std::vector<NodeSet> out;
    while (auto q = en.next())
    {
        if (out.size() >= cap)
        {
            raise(ErrorCode::kTooManyQuorums,
                  "quorum enumeration exceeds the configured cap");
        }
        out.push_back(std::move(*q));
    }
    return out;
}

QuorumIntersectionResult
quorumIntersection(Fbas const& f, NodeSet const& deleted)
{
    checkSameUniverse(f, deleted, "deletion set");
    NodeSet active = NodeSet::full(f.universe());
    active -= deleted;
    if (active.empty())
    {
        return {true, std::nullopt};
    }
    SliceProbe probe(f, deleted, NodeSet(f.universe()));
    QuorumEnumerator en(f, EnumMode::kMinimalBounded, deleted);
    NodeSet none(f.universe());
    while (auto q = en.next())
    {
        NodeSet rest = active - *q;
        NodeSet other = greatestQuorumImpl(probe, rest, none);
        if (!other.empty())
        {
            return {false, std::make_pair(std::move(*q), std::move(other))};
        }
    }
    return {true, std::nullopt};
}

QuorumIntersectionResult
quorumIntersection(Fbas const& f)
{
    return quorumIntersection(f, NodeSet(f.universe()));
}

QuorumIntersectionResult
quorumIntersectionWithSccPreprocessing(Fbas const& f)
{
    if (f.isEmpty())
    {
        return {true, std::nullopt};
    }
    auto graph = buildTrustGraph(f);
    auto part = sccPartition(graph);
    if (!part.greatest.has_value())
    {
        // Two distinct maximal components are disjoint trust clusters and
        // therefore disjoint quorums.
        return {false,
                std::make_pair(part.components[part.maximal[0]],
                               part.components[part.maximal[1]])};
    }
    NodeSet const& core = part.components[*part.greatest];
    for (uint32_t c = 0; c < part.components.size(); ++c)
    {
        if (c == *part.greatest)
        {
            continue;
        }
        NodeSet q = greatestQuorum(f, part.components[c]);
        if (!q.empty())
        {
            // The greatest component is itself a quorum disjoint from q.
            return {false, std::make_pair(std::move(q), core)};
        }
    }
    auto restricted = restrictToCluster(f, core);
    auto sub = quorumIntersection(restricted.fbas);
    if (sub.intersects)
    {
        return {true, std::nullopt};
    }
    auto lift = [&](NodeSet const& s) {
        NodeSet out(f.universe());
        for (NodeId v : s)
        {
            out.insert(restricted.toParent[v]);
        }
        return out;
    };
    return {false, std::make_pair(lift(sub.witness->first),
                                  lift(sub.witness->second))};
}

std::optional<uint32_t>
minIntersectionSize(Fbas const& f, uint64_t maxStoredQuorums)
{
    if (f.isEmpty())
    {
        return std::nullopt;
    }
    auto mins = collectQuorums(f, EnumMode::kMinimalAll,
                               NodeSet(f.universe()), maxStoredQuorums);
    if (mins.size() == 1)
    {
        // The whole node set is always a quorum. A lone minimal quorum other
        // than V pairs with V; if V itself is the only quorum there is no
        // pair to measure.
        if (mins[0].size() == f.universe())
        {
            return std::nullopt;
        }
        return mins[0].size();
    }
    uint32_t best = UINT32_MAX;
    for (size_t i = 0; i < mins.size(); ++i)
    {
        auto wi = mins[i].words();
        for (size_t j = i + 1; j < mins.size(); ++j)
        {
            auto wj = mins[j].words();
            uint32_t inter = 0;
            for (size_t k = 0; k < wi.size(); ++k)
            {
                inter += static_cast<uint32_t>(std::popcount(wi[k] & wj[k]));
            }
            best = std::min(best, inter);
            if (best == 0)
            {
                return 0;
            }
        }
    }
    return best;
}

} // namespace fbas
