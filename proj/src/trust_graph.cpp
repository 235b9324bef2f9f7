// Copyright 2026 the fbaskit developers. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "trust_graph.hpp"

#include <algorithm>

namespace fbas
{

std::vector<uint32_t>
TrustGraph::inDegrees() const
{
    std::vector<uint32_t> deg(universe, 0);
    for (uint32_t u = 0; u < universe; ++u)
    {
        for (NodeId v : out[u])
        {
            ++deg[v];
        }
    }
    return deg;
}

TrustGraph
buildTrustGraph(Fbas const& f)
{
    TrustGraph g;
    g.universe = f.universe();
    g.out.reserve(g.universe);
    if (f.isSimple())
    {
        auto const& s = f.simple();
        for (uint32_t v = 0; v < g.universe; ++v)
        {
            g.out.push_back(s.quorumSet[v]);
        }
    }
    else
    {
        auto const& gen = f.general();
        for (uint32_t v = 0; v < g.universe; ++v)
        {
            g.out.push_back(gen.slices[v].unionOfSlices());
        }
    }
    return g;
}

namespace
{

// Iterative Tarjan. Components are emitted in reverse topological order of
// the condensation.
struct TarjanState
{
    std::vector<int64_t> index;
    std::vector<int64_t> lowLink;
    std::vector<bool> onStack;
    std::vector<NodeId> stack;
    int64_t next = 0;
};

} // namespace

SccPartition
sccPartition(TrustGraph const& g)
{
    uint32_t n = g.universe;
    SccPartition part;
    part.componentOf.assign(n, 0);

    TarjanState st;
    st.index.assign(n, -1);
    st.lowLink.assign(n, 0);
    st.onStack.assign(n, false);

    struct Frame
    {
        NodeId v;
        NodeId nextSucc;
    };
    std::vector<Frame> frames;

    for (uint32_t root = 0; root < n; ++root)
    {
        if (st.index[root] != -1)
        {
            continue;
        }
        frames.push_back({root, 0});
        st.index[root] = st.lowLink[root] = st.next++;
        st.stack.push_back(root);
        st.onStack[root] = true;

        while (!frames.empty())
        {
            Frame& f = frames.back();
            NodeId w = g.out[f.v].nextAtOrAfter(f.nextSucc);
            if (w != NodeSet::kNone)
            {
                f.nextSucc = w + 1;
                if (st.index[w] == -1)
                {
                    st.index[w] = st.lowLink[w] = st.next++;
                    st.stack.push_back(w);
                    st.onStack[w] = true;
                    frames.push_back({w, 0});
                }
                else if (st.onStack[w])
                {
                    st.lowLink[f.v] =
                        std::min(st.lowLink[f.v], st.index[w]);
                }
                continue;
            }
            // All successors done.
            NodeId v = f.v;
            frames.pop_back();
            if (!frames.empty())
            {
                st.lowLink[frames.back().v] =
                    std::min(st.lowLink[frames.back().v], st.lowLink[v]);
            }
            if (st.lowLink[v] == st.index[v])
            {
                NodeSet comp(n);
                NodeId u;
                do
                {
                    u = st.stack.back();
                    st.stack.pop_back();
                    st.onStack[u] = false;
                    comp.insert(u);
                    part.componentOf[u] =
                        static_cast<uint32_t>(part.components.size());
                } while (u != v);
                part.components.push_back(std::move(comp));
            }
        }
    }

    // Condensation edges between distinct components.
    uint32_t k = static_cast<uint32_t>(part.components.size());
    part.condensation.assign(k, {});
    std::vector<bool> seen(k, false);
    for (uint32_t c = 0; c < k; ++c)
    {
        std::vector<uint32_t> touched;
        for (NodeId v : part.components[c])
        {
            for (NodeId w : g.out[v])
            {
                uint32_t d = part.componentOf[w];
                if (d != c && !seen[d])
                {
                    seen[d] = true;
                    touched.push_back(d);
                }
            }
        }
        for (uint32_t d : touched)
        {
            seen[d] = false;
        }
        std::sort(touched.begin(), touched.end());
        part.condensation[c] = std::move(touched);
    }

    for (uint32_t c = 0; c < k; ++c)
    {
        if (part.condensation[c].empty())
        {
            part.maximal.push_back(c);
        }
    }
    // A unique maximal component is reachable from every other one.
    if (part.maximal.size() == 1)
    {
        part.greatest = part.maximal[0];
    }
    return part;
}

bool
isTrustCluster(TrustGraph const& g, NodeSet const& z)
{
    NodeSet reach = z;
    bool grew = true;
    while (grew)
    {
        grew = false;
        NodeSet next = reach;
        for (NodeId v : reach)
        {
            next |= g.out[v];
        }
        if (!(next == reach))
        {
            reach = std::move(next);
            grew = true;
        }
    }
    return reach == z;
}

RestrictedFbas
restrictToCluster(Fbas const& f, NodeSet const& z)
{
    if (z.empty())
    {
        raise(ErrorCode::kInvalidArgument,
              "cannot restrict to an empty cluster");
    }
    auto g = buildTrustGraph(f);
    if (!isTrustCluster(g, z))
    {
        raise(ErrorCode::kNotATrustCluster,
              "the given set is not closed under trust reachability");
    }
    std::vector<NodeId> toParent = z.toVector();
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
            r.insert(toChild[v]);
        }
        return r;
    };

    if (f.isSimple())
    {
        auto const& sf = f.simple();
        std::vector<NodeSet> q;
        std::vector<uint32_t> nv;
        q.reserve(m);
        nv.reserve(m);
        for (NodeId v : toParent)
        {
            q.push_back(remap(sf.quorumSet[v]));
            nv.push_back(sf.threshold[v]);
        }
        return {makeSimple(m, std::move(q), std::move(nv)),
                std::move(toParent)};
    }
    auto const& gen = f.general();
    std::vector<std::vector<NodeSet>> slices;
    slices.reserve(m);
    for (NodeId v : toParent)
    {
        std::vector<NodeSet> list;
        auto const& fam = gen.slices[v];
        list.reserve(fam.count());
        for (uint32_t i = 0; i < fam.count(); ++i)
        {
            list.push_back(remap(fam.slice(i)));
        }
        slices.push_back(std::move(list));
    }
    return {makeGeneral(m, slices), std::move(toParent)};
}

} // namespace fbas
