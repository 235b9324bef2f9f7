// Copyright 2026 the fbaskit developers. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef FBASKIT_TRUST_GRAPH_HPP
#define FBASKIT_TRUST_GRAPH_HPP

#include "model.hpp"

#include <optional>
#include <vector>

namespace fbas
{

// Directed trust graph: (u, v) is an edge iff v appears in some slice of u
// (for simple nodes: iff v is in q(u)). Every node has a self-loop.
struct TrustGraph
{
    uint32_t universe = 0;
    std::vector<NodeSet> out;

    std::vector<uint32_t> inDegrees() const;
};

struct SccPartition
{
    // Disjoint non-empty components covering the universe.
    std::vector<NodeSet> components;
    // componentOf[v] is the index of v's component.
    std::vector<uint32_t> componentOf;
    // Edges of the condensation DAG, between component indices.
    std::vector<std::vector<uint32_t>> condensation;
    // Components with no outgoing condensation edges.
    std::vector<uint32_t> maximal;
    // The component reachable from every other one, when it exists.
    std::optional<uint32_t> greatest;
};

TrustGraph buildTrustGraph(Fbas const& f);

SccPartition sccPartition(TrustGraph const& g);

// Whether z is closed under reachability in g.
bool isTrustCluster(TrustGraph const& g, NodeSet const& z);

struct RestrictedFbas
{
    Fbas fbas;
    // toParent[i] is the original index of restricted node i.
    std::vector<NodeId> toParent;
};

// The FBAS (Z, S|_Z) over a non-empty trust cluster z, re-indexed densely.
// Slices are unchanged; they already lie inside z.
RestrictedFbas restrictToCluster(Fbas const& f, NodeSet const& z);

} // namespace fbas

#endif
