// Copyright 2026 the fbaskit developers. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef FBASKIT_INTACTNESS_HPP
#define FBASKIT_INTACTNESS_HPP

#include "model.hpp"
#include "quorums.hpp"

#include <functional>

namespace fbas
{

struct DeletedFbas
{
    Fbas fbas;
    // toParent[i] is the original index of surviving node i; empty when the
    // whole universe was deleted.
    std::vector<NodeId> toParent;
};

// Materializes the FBAS without d: nodes in d are removed from the universe
// and from every slice, then slices are deduplicated. Deleting everything
// yields the empty FBAS. Analysis paths thread the deletion set instead;
// this exists for oracles and for exporting.
DeletedFbas deleteNodes(Fbas const& f, NodeSet const& d);

// Whether d is dispensable: the FBAS without d has quorum intersection and
// the complement of d is a quorum (or d is everything).
bool isDset(Fbas const& f, NodeSet const& d);

// Closed-form DSet characterization for the symmetric FBAS (n, k).
bool isSymmetricDset(uint32_t n, uint32_t k, NodeSet const& d);

struct IntactnessReport
{
    NodeSet intact;
    NodeSet smallestDset; // the complement of intact
    NodeSet inputB;
};

// The set of all B-intact nodes of an FBAS with quorum intersection; the
// complement is the smallest DSet containing B. Raises
// kNoQuorumIntersection otherwise.
IntactnessReport intactNodes(Fbas const& f, NodeSet const& b);

// Same, trusting the caller to have verified quorum intersection already.
// Probability sweeps call this thousands of times on one FBAS.
IntactnessReport intactNodesAssumingIntersection(Fbas const& f,
                                                 NodeSet const& b);

// B-intact nodes inside a trust cluster z, computed on the restriction and
// reported in the original index space.
NodeSet intactInCluster(Fbas const& f, NodeSet const& z, NodeSet const& b);

// Whether q is a B-quorum: members outside b each have a slice inside q,
// members of b are unconstrained.
bool isBQuorum(Fbas const& f, NodeSet const& b, NodeSet const& q);

constexpr uint32_t kDefaultBIntactGuard = 20;

// Whether u is a B-intact set: u is empty or a B-quorum, and every pair of
// B-quorums meeting u has an intersection meeting u. Exact but guarded;
// enumerates all B-quorums.
bool isBIntactSet(Fbas const& f, NodeSet const& b, NodeSet const& u,
                  uint32_t maxNodes = kDefaultBIntactGuard);

// Whether every member u (outside b) of every slice s_v of every node v
// outside b has some own slice contained in s_v.
bool hasSubsliceProperty(Fbas const& f, NodeSet const& b);

} // namespace fbas

#endif
