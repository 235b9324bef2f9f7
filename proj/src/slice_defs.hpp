// Copyright 2026 the fbaskit developers. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef FBASKIT_SLICE_DEFS_HPP
#define FBASKIT_SLICE_DEFS_HPP

#include "model.hpp"
#include "nodeset.hpp"

#include <vector>

namespace fbas
{

// Stellar-style quorum slice definition: a rooted threshold tree whose
// vertices hold a threshold, a set of validators and child definitions.
// Validator sets of distinct vertices must be disjoint.
struct SliceDefinition
{
    uint32_t threshold = 0;
    NodeSet validators;
    std::vector<SliceDefinition> children;
};

// Validates the tree invariants (disjoint validators, threshold bounds).
void validateDefinition(SliceDefinition const& d);

// All k-element subsets of the members of `m`, in deterministic order.
std::vector<NodeSet> kSubsets(NodeSet const& m, uint32_t k);

// All unions of one pick per input family, duplicates removed.
std::vector<NodeSet> productSetUnion(std::vector<std::vector<NodeSet>> const& families);

constexpr uint64_t kDefaultSliceCap = 1000000;

// Slices generated by the definition: for each threshold-subset of the
// vertex's validator singletons and child slice families, the product set
// union of the picks. Deduplicated; deterministic order.
std::vector<NodeSet> generateSlices(SliceDefinition const& d,
                                    uint64_t sliceCap = kDefaultSliceCap);

// R_v: remove node v from the tree. A vertex whose threshold was already 0
// keeps threshold 0 (thresholds are clamped at zero).
SliceDefinition removeNode(SliceDefinition const& d, NodeId v);

// The definition (2, {v}, {R_v(d)}) a node actually runs with; every slice
// it generates contains v.
SliceDefinition personalize(SliceDefinition const& d, NodeId v);

// A labeled organization block.
struct Org
{
    std::string name;
    NodeSet members;
};

struct OrgFbas
{
    Fbas fbas;
    NameTable names;
    std::vector<Org> orgs;
    SliceDefinition baseDefinition;
};

// The n-organization FBAS family: base definition
// (rootThreshold, {}, {(t_1, O_1), ..., (t_n, O_n)}), each node running the
// personalized form. Org k < 26 is labeled 'A' + k with members like "a1".
OrgFbas generateOrgFbas(std::vector<uint32_t> const& orgSizes,
                        std::vector<uint32_t> const& orgThresholds,
                        uint32_t rootThreshold,
                        uint64_t sliceCap = kDefaultSliceCap);

// The symmetric simple FBAS (V, k): q(v) = V and n(v) = k for every node.
Fbas generateSymmetric(uint32_t nodes, uint32_t threshold);

} // namespace fbas

#endif
