// Copyright 2026 the fbaskit developers. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef FBASKIT_QUORUMS_HPP
#define FBASKIT_QUORUMS_HPP

#include "model.hpp"

#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace fbas
{

// Every operation here takes an optional deletion set `deleted` and then
// answers for the FBAS without those nodes, without ever materializing it.

// Whether node v has a quorum slice contained in u, after deletion.
// Requires v in u, u disjoint from deleted, v not deleted.
bool containsSlice(Fbas const& f, NodeSet const& u, NodeId v,
                   NodeSet const& deleted);
bool containsSlice(Fbas const& f, NodeSet const& u, NodeId v);

// Whether non-empty u is a quorum, after deletion.
bool isQuorum(Fbas const& f, NodeSet const& u, NodeSet const& deleted);
bool isQuorum(Fbas const& f, NodeSet const& u);

// The greatest quorum q with w <= q <= u, or the empty set if none exists.
NodeSet greatestQuorum(Fbas const& f, NodeSet const& u, NodeSet const& w,
                       NodeSet const& deleted);
NodeSet greatestQuorum(Fbas const& f, NodeSet const& u);

// Whether some proper subset of u is a quorum, after deletion.
bool containsProperSubQuorum(Fbas const& f, NodeSet const& u,
                             NodeSet const& deleted);
bool containsProperSubQuorum(Fbas const& f, NodeSet const& u);

enum class EnumMode
{
    // Every quorum, greatest first; polynomial delay between outputs.
    kAll,
    // Every minimal quorum of size at most half the surviving universe.
    kMinimalBounded,
    // Every minimal quorum, with no size bound.
    kMinimalAll,
};

// Demand-driven quorum stream. With a non-empty `freePass` set B the stream
// yields B-quorums instead: members of B need no contained slice.
class QuorumEnumerator
{
  public:
    QuorumEnumerator(Fbas const& f, EnumMode mode, NodeSet deleted,
                     NodeSet freePass);
    QuorumEnumerator(Fbas const& f, EnumMode mode = EnumMode::kAll);
    QuorumEnumerator(Fbas const& f, EnumMode mode, NodeSet deleted);
    ~QuorumEnumerator();
    QuorumEnumerator(QuorumEnumerator&&) noexcept;
    QuorumEnumerator& operator=(QuorumEnumerator&&) noexcept;

    std::optional<NodeSet> next();

    // greatestQuorum invocations since the previous yield, including the one
    // that produced the current output.
    uint64_t
    gqCallsSinceLastYield() const
    {
        return mGqSinceYield;
    }

  private:
    struct Impl;
    std::unique_ptr<Impl> mImpl;
    uint64_t mGqSinceYield = 0;
};

// Collects at most `cap` quorums; raises kTooManyQuorums beyond.
std::vector<NodeSet> collectQuorums(Fbas const& f, EnumMode mode,
                                    NodeSet const& deleted, uint64_t cap);

struct QuorumIntersectionResult
{
    bool intersects = true;
    // Present exactly when intersects is false: two disjoint quorums, the
    // first of them minimal.
    std::optional<std::pair<NodeSet, NodeSet>> witness;
};

QuorumIntersectionResult quorumIntersection(Fbas const& f,
                                            NodeSet const& deleted);
QuorumIntersectionResult quorumIntersection(Fbas const& f);

// Same answer as quorumIntersection, reached by first splitting the trust
// graph into strongly connected components and deciding on the greatest one.
QuorumIntersectionResult quorumIntersectionWithSccPreprocessing(Fbas const& f);

// Minimum |Q1 ^ Q2| over distinct quorum pairs, computed over minimal
// quorums. Empty when the FBAS has only a single quorum.
std::optional<uint32_t>
minIntersectionSize(Fbas const& f, uint64_t maxStoredQuorums = 1000000);

} // namespace fbas

#endif
