// Copyright 2026 the fbaskit developers. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef FBASKIT_PROBABILITY_HPP
#define FBASKIT_PROBABILITY_HPP

#include "model.hpp"
#include "rng.hpp"

#include <vector>

namespace fbas
{

enum class DistKind
{
    kAtMostOne,
    kIndependent,
    kGrouped,
    kGroupedByzantine,
    kExplicit,
};

// A probability model over sets of ill-behaved nodes. Factories validate
// ranges and that the total mass is 1 (within 1e-12 for explicit tables).
class FailureDistribution
{
  public:
    static FailureDistribution atMostOne(uint32_t universe, double pEmpty,
                                         std::vector<double> pSingle);
    static FailureDistribution independent(uint32_t universe,
                                           std::vector<double> p);
    static FailureDistribution
    grouped(uint32_t universe, std::vector<NodeSet> orgs,
            std::vector<std::vector<std::pair<NodeSet, double>>> tables);
    static FailureDistribution groupedByzantine(uint32_t universe,
                                                std::vector<NodeSet> orgs,
                                                std::vector<double> nodeFail,
                                                std::vector<double> orgByz);
    static FailureDistribution
    explicitTable(uint32_t universe, std::vector<std::pair<NodeSet, double>>);

    DistKind
    kind() const
    {
        return mKind;
    }
    uint32_t
    universe() const
    {
        return mUniverse;
    }

    double probOf(NodeSet const& b) const;
    NodeSet sample(Rng& rng) const;

    std::vector<NodeSet> const&
    orgs() const
    {
        return mOrgs;
    }
    std::vector<double> const&
    singleProbs() const
    {
        return mP;
    }
    double
    emptyProb() const
    {
        return mPEmpty;
    }

    // The grouped distribution restricted to the organizations inside z;
    // requires every organization to lie fully inside or outside z.
    FailureDistribution restrictTo(NodeSet const& z,
                                   std::vector<NodeId> const& toChild) const;

  private:
    FailureDistribution() = default;

    DistKind mKind = DistKind::kIndependent;
    uint32_t mUniverse = 0;
    double mPEmpty = 0;                          // at-most-one
    std::vector<double> mP;                      // at-most-one / independent
    std::vector<NodeSet> mOrgs;                  // grouped kinds
    std::vector<std::vector<std::pair<NodeSet, double>>> mTables; // grouped
    std::vector<double> mNodeFail, mOrgByz;      // grouped-byzantine
    std::vector<std::pair<NodeSet, double>> mTable; // explicit
};

enum class ProbMethod
{
    kExact,
    kInclusionExclusion,
    kMonteCarlo,
};

struct IntactProbability
{
    double pIntact = 0;
    double pIntactGivenWellBehaved = 0;
    // False when the node is ill-behaved with probability 1 and the
    // conditional has no value.
    bool conditionalDefined = true;
    ProbMethod method = ProbMethod::kExact;
    uint64_t samples = 0;
    uint64_t seed = 0;
    double stdError = 0;
};

constexpr uint32_t kDefaultExactGuard = 16;
constexpr uint32_t kDefaultMaxMaximalDsets = 20;

// The intact node set for every subset of ill-behaved nodes, precomputed so
// that several distributions can be evaluated against one FBAS without
// repeating the sweep. Requires quorum intersection and a small universe.
class IntactTable
{
  public:
    explicit IntactTable(Fbas const& f,
                         uint32_t exactGuard = kDefaultExactGuard);

    uint32_t
    universe() const
    {
        return mUniverse;
    }

    // Exact per-node intactness probabilities under the distribution.
    std::vector<IntactProbability>
    probabilities(FailureDistribution const& d) const;

  private:
    uint32_t mUniverse;
    std::vector<uint32_t> mIntactMask; // indexed by the ill-behaved mask
};

// P(v is intact) summed per definition. At-most-one distributions use the
// closed form over single-node deletions and carry no size guard; the other
// kinds sweep all subsets and are guarded. Grouped kinds over a too-large
// FBAS fall back to the trust-cluster factorization when the organizations
// lie inside SCCs.
IntactProbability
intactProbabilityExact(Fbas const& f, NodeId v, FailureDistribution const& d,
                       uint32_t exactGuard = kDefaultExactGuard);

std::vector<IntactProbability>
intactProbabilityExactAll(Fbas const& f, FailureDistribution const& d,
                          uint32_t exactGuard = kDefaultExactGuard);

// Exact alternative for independent failures via inclusion-exclusion over
// the maximal DSets avoiding v.
IntactProbability intactProbabilityInclExcl(
    Fbas const& f, NodeId v, FailureDistribution const& d,
    uint32_t maxMaximalDsets = kDefaultMaxMaximalDsets);

// Seeded sampling estimate; sample i draws from an independent substream of
// the master seed, so results do not depend on how samples are batched.
IntactProbability intactProbabilityMc(Fbas const& f, NodeId v,
                                      FailureDistribution const& d,
                                      uint64_t samples, uint64_t seed);

std::vector<IntactProbability>
intactProbabilityMcAll(Fbas const& f, FailureDistribution const& d,
                       uint64_t samples, uint64_t seed);

// P(a_1 intact) for the four-organization, three-nodes-each FBAS whose
// slices take 3 of 4 organizations and 2 of 3 nodes within each, with a
// shared per-organization empty-set probability.
double hierarchy4IntactProbability(double orgEmptyProb, double singleA2,
                                   double singleA3);

// The same under the grouped Byzantine model with shared q and r.
double hierarchy4IntactProbabilityByzantine(double q, double r);

} // namespace fbas

#endif
