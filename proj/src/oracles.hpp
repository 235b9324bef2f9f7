// Copyright 2026 the fbaskit developers. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef FBASKIT_ORACLES_HPP
#define FBASKIT_ORACLES_HPP

#include "model.hpp"
#include "rng.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace fbas
{

// Brute-force references. These deliberately avoid the search machinery in
// quorums.cpp: they filter subsets against the definitions directly, so they
// stay an independent check of the main algorithms.

constexpr uint32_t kBruteQuorumGuard = 16;
constexpr uint32_t kBruteDsetGuard = 12;

// All quorums, by filtering every non-empty subset. universe <= 16.
std::vector<NodeSet> bruteQuorums(Fbas const& f);

// All B-quorums. universe <= 16.
std::vector<NodeSet> bruteBQuorums(Fbas const& f, NodeSet const& b);

// All minimal quorums, optionally only those within half the universe.
std::vector<NodeSet> bruteMinimalQuorums(Fbas const& f, bool sizeBounded);

// Whether any two quorums are disjoint; the first witness found if so.
std::optional<std::pair<NodeSet, NodeSet>> bruteDisjointQuorums(Fbas const& f);

// All DSets, by the definition applied to the materialized deletions.
// Guarded to 12 nodes unless the caller raises the cap (the inner quorum
// filter still refuses more than 16).
std::vector<NodeSet> bruteDsets(Fbas const& f,
                                uint32_t maxNodes = kBruteDsetGuard);

// Whether d is a DSet, decided on the materialized FBAS without d.
bool bruteIsDset(Fbas const& f, NodeSet const& d);

// The B-intact nodes by definition: v such that some DSet contains b but
// not v. universe <= 12.
NodeSet bruteIntactNodes(Fbas const& f, NodeSet const& b);

// A 3-CNF formula: clauses of exactly three literals. A literal is a
// variable index with a negation flag.
struct Literal
{
    uint32_t variable = 0;
    bool negated = false;

    bool
    operator==(Literal const&) const = default;
};

struct CnfFormula
{
    uint32_t variables = 0;
    std::vector<std::array<Literal, 3>> clauses;
};

struct ReducedFbas
{
    Fbas fbas;
    NameTable names;
};

// The simple FBAS of the quorum-split hardness reduction: it has two
// disjoint quorums exactly when the formula is satisfiable.
ReducedFbas reduce3Sat(CnfFormula const& phi);

// Brute-force satisfiability referee, up to 20 variables.
bool bruteSatisfiable(CnfFormula const& phi);

// Parses DIMACS CNF text; every clause must have exactly three literals.
CnfFormula parseDimacs(std::string const& text);

// Randomized small FBAS families for oracle cross-checks. All deterministic
// in the seed.
Fbas randomGeneralFbas(Rng& rng, uint32_t nodes);
Fbas randomSimpleFbas(Rng& rng, uint32_t nodes);
Fbas randomSymmetricFbas(Rng& rng, uint32_t nodes);
Fbas randomOrgTreeFbas(Rng& rng, uint32_t maxNodes);

} // namespace fbas

#endif
