// Copyright 2026 the fbaskit developers. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef FBASKIT_MODEL_HPP
#define FBASKIT_MODEL_HPP

#include "errors.hpp"
#include "nodeset.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace fbas
{

// Per-node family of explicit quorum slices, stored as a flat word table so
// that slice-containment scans touch contiguous memory.
class SliceFamily
{
  public:
    SliceFamily() = default;
    SliceFamily(uint32_t universe, std::vector<NodeSet> const& slices);

    uint32_t
    count() const
    {
        return mCount;
    }
    uint32_t
    wordsPerSlice() const
    {
        return mWordsPerSlice;
    }
    std::span<uint64_t const>
    words() const
    {
        return mWords;
    }

    NodeSet slice(uint32_t i) const;
    NodeSet unionOfSlices() const;
    uint64_t totalMembers() const;

    // Whether some slice s satisfies s & ~allowed == 0, i.e. s is contained
    // in the set whose words are given by `allowed`.
    bool anySliceWithin(std::span<uint64_t const> allowed) const;

  private:
    uint32_t mUniverse = 0;
    uint32_t mWordsPerSlice = 0;
    uint32_t mCount = 0;
    std::vector<uint64_t> mWords;
};

struct GeneralFbas
{
    uint32_t universe = 0;
    std::vector<SliceFamily> slices; // one family per node
};

struct SimpleFbas
{
    uint32_t universe = 0;
    std::vector<NodeSet> quorumSet;    // q(v)
    std::vector<uint32_t> threshold;   // n(v)
};

// An FBAS in one of its two representations. Values are immutable after
// construction; every analysis operation is a pure function of one.
class Fbas
{
  public:
    uint32_t universe() const;
    bool
    isSimple() const
    {
        return std::holds_alternative<SimpleFbas>(mRep);
    }
    bool
    isEmpty() const
    {
        return universe() == 0;
    }

    GeneralFbas const&
    general() const
    {
        return std::get<GeneralFbas>(mRep);
    }
    SimpleFbas const&
    simple() const
    {
        return std::get<SimpleFbas>(mRep);
    }

    friend Fbas makeGeneral(uint32_t universe,
                            std::vector<std::vector<NodeSet>> const& slices);
    friend Fbas makeSimple(uint32_t universe, std::vector<NodeSet> quorumSet,
                           std::vector<uint32_t> threshold);
    friend Fbas makeEmpty();

  private:
    explicit Fbas(std::variant<GeneralFbas, SimpleFbas> rep)
        : mRep(std::move(rep))
    {
    }
    std::variant<GeneralFbas, SimpleFbas> mRep;
};

// Validating constructors. Both require universe >= 1 and reject exactly the
// invariant violations of the corresponding representation.
Fbas makeGeneral(uint32_t universe,
                 std::vector<std::vector<NodeSet>> const& slices);
Fbas makeSimple(uint32_t universe, std::vector<NodeSet> quorumSet,
                std::vector<uint32_t> threshold);

// The FBAS left after deleting every node, used as the value of F^V.
Fbas makeEmpty();

// All n(v)-subsets of q(v) containing v, for every node. Bounded by
// `expansionCap` generated slices per node.
constexpr uint64_t kDefaultExpansionCap = 1000000;
Fbas expandSimple(Fbas const& f, uint64_t expansionCap = kDefaultExpansionCap);

// The explicit slices of one simple-form node: all threshold-subsets of q
// containing v.
std::vector<NodeSet> simpleNodeSlices(NodeSet const& q, uint32_t threshold,
                                      NodeId v, uint64_t expansionCap);

// |V| plus the sum of per-node slice sizes (|q(v)| for simple nodes).
uint64_t fbasSize(Fbas const& f);

// Bidirectional node name table. Indices are dense in [0, size).
class NameTable
{
  public:
    NameTable() = default;
    explicit NameTable(std::vector<std::string> names);

    static NameTable numbered(uint32_t count, std::string const& prefix = "");

    uint32_t
    size() const
    {
        return static_cast<uint32_t>(mNames.size());
    }
    std::string const&
    name(NodeId v) const
    {
        return mNames.at(v);
    }
    // kNone if unknown.
    NodeId indexOf(std::string const& name) const;

    std::vector<std::string> const&
    names() const
    {
        return mNames;
    }

    static constexpr NodeId kNone = UINT32_MAX;

  private:
    std::vector<std::string> mNames;
    std::unordered_map<std::string, NodeId> mIndex;
};

} // namespace fbas

#endif
