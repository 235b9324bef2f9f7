// Copyright 2026 the fbaskit developers. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "model.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace fbas
{

SliceFamily::SliceFamily(uint32_t universe, std::vector<NodeSet> const& slices)
    : mUniverse(universe),
      mWordsPerSlice((universe + 63) >> 6),
      mCount(static_cast<uint32_t>(slices.size()))
{
    mWords.reserve(size_t(mWordsPerSlice) * mCount);
    for (auto const& s : slices)
    {
        auto w = s.words();
        mWords.insert(mWords.end(), w.begin(), w.end());
    }
}

NodeSet
SliceFamily::slice(uint32_t i) const
{
    NodeSet s(mUniverse);
    auto w = std::span<uint64_t const>(mWords).subspan(
        size_t(i) * mWordsPerSlice, mWordsPerSlice);
    for (uint32_t j = 0; j < mWordsPerSlice; ++j)
    {
        for (uint64_t bits = w[j]; bits != 0; bits &= bits - 1)
        {
            s.insert((j << 6) + static_cast<uint32_t>(std::countr_zero(bits)));
        }
    }
    return s;
}

NodeSet
SliceFamily::unionOfSlices() const
{
    std::vector<uint64_t> acc(mWordsPerSlice, 0);
    uint64_t const* p = mWords.data();
    for (uint32_t i = 0; i < mCount; ++i, p += mWordsPerSlice)
    {
        for (uint32_t j = 0; j < mWordsPerSlice; ++j)
        {
            acc[j] |= p[j];
        }
    }
    NodeSet u(mUniverse);
    for (uint32_t j = 0; j < mWordsPerSlice; ++j)
    {
        for (uint64_t bits = acc[j]; bits != 0; bits &= bits - 1)
        {
            u.insert((j << 6) + static_cast<uint32_t>(std::countr_zero(bits)));
        }
    }
    return u;
}

uint64_t
SliceFamily::totalMembers() const
{
    uint64_t n = 0;
    for (auto w : mWords)
    {
        n += static_cast<uint64_t>(std::popcount(w));
    }
    return n;
}

bool
SliceFamily::anySliceWithin(std::span<uint64_t const> allowed) const
{
    uint64_t const* p = mWords.data();
    if (mWordsPerSlice == 1)
    {
        uint64_t mask = ~allowed[0];
        for (uint32_t i = 0; i < mCount; ++i)
        {
            if ((p[i] & mask) == 0)
            {
                return true;
            }
        }
        return false;
    }
    for (uint32_t i = 0; i < mCount; ++i, p += mWordsPerSlice)
    {
        bool inside = true;
        for (uint32_t j = 0; j < mWordsPerSlice; ++j)
        {
            if (p[j] & ~allowed[j])
            {
                inside = false;
                break;
            }
        }
        if (inside)
        {
            return true;
        }
    }
    return false;
}

uint32_t
Fbas::universe() const
{
    return isSimple() ? simple().universe : general().universe;
}

Fbas
makeGeneral(uint32_t universe, std::vector<std::vector<NodeSet>> const& slices)
{
    if (universe < 1)
    {
        raise(ErrorCode::kInvalidArgument, "universe must be at least 1");
    }
    if (slices.size() != universe)
    {
        raise(ErrorCode::kInvalidArgument,
              "need exactly one slice list per node");
    }
    GeneralFbas g;
    g.universe = universe;
    g.slices.reserve(universe);
    for (uint32_t v = 0; v < universe; ++v)
    {
        auto const& list = slices[v];
        if (list.empty())
        {
            raise(ErrorCode::kEmptySliceSet,
                  "node " + std::to_string(v) + " has no quorum slices");
        }
        std::unordered_set<NodeSet, NodeSetHash> seen;
        for (auto const& s : list)
        {
            if (s.universe() != universe)
            {
                raise(ErrorCode::kUnknownNode,
                      "slice of node " + std::to_string(v) +
                          " refers outside the universe");
            }
            if (!s.contains(v))
            {
                raise(ErrorCode::kMembershipViolation,
                      "node " + std::to_string(v) +
                          " is missing from one of its own slices");
            }
            if (!seen.insert(s).second)
            {
                raise(ErrorCode::kDuplicateSlice,
                      "node " + std::to_string(v) + " lists a slice twice");
            }
        }
        g.slices.emplace_back(universe, list);
    }
    return Fbas(std::move(g));
}

Fbas
makeSimple(uint32_t universe, std::vector<NodeSet> quorumSet,
           std::vector<uint32_t> threshold)
{
    if (universe < 1)
    {
        raise(ErrorCode::kInvalidArgument, "universe must be at least 1");
    }
    if (quorumSet.size() != universe || threshold.size() != universe)
    {
        raise(ErrorCode::kInvalidArgument,
              "need q(v) and n(v) for every node");
    }
    for (uint32_t v = 0; v < universe; ++v)
    {
        if (quorumSet[v].universe() != universe)
        {
            raise(ErrorCode::kUnknownNode,
                  "q(" + std::to_string(v) + ") refers outside the universe");
        }
        if (!quorumSet[v].contains(v))
        {
            raise(ErrorCode::kMembershipViolation,
                  "node " + std::to_string(v) + " is missing from its own q");
        }
        if (threshold[v] < 1 || threshold[v] > quorumSet[v].size())
        {
            raise(ErrorCode::kThresholdOutOfRange,
                  "n(" + std::to_string(v) + ") out of [1, |q|]");
        }
    }
    SimpleFbas s;
    s.universe = universe;
    s.quorumSet = std::move(quorumSet);
    s.threshold = std::move(threshold);
    return Fbas(std::move(s));
}

Fbas
makeEmpty()
{
    GeneralFbas g;
    g.universe = 0;
    return Fbas(std::move(g));
}

namespace
{

// binomial(n, k) clamped to avoid overflow; anything above the cap is
// reported as cap + 1.
uint64_t
binomialClamped(uint64_t n, uint64_t k, uint64_t cap)
{
    if (k > n)
    {
        return 0;
    }
    k = std::min(k, n - k);
    uint64_t result = 1;
    for (uint64_t i = 0; i < k; ++i)
    {
        if (result > cap)
        {
            return cap + 1;
        }
        result = result * (n - i) / (i + 1);
    }
    return std::min(result, cap + 1);
}

void
enumerateSubsets(std::vector<NodeId> const& pool, uint32_t k,
                 NodeSet& current, size_t from, std::vector<NodeSet>& out)
{
    if (k == 0)
    {
        out.push_back(current);
        return;
    }
    for (size_t i = from; i + k <= pool.size(); ++i)
    {
        current.insert(pool[i]);
        enumerateSubsets(pool, k - 1, current, i + 1, out);
        current.erase(pool[i]);
    }
}

} // namespace

std::vector<NodeSet>
simpleNodeSlices(NodeSet const& q, uint32_t threshold, NodeId v,
                 uint64_t expansionCap)
{
    uint64_t n = binomialClamped(q.size() - 1, threshold - 1, expansionCap);
    if (n > expansionCap)
    {
        raise(ErrorCode::kExpansionTooLarge,
              "expanding node " + std::to_string(v) + " exceeds the cap");
    }
    std::vector<NodeId> others;
    for (NodeId u : q)
    {
        if (u != v)
        {
            others.push_back(u);
        }
    }
    std::vector<NodeSet> out;
    NodeSet base(q.universe(), {v});
    enumerateSubsets(others, threshold - 1, base, 0, out);
    return out;
}

Fbas
expandSimple(Fbas const& f, uint64_t expansionCap)
{
    auto const& s = f.simple();
    std::vector<std::vector<NodeSet>> slices(s.universe);
    for (uint32_t v = 0; v < s.universe; ++v)
    {
        slices[v] =
            simpleNodeSlices(s.quorumSet[v], s.threshold[v], v, expansionCap);
    }
    return makeGeneral(s.universe, slices);
}

uint64_t
fbasSize(Fbas const& f)
{
    if (f.isEmpty())
    {
        return 0;
    }
    uint64_t total = f.universe();
    if (f.isSimple())
    {
        for (auto const& q : f.simple().quorumSet)
        {
            total += q.size();
        }
    }
    else
    {
        for (auto const& fam : f.general().slices)
        {
            total += fam.totalMembers();
        }
    }
    return total;
}

NameTable::NameTable(std::vector<std::string> names) : mNames(std::move(names))
{
    for (uint32_t i = 0; i < mNames.size(); ++i)
    {
        mIndex.emplace(mNames[i], i);
    }
}

NameTable
NameTable::numbered(uint32_t count, std::string const& prefix)
{
    std::vector<std::string> names;
    names.reserve(count);
    for (uint32_t i = 0; i < count; ++i)
    {
        names.push_back(prefix + std::to_string(i + 1));
    }
    return NameTable(std::move(names));
}

NodeId
NameTable::indexOf(std::string const& name) const
{
    auto it = mIndex.find(name);
    return it == mIndex.end() ? kNone : it->second;
}

} // namespace fbas
