// Copyright 2026 the fbaskit developers. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "nodeset.hpp"

#include <bit>

namespace fbas
{

namespace
{
constexpr uint32_t
wordCount(uint32_t universe)
{
    return (universe + 63) >> 6;
}
}

NodeSet::NodeSet(uint32_t universe)
    : mUniverse(universe), mWords(wordCount(universe), 0)
{
}

NodeSet::NodeSet(uint32_t universe, std::initializer_list<NodeId> members)
    : NodeSet(universe)
{
    for (NodeId v : members)
    {
        insert(v);
    }
}

NodeSet
NodeSet::full(uint32_t universe)
{
    NodeSet s(universe);
    for (auto& w : s.mWords)
    {
        w = ~uint64_t(0);
    }
    s.trimHighBits();
    return s;
}

void
NodeSet::insert(NodeId v)
{
    mWords[v >> 6] |= uint64_t(1) << (v & 63);
}

void
NodeSet::erase(NodeId v)
{
    mWords[v >> 6] &= ~(uint64_t(1) << (v & 63));
}

void
NodeSet::clear()
{
    for (auto& w : mWords)
    {
        w = 0;
    }
}

bool
NodeSet::empty() const
{
    for (auto w : mWords)
    {
        if (w != 0)
        {
            return false;
        }
    }
    return true;
}

uint32_t
NodeSet::size() const
{
    uint32_t n = 0;
    for (auto w : mWords)
    {
        n += static_cast<uint32_t>(std::popcount(w));
    }
    return n;
}

bool
NodeSet::subsetOf(NodeSet const& other) const
{
    for (size_t i = 0; i < mWords.size(); ++i)
    {
        if (mWords[i] & ~other.mWords[i])
        {
            return false;
        }
    }
    return true;
}

bool
NodeSet::intersects(NodeSet const& other) const
{
    for (size_t i = 0; i < mWords.size(); ++i)
    {
        if (mWords[i] & other.mWords[i])
        {
            return true;
        }
    }
    return false;
}

NodeSet&
NodeSet::operator&=(NodeSet const& other)
{
    for (size_t i = 0; i < mWords.size(); ++i)
    {
        mWords[i] &= other.mWords[i];
    }
    return *this;
}

NodeSet&
NodeSet::operator|=(NodeSet const& other)
{
    for (size_t i = 0; i < mWords.size(); ++i)
    {
        mWords[i] |= other.mWords[i];
    }
    return *this;
}

NodeSet&
NodeSet::operator-=(NodeSet const& other)
{
    for (size_t i = 0; i < mWords.size(); ++i)
    {
        mWords[i] &= ~other.mWords[i];
    }
    return *this;
}

NodeSet
NodeSet::complement() const
{
    NodeSet s(*this);
    for (auto& w : s.mWords)
    {
        w = ~w;
    }
    s.trimHighBits();
    return s;
}

NodeId
NodeSet::nextAtOrAfter(NodeId from) const
{
    if (from >= mUniverse)
    {
        return kNone;
    }
    uint32_t wi = from >> 6;
    uint64_t w = mWords[wi] >> (from & 63);
    if (w != 0)
    {
        return from + static_cast<uint32_t>(std::countr_zero(w));
    }
    for (++wi; wi < mWords.size(); ++wi)
    {
        if (mWords[wi] != 0)
        {
            return (wi << 6) +
                   static_cast<uint32_t>(std::countr_zero(mWords[wi]));
        }
    }
    return kNone;
}

std::vector<NodeId>
NodeSet::toVector() const
{
    std::vector<NodeId> out;
    out.reserve(size());
    for (NodeId v : *this)
    {
        out.push_back(v);
    }
    return out;
}

size_t
NodeSet::hash() const
{
    // FNV-1a over the words.
    uint64_t h = 1469598103934665603ull;
    h = (h ^ mUniverse) * 1099511628211ull;
    for (auto w : mWords)
    {
        h = (h ^ w) * 1099511628211ull;
    }
    return static_cast<size_t>(h);
}

void
NodeSet::trimHighBits()
{
    uint32_t rem = mUniverse & 63;
    if (rem != 0 && !mWords.empty())
    {
        mWords.back() &= (uint64_t(1) << rem) - 1;
    }
}

} // namespace fbas
