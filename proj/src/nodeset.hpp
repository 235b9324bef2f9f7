// Copyright 2026 the fbaskit developers. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef FBASKIT_NODESET_HPP
#define FBASKIT_NODESET_HPP

#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace fbas
{

using NodeId = uint32_t;

// A set of nodes over a fixed universe [0, universe), backed by a bitset
// sized to the universe. Iteration is always in ascending index order.
class NodeSet
{
  public:
    NodeSet() = default;
    explicit NodeSet(uint32_t universe);
    NodeSet(uint32_t universe, std::initializer_list<NodeId> members);

    static NodeSet
    full(uint32_t universe);

    uint32_t
    universe() const
    {
        return mUniverse;
    }

    bool
    contains(NodeId v) const
    {
        return (mWords[v >> 6] >> (v & 63)) & 1u;
    }

    void insert(NodeId v);
    void erase(NodeId v);
    void clear();

    bool empty() const;
    uint32_t size() const;

    bool subsetOf(NodeSet const& other) const;
    bool intersects(NodeSet const& other) const;

    NodeSet& operator&=(NodeSet const& other);
    NodeSet& operator|=(NodeSet const& other);
    NodeSet& operator-=(NodeSet const& other);

    friend NodeSet
    operator&(NodeSet lhs, NodeSet const& rhs)
    {
        lhs &= rhs;
        return lhs;
    }
    friend NodeSet
    operator|(NodeSet lhs, NodeSet const& rhs)
    {
        lhs |= rhs;
        return lhs;
    }
    friend NodeSet
    operator-(NodeSet lhs, NodeSet const& rhs)
    {
        lhs -= rhs;
        return lhs;
    }

    NodeSet complement() const;

    bool operator==(NodeSet const& other) const = default;

    // First member >= from, or kNone.
    static constexpr NodeId kNone = UINT32_MAX;
    NodeId nextAtOrAfter(NodeId from) const;
    NodeId
    first() const
    {
        return nextAtOrAfter(0);
    }

    class Iterator
    {
      public:
        using iterator_category = std::input_iterator_tag;
        using value_type = NodeId;
        using difference_type = std::ptrdiff_t;
        using pointer = NodeId const*;
        using reference = NodeId;

        Iterator(NodeSet const* set, NodeId at) : mSet(set), mAt(at)
        {
        }
        NodeId
        operator*() const
        {
            return mAt;
        }
        Iterator&
        operator++()
        {
            mAt = mSet->nextAtOrAfter(mAt + 1);
            return *this;
        }
        bool
        operator!=(Iterator const& other) const
        {
            return mAt != other.mAt;
        }

      private:
        NodeSet const* mSet;
        NodeId mAt;
    };

    Iterator
    begin() const
    {
        return Iterator(this, first());
    }
    Iterator
    end() const
    {
        return Iterator(this, kNone);
    }

    std::span<uint64_t const>
    words() const
    {
        return mWords;
    }

    std::vector<NodeId> toVector() const;

    size_t hash() const;

  private:
    uint32_t mUniverse = 0;
    std::vector<uint64_t> mWords;

    void trimHighBits();
};

struct NodeSetHash
{
    size_t
    operator()(NodeSet const& s) const
    {
        return s.hash();
    }
};

} // namespace fbas

#endif
