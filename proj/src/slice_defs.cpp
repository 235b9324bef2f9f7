// Copyright 2026 the fbaskit developers. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "slice_defs.hpp"

#include <algorithm>
#include <unordered_set>

namespace fbas
{

namespace
{

void
collectValidators(SliceDefinition const& d, NodeSet& seen)
{
    if (d.validators.universe() != 0)
    {
        if (seen.universe() == 0)
        {
            seen = d.validators;
        }
        else
        {
            if (seen.universe() != d.validators.universe())
            {
                raise(ErrorCode::kInvalidArgument,
                      "tree vertices disagree on the universe size");
            }
            if (d.validators.intersects(seen))
            {
                raise(ErrorCode::kInvalidArgument,
                      "validator sets of distinct tree vertices must be "
                      "disjoint");
            }
            seen |= d.validators;
        }
    }
    for (auto const& c : d.children)
    {
        collectValidators(c, seen);
    }
}

void
checkThresholds(SliceDefinition const& d)
{
    if (d.threshold > d.validators.size() + d.children.size())
    {
        raise(ErrorCode::kThresholdOutOfRange,
              "vertex threshold exceeds validator and child count");
    }
    for (auto const& c : d.children)
    {
        checkThresholds(c);
    }
}

void
sortAndDedupe(std::vector<NodeSet>& sets)
{
    std::sort(sets.begin(), sets.end(),
              [](NodeSet const& a, NodeSet const& b) {
                  auto wa = a.words();
                  auto wb = b.words();
                  return std::lexicographical_compare(wa.begin(), wa.end(),
                                                      wb.begin(), wb.end());
              });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

} // namespace

void
validateDefinition(SliceDefinition const& d)
{
    NodeSet seen;
    collectValidators(d, seen);
    checkThresholds(d);
}

std::vector<NodeSet>
kSubsets(NodeSet const& m, uint32_t k)
{
    if (k > m.size())
    {
        raise(ErrorCode::kKTooLarge, "k exceeds the set size");
    }
    std::vector<NodeId> pool = m.toVector();
    std::vector<NodeSet> out;
    NodeSet current(m.universe());
    // Iterative combination walk over pool indices.
    std::vector<size_t> pick(k);
    for (uint32_t i = 0; i < k; ++i)
    {
        pick[i] = i;
    }
    while (true)
    {
        current.clear();
        for (uint32_t i = 0; i < k; ++i)
        {
            current.insert(pool[pick[i]]);
        }
        out.push_back(current);
        if (k == 0)
        {
            break;
        }
        // advance
        size_t i = k;
        while (i > 0 && pick[i - 1] == pool.size() - k + (i - 1))
        {
            --i;
        }
        if (i == 0)
        {
            break;
        }
        ++pick[i - 1];
        for (size_t j = i; j < k; ++j)
        {
            pick[j] = pick[j - 1] + 1;
        }
    }
    return out;
}

std::vector<NodeSet>
productSetUnion(std::vector<std::vector<NodeSet>> const& families)
{
    if (families.empty())
    {
        raise(ErrorCode::kInvalidArgument,
              "product set union needs at least one family");
    }
    std::vector<NodeSet> acc = families[0];
    for (size_t i = 1; i < families.size(); ++i)
    {
        std::vector<NodeSet> next;
        next.reserve(acc.size() * families[i].size());
        for (auto const& a : acc)
        {
            for (auto const& b : families[i])
            {
                next.push_back(a | b);
            }
        }
        sortAndDedupe(next);
        acc = std::move(next);
    }
    sortAndDedupe(acc);
    return acc;
}

namespace
{

std::vector<NodeSet>
generateRec(SliceDefinition const& d, uint32_t universe, uint64_t sliceCap)
{
    if (d.threshold == 0)
    {
        return {NodeSet(universe)};
    }
    // The pickable slice families: one singleton family per validator plus
    // the recursively generated family of each child. Children count as
    // distinct picks even when degenerate vertices make their families
    // coincide, matching how thresholds are satisfied in deployed nodes.
    std::vector<std::vector<NodeSet>> options;
    for (NodeId v : d.validators)
    {
        options.push_back({NodeSet(universe, {v})});
    }
    for (auto const& c : d.children)
    {
        options.push_back(generateRec(c, universe, sliceCap));
    }
    std::vector<NodeSet> result;
    for (auto const& combo :
         kSubsets(NodeSet::full(static_cast<uint32_t>(options.size())),
                  d.threshold))
    {
        std::vector<std::vector<NodeSet>> picked;
        for (NodeId i : combo)
        {
            picked.push_back(options[i]);
        }
        auto unions = productSetUnion(picked);
        result.insert(result.end(), unions.begin(), unions.end());
        if (result.size() > sliceCap)
        {
            raise(ErrorCode::kExpansionTooLarge,
                  "slice generation exceeds the configured cap");
        }
    }
    sortAndDedupe(result);
    return result;
}

uint32_t
definitionUniverse(SliceDefinition const& d)
{
    if (d.validators.universe() != 0)
    {
        return d.validators.universe();
    }
    for (auto const& c : d.children)
    {
        uint32_t u = definitionUniverse(c);
        if (u != 0)
        {
            return u;
        }
    }
    return 0;
}

} // namespace

std::vector<NodeSet>
generateSlices(SliceDefinition const& d, uint64_t sliceCap)
{
    validateDefinition(d);
    uint32_t universe = definitionUniverse(d);
    if (universe == 0)
    {
        raise(ErrorCode::kInvalidArgument,
              "definition names no nodes at all");
    }
    return generateRec(d, universe, sliceCap);
}

SliceDefinition
removeNode(SliceDefinition const& d, NodeId v)
{
    SliceDefinition out;
    if (d.validators.universe() != 0 && d.validators.contains(v))
    {
        out.threshold = d.threshold > 0 ? d.threshold - 1 : 0;
        out.validators = d.validators;
        out.validators.erase(v);
        out.children = d.children;
    }
    else
    {
        out.threshold = d.threshold;
        out.validators = d.validators;
        out.children.reserve(d.children.size());
        for (auto const& c : d.children)
        {
            out.children.push_back(removeNode(c, v));
        }
    }
    return out;
}

SliceDefinition
personalize(SliceDefinition const& d, NodeId v)
{
    uint32_t universe = definitionUniverse(d);
    SliceDefinition out;
    out.threshold = 2;
    out.validators = NodeSet(universe, {v});
    out.children = {removeNode(d, v)};
    return out;
}

OrgFbas
generateOrgFbas(std::vector<uint32_t> const& orgSizes,
                std::vector<uint32_t> const& orgThresholds,
                uint32_t rootThreshold, uint64_t sliceCap)
{
    if (orgSizes.empty() || orgSizes.size() != orgThresholds.size())
    {
        raise(ErrorCode::kInvalidArgument,
              "need one size and one threshold per organization");
    }
    if (orgSizes.size() > 26)
    {
        raise(ErrorCode::kInvalidArgument, "at most 26 organizations");
    }
    uint32_t universe = 0;
    for (uint32_t s : orgSizes)
    {
        if (s == 0)
        {
            raise(ErrorCode::kInvalidArgument, "organizations cannot be empty");
        }
        universe += s;
    }
    if (rootThreshold > orgSizes.size())
    {
        raise(ErrorCode::kThresholdOutOfRange,
              "root threshold exceeds the organization count");
    }

    std::vector<std::string> names;
    std::vector<Org> orgs;
    SliceDefinition base;
    base.threshold = rootThreshold;
    base.validators = NodeSet(); // none at the root
    uint32_t next = 0;
    for (size_t k = 0; k < orgSizes.size(); ++k)
    {
        if (orgThresholds[k] > orgSizes[k])
        {
            raise(ErrorCode::kThresholdOutOfRange,
                  "organization threshold exceeds its size");
        }
        char upper = static_cast<char>('A' + k);
        char lower = static_cast<char>('a' + k);
        Org org;
        org.name = std::string(1, upper);
        org.members = NodeSet(universe);
        SliceDefinition child;
        child.threshold = orgThresholds[k];
        child.validators = NodeSet(universe);
        for (uint32_t i = 0; i < orgSizes[k]; ++i)
        {
            names.push_back(std::string(1, lower) + std::to_string(i + 1));
            org.members.insert(next);
            child.validators.insert(next);
            ++next;
        }
        orgs.push_back(std::move(org));
        base.children.push_back(std::move(child));
    }
    validateDefinition(base);

    std::vector<std::vector<NodeSet>> slices(universe);
    for (uint32_t v = 0; v < universe; ++v)
    {
        slices[v] = generateSlices(personalize(base, v), sliceCap);
    }
    OrgFbas out{makeGeneral(universe, slices), NameTable(std::move(names)),
                std::move(orgs), std::move(base)};
    return out;
}

Fbas
generateSymmetric(uint32_t nodes, uint32_t threshold)
{
    if (nodes < 1)
    {
        raise(ErrorCode::kInvalidArgument, "need at least one node");
    }
    if (threshold < 1 || threshold > nodes)
    {
        raise(ErrorCode::kThresholdOutOfRange, "k out of [1, n]");
    }
    std::vector<NodeSet> q(nodes, NodeSet::full(nodes));
    std::vector<uint32_t> n(nodes, threshold);
    return makeSimple(nodes, std::move(q), std::move(n));
}

} // namespace fbas
