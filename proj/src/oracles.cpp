// Copyright 2026 the fbaskit developers. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "oracles.hpp"
#include "intactness.hpp"
#include "slice_defs.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace fbas
{

namespace
{

NodeSet
setFromMask(uint32_t universe, uint32_t mask)
{
    NodeSet s(universe);
    for (uint32_t v = 0; v < universe; ++v)
    {
        if (mask & (uint32_t(1) << v))
        {
            s.insert(v);
        }
    }
    return s;
}

// Definition-level quorum test on an explicit general FBAS.
bool
definitionQuorum(GeneralFbas const& g, NodeSet const& u, NodeSet const& b)
{
    for (NodeId v : u)
    {
        if (b.universe() != 0 && b.contains(v))
        {
            continue;
        }
        auto const& fam = g.slices[v];
        bool found = false;
        for (uint32_t i = 0; i < fam.count(); ++i)
        {
            if (fam.slice(i).subsetOf(u))
            {
                found = true;
                break;
            }
        }
        if (!found)
        {
            return false;
        }
    }
    return true;
}

Fbas
materialized(Fbas const& f)
{
    return f.isSimple() ? expandSimple(f) : f;
}

std::vector<NodeSet>
filterSubsets(Fbas const& f, NodeSet const& b)
{
    uint32_t n = f.universe();
    if (n > kBruteQuorumGuard)
    {
        raise(ErrorCode::kInstanceTooLarge,
              "brute-force quorum filtering is guarded to 16 nodes");
    }
    Fbas mat = materialized(f);
    std::vector<NodeSet> out;
    for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask)
    {
        NodeSet u = setFromMask(n, mask);
        if (definitionQuorum(mat.general(), u, b))
        {
            out.push_back(std::move(u));
        }
    }
    return out;
}

} // namespace

std::vector<NodeSet>
bruteQuorums(Fbas const& f)
{
    return filterSubsets(f, NodeSet());
}

std::vector<NodeSet>
bruteBQuorums(Fbas const& f, NodeSet const& b)
{
    return filterSubsets(f, b);
}

std::vector<NodeSet>
bruteMinimalQuorums(Fbas const& f, bool sizeBounded)
{
    auto quorums = bruteQuorums(f);
    std::vector<NodeSet> out;
    for (auto const& q : quorums)
    {
        bool minimal = true;
        for (auto const& other : quorums)
        {
            if (!(other == q) && other.subsetOf(q))
            {
                minimal = false;
                break;
            }
        }
        if (minimal && (!sizeBounded || 2 * q.size() <= f.universe()))
        {
            out.push_back(q);
        }
    }
    return out;
}

std::optional<std::pair<NodeSet, NodeSet>>
bruteDisjointQuorums(Fbas const& f)
{
    auto quorums = bruteQuorums(f);
    for (size_t i = 0; i < quorums.size(); ++i)
    {
        for (size_t j = i + 1; j < quorums.size(); ++j)
        {
            if (!quorums[i].intersects(quorums[j]))
            {
                return std::make_pair(quorums[i], quorums[j]);
            }
        }
    }
    return std::nullopt;
}

bool
bruteIsDset(Fbas const& f, NodeSet const& d)
{
    NodeSet rest = d.complement();
    if (!rest.empty())
    {
        Fbas mat = materialized(f);
        if (!definitionQuorum(mat.general(), rest, NodeSet()))
        {
            return false;
        }
    }
    auto without = deleteNodes(f, d);
    if (without.fbas.isEmpty())
    {
        return true;
    }
    auto quorums = bruteQuorums(without.fbas);
    for (size_t i = 0; i < quorums.size(); ++i)
    {
        for (size_t j = i + 1; j < quorums.size(); ++j)
        {
            if (!quorums[i].intersects(quorums[j]))
            {
                return false;
            }
        }
    }
    return true;
}

std::vector<NodeSet>
bruteDsets(Fbas const& f, uint32_t maxNodes)
{
    uint32_t n = f.universe();
    if (n > maxNodes)
    {
        raise(ErrorCode::kInstanceTooLarge,
              "brute-force DSet enumeration is guarded to " +
                  std::to_string(maxNodes) + " nodes");
    }
    std::vector<NodeSet> out;
    for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask)
    {
        NodeSet d = setFromMask(n, static_cast<uint32_t>(mask));
        if (bruteIsDset(f, d))
        {
            out.push_back(std::move(d));
        }
    }
    return out;
}

NodeSet
bruteIntactNodes(Fbas const& f, NodeSet const& b)
{
    auto dsets = bruteDsets(f);
    NodeSet intact(f.universe());
    for (uint32_t v = 0; v < f.universe(); ++v)
    {
        for (auto const& d : dsets)
        {
            if (!d.contains(v) && b.subsetOf(d))
            {
                intact.insert(v);
                break;
            }
        }
    }
    return intact;
}

ReducedFbas
reduce3Sat(CnfFormula const& phi)
{
    uint32_t r = phi.variables;
    uint32_t m = static_cast<uint32_t>(phi.clauses.size());
    if (r < 1 || m < 1)
    {
        raise(ErrorCode::kMalformedFormula,
              "the reduction needs at least one variable and one clause");
    }
    for (auto const& clause : phi.clauses)
    {
        for (auto const& lit : clause)
        {
            if (lit.variable >= r)
            {
                raise(ErrorCode::kMalformedFormula,
                      "literal names a variable outside the declared range");
            }
        }
    }

    uint32_t n = 1 + 3 * r + 4 * m;
    auto star = []() { return NodeId(0); };
    auto aNode = [&](uint32_t k) { return 1 + 3 * k; };       // k in [0, r)
    auto litNode = [&](uint32_t k, bool negated) {
        return 1 + 3 * k + (negated ? 2u : 1u);
    };
    auto bNode = [&](uint32_t i) { return 1 + 3 * r + 4 * i; }; // i in [0, m)
    auto cNode = [&](uint32_t i, uint32_t j) {
        return 1 + 3 * r + 4 * i + 1 + j; // j in [0, 3)
    };

    std::vector<std::string> names(n);
    names[star()] = "star";
    for (uint32_t k = 0; k < r; ++k)
    {
        names[aNode(k)] = "a" + std::to_string(k + 1);
        names[litNode(k, false)] = "x" + std::to_string(k + 1);
        names[litNode(k, true)] = "-x" + std::to_string(k + 1);
    }
    for (uint32_t i = 0; i < m; ++i)
    {
        names[bNode(i)] = "b" + std::to_string(i + 1);
        for (uint32_t j = 0; j < 3; ++j)
        {
            names[cNode(i, j)] =
                "c" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
        }
    }

    std::vector<NodeSet> q(n, NodeSet(n));
    std::vector<uint32_t> t(n, 0);

    q[star()] = NodeSet(n, {star()});
    for (uint32_t i = 0; i < m; ++i)
    {
        q[star()].insert(bNode(i));
    }
    t[star()] = m + 1;

    for (uint32_t k = 0; k < r; ++k)
    {
        q[aNode(k)] = NodeSet(
            n, {aNode(k), litNode(k, false), litNode(k, true)});
        t[aNode(k)] = 2;

        for (bool neg : {false, true})
        {
            NodeId l = litNode(k, neg);
            q[l] = NodeSet(n, {l, aNode((k + 1) % r)});
            for (uint32_t i = 0; i < m; ++i)
            {
                for (uint32_t j = 0; j < 3; ++j)
                {
                    if (phi.clauses[i][j].variable == k &&
                        phi.clauses[i][j].negated == neg)
                    {
                        q[l].insert(cNode(i, j));
                    }
                }
            }
            t[l] = q[l].size();
        }
    }

    for (uint32_t i = 0; i < m; ++i)
    {
        q[bNode(i)] =
            NodeSet(n, {bNode(i), cNode(i, 0), cNode(i, 1), cNode(i, 2)});
        t[bNode(i)] = 2;
        for (uint32_t j = 0; j < 3; ++j)
        {
            q[cNode(i, j)] = NodeSet(n, {cNode(i, j), star(), aNode(0)});
            t[cNode(i, j)] = 2;
        }
    }

    return {makeSimple(n, std::move(q), std::move(t)),
            NameTable(std::move(names))};
}

bool
bruteSatisfiable(CnfFormula const& phi)
{
    if (phi.variables > 20)
    {
        raise(ErrorCode::kInstanceTooLarge,
              "the satisfiability referee is limited to 20 variables");
    }
    for (uint32_t assignment = 0; assignment < (uint32_t(1) << phi.variables);
         ++assignment)
    {
        bool all = true;
        for (auto const& clause : phi.clauses)
        {
            bool any = false;
            for (auto const& lit : clause)
            {
                bool value = (assignment >> lit.variable) & 1;
                if (value != lit.negated)
                {
                    any = true;
                    break;
                }
            }
            if (!any)
            {
                all = false;
                break;
            }
        }
        if (all)
        {
            return true;
        }
    }
    return false;
}

CnfFormula
parseDimacs(std::string const& text)
{
    std::istringstream in(text);
    std::string line;
    CnfFormula phi;
    bool sawHeader = false;
    uint64_t declaredClauses = 0;
    std::vector<int64_t> pending;
    while (std::getline(in, line))
    {
        if (line.empty() || line[0] == 'c')
        {
            continue;
        }
        std::istringstream fields(line);
        if (!sawHeader)
        {
            std::string p, kind;
            if (!(fields >> p >> kind >> phi.variables >> declaredClauses) ||
                p != "p" || kind != "cnf")
            {
                raise(ErrorCode::kParseError,
                      "expected a DIMACS header: p cnf <vars> <clauses>");
            }
            sawHeader = true;
            continue;
        }
        int64_t lit;
        while (fields >> lit)
        {
            if (lit == 0)
            {
                if (pending.size() != 3)
                {
                    raise(ErrorCode::kMalformedFormula,
                          "every clause must have exactly three literals");
                }
                std::array<Literal, 3> clause;
                for (size_t i = 0; i < 3; ++i)
                {
                    int64_t v = pending[i];
                    uint64_t var = static_cast<uint64_t>(v < 0 ? -v : v) - 1;
                    if (var >= phi.variables)
                    {
                        raise(ErrorCode::kParseError,
                              "literal exceeds the declared variable count");
                    }
                    clause[i] = {static_cast<uint32_t>(var), v < 0};
                }
                phi.clauses.push_back(clause);
                pending.clear();
            }
            else
            {
                pending.push_back(lit);
            }
        }
    }
    if (!sawHeader)
    {
        raise(ErrorCode::kParseError, "missing DIMACS header");
    }
    if (!pending.empty())
    {
        raise(ErrorCode::kMalformedFormula, "unterminated clause");
    }
    if (phi.clauses.size() != declaredClauses)
    {
        raise(ErrorCode::kParseError,
              "clause count does not match the header");
    }
    return phi;
}

Fbas
randomGeneralFbas(Rng& rng, uint32_t nodes)
{
    std::vector<std::vector<NodeSet>> slices(nodes);
    for (uint32_t v = 0; v < nodes; ++v)
    {
        uint32_t count = 1 + static_cast<uint32_t>(rng.nextBelow(3));
        std::unordered_set<NodeSet, NodeSetHash> seen;
        for (uint32_t i = 0; i < count; ++i)
        {
            NodeSet s(nodes, {v});
            for (uint32_t u = 0; u < nodes; ++u)
            {
                if (u != v && rng.nextBool(0.35))
                {
                    s.insert(u);
                }
            }
            if (seen.insert(s).second)
            {
                slices[v].push_back(std::move(s));
            }
        }
    }
    return makeGeneral(nodes, slices);
}

Fbas
randomSimpleFbas(Rng& rng, uint32_t nodes)
{
    std::vector<NodeSet> q;
    std::vector<uint32_t> t;
    for (uint32_t v = 0; v < nodes; ++v)
    {
        NodeSet s(nodes, {v});
        for (uint32_t u = 0; u < nodes; ++u)
        {
            if (u != v && rng.nextBool(0.5))
            {
                s.insert(u);
            }
        }
        t.push_back(1 + static_cast<uint32_t>(rng.nextBelow(s.size())));
        q.push_back(std::move(s));
    }
    return makeSimple(nodes, std::move(q), std::move(t));
}

Fbas
randomSymmetricFbas(Rng& rng, uint32_t nodes)
{
    return generateSymmetric(nodes,
                             1 + static_cast<uint32_t>(rng.nextBelow(nodes)));
}

Fbas
randomOrgTreeFbas(Rng& rng, uint32_t maxNodes)
{
    uint32_t orgs = 2 + static_cast<uint32_t>(rng.nextBelow(2));
    std::vector<uint32_t> sizes;
    std::vector<uint32_t> thresholds;
    uint32_t used = 0;
    for (uint32_t i = 0; i < orgs; ++i)
    {
        uint32_t room = maxNodes - used - (orgs - i - 1);
        uint32_t size = 1 + static_cast<uint32_t>(
                                rng.nextBelow(std::min<uint32_t>(3, room)));
        sizes.push_back(size);
        thresholds.push_back(1 + static_cast<uint32_t>(rng.nextBelow(size)));
        used += size;
    }
    uint32_t root = 1 + static_cast<uint32_t>(rng.nextBelow(orgs));
    return generateOrgFbas(sizes, thresholds, root).fbas;
}

} // namespace fbas
