// Copyright 2026 the fbaskit developers. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "fbaskit.h"

#include "format.hpp"
#include "intactness.hpp"
#include "oracles.hpp"
#include "probability.hpp"
#include "quorums.hpp"
#include "slice_defs.hpp"
#include "trust_graph.hpp"

#include <cstring>
#include <fstream>
#include <sstream>

using namespace fbas;

struct fbas_t
{
    Network net;
};

struct fbas_quorum_iter
{
    QuorumEnumerator en;
    std::vector<uint32_t> scratch;
};

struct fbas_distribution
{
    FailureDistribution dist;
};

struct fbas_setlist
{
    std::vector<std::vector<uint32_t>> sets;
};

namespace
{

thread_local std::string gLastError;

fbas_status
statusOf(ErrorCode code)
{
    switch (code)
    {
    case ErrorCode::kInvalidArgument:
        return FBAS_ERR_ARGUMENT;
    case ErrorCode::kMembershipViolation:
        return FBAS_ERR_MEMBERSHIP;
    case ErrorCode::kEmptySliceSet:
        return FBAS_ERR_EMPTY_SLICE_SET;
    case ErrorCode::kDuplicateSlice:
        return FBAS_ERR_DUPLICATE_SLICE;
    case ErrorCode::kUnknownNode:
        return FBAS_ERR_UNKNOWN_NODE;
    case ErrorCode::kThresholdOutOfRange:
        return FBAS_ERR_THRESHOLD;
    case ErrorCode::kExpansionTooLarge:
        return FBAS_ERR_EXPANSION_TOO_LARGE;
    case ErrorCode::kKTooLarge:
        return FBAS_ERR_K_TOO_LARGE;
    case ErrorCode::kNotATrustCluster:
        return FBAS_ERR_NOT_TRUST_CLUSTER;
    case ErrorCode::kEmptySet:
        return FBAS_ERR_EMPTY_SET;
    case ErrorCode::kPreconditionViolation:
        return FBAS_ERR_PRECONDITION;
    case ErrorCode::kNoQuorumIntersection:
        return FBAS_ERR_NO_INTERSECTION;
    case ErrorCode::kInstanceTooLarge:
        return FBAS_ERR_TOO_LARGE;
    case ErrorCode::kTooManyQuorums:
        return FBAS_ERR_TOO_MANY_QUORUMS;
    case ErrorCode::kTooManyMaximalDsets:
        return FBAS_ERR_TOO_MANY_DSETS;
    case ErrorCode::kMalformedFormula:
        return FBAS_ERR_MALFORMED_FORMULA;
    case ErrorCode::kPartitionInvalid:
        return FBAS_ERR_PARTITION;
    case ErrorCode::kParseError:
        return FBAS_ERR_PARSE;
    case ErrorCode::kIoError:
        return FBAS_ERR_IO;
    }
    return FBAS_ERR_INTERNAL;
}

fbas_status
fail(fbas_status status, std::string message)
{
    gLastError = std::move(message);
    return status;
}

// Runs a callable, translating exceptions into status codes.
template <typename Fn>
fbas_status
guarded(Fn&& fn)
{
    try
    {
        fn();
        return FBAS_OK;
    }
    catch (Error const& e)
    {
        return fail(statusOf(e.code()), e.what());
    }
    catch (std::exception const& e)
    {
        return fail(FBAS_ERR_INTERNAL, e.what());
    }
}

NodeSet
setFromArray(fbas_t const* f, uint32_t const* nodes, size_t count,
             char const* what)
{
    uint32_t universe = f->net.fbas.universe();
    NodeSet s(universe);
    for (size_t i = 0; i < count; ++i)
    {
        if (nodes == nullptr || nodes[i] >= universe)
        {
            raise(ErrorCode::kUnknownNode,
                  std::string(what) + " contains an index outside the "
                                      "universe");
        }
        s.insert(nodes[i]);
    }
    return s;
}

uint32_t*
arrayFromSet(NodeSet const& s, size_t* count)
{
    auto vec = s.toVector();
    *count = vec.size();
    auto* out = new uint32_t[vec.size()];
    std::copy(vec.begin(), vec.end(), out);
    return out;
}

fbas_t*
wrap(Network net)
{
    return new fbas_t{std::move(net)};
}

} // namespace

extern "C" {

const char*
fbas_version(void)
{
    return "1.0.0";
}

const char*
fbas_last_error(void)
{
    return gLastError.c_str();
}

fbas_status
fbas_load_file_capped(const char* path, uint64_t expansion_cap, fbas_t** out)
{
    if (path == nullptr || out == nullptr)
    {
        return fail(FBAS_ERR_ARGUMENT, "null argument");
    }
    return guarded([&] {
        std::ifstream in(path);
        if (!in)
        {
            raise(ErrorCode::kIoError,
                  std::string("cannot open ") + path + " for reading");
        }
        std::stringstream buf;
        buf << in.rdbuf();
        *out = wrap(parseFbasDocument(
            buf.str(), expansion_cap ? expansion_cap : kDefaultSliceCap));
    });
}

fbas_status
fbas_load_file(const char* path, fbas_t** out)
{
    return fbas_load_file_capped(path, 0, out);
}

fbas_status
fbas_load_string_capped(const char* text, uint64_t expansion_cap,
                        fbas_t** out)
{
    if (text == nullptr || out == nullptr)
    {
        return fail(FBAS_ERR_ARGUMENT, "null argument");
    }
    return guarded([&] {
        *out = wrap(parseFbasDocument(
            text, expansion_cap ? expansion_cap : kDefaultSliceCap));
    });
}

fbas_status
fbas_load_string(const char* text, fbas_t** out)
{
    return fbas_load_string_capped(text, 0, out);
}

fbas_status
fbas_generate_symmetric(uint32_t nodes, uint32_t threshold, fbas_t** out)
{
    if (out == nullptr)
    {
        return fail(FBAS_ERR_ARGUMENT, "null argument");
    }
    return guarded([&] {
        Fbas f = generateSymmetric(nodes, threshold);
        *out = wrap(networkFromFbas(std::move(f),
                                    NameTable::numbered(nodes, "v")));
    });
}

fbas_status
fbas_generate_orgs(uint32_t org_count, const uint32_t* org_sizes,
                   const uint32_t* org_thresholds, uint32_t root_threshold,
                   fbas_t** out)
{
    if (out == nullptr || org_sizes == nullptr || org_thresholds == nullptr)
    {
        return fail(FBAS_ERR_ARGUMENT, "null argument");
    }
    return guarded([&] {
        std::vector<uint32_t> sizes(org_sizes, org_sizes + org_count);
        std::vector<uint32_t> thresholds(org_thresholds,
                                         org_thresholds + org_count);
        *out = wrap(networkFromOrgFbas(
            generateOrgFbas(sizes, thresholds, root_threshold)));
    });
}

fbas_status
fbas_reduce_3sat(const char* dimacs_text, fbas_t** out)
{
    if (dimacs_text == nullptr || out == nullptr)
    {
        return fail(FBAS_ERR_ARGUMENT, "null argument");
    }
    return guarded([&] {
        auto phi = parseDimacs(dimacs_text);
        auto reduced = reduce3Sat(phi);
        *out = wrap(networkFromFbas(std::move(reduced.fbas),
                                    std::move(reduced.names)));
    });
}

void
fbas_free(fbas_t* f)
{
    delete f;
}

fbas_status
fbas_emit_string(const fbas_t* f, char** out)
{
    if (f == nullptr || out == nullptr)
    {
        return fail(FBAS_ERR_ARGUMENT, "null argument");
    }
    return guarded([&] {
        std::string doc = emitFbasDocument(f->net);
        *out = new char[doc.size() + 1];
        std::memcpy(*out, doc.c_str(), doc.size() + 1);
    });
}

fbas_status
fbas_save_file(const fbas_t* f, const char* path)
{
    if (f == nullptr || path == nullptr)
    {
        return fail(FBAS_ERR_ARGUMENT, "null argument");
    }
    return guarded([&] {
        std::ofstream outFile(path);
        if (!outFile)
        {
            raise(ErrorCode::kIoError,
                  std::string("cannot open ") + path + " for writing");
        }
        outFile << emitFbasDocument(f->net);
        if (!outFile)
        {
            raise(ErrorCode::kIoError, std::string("write to ") + path +
                                           " failed");
        }
    });
}

void
fbas_string_free(char* s)
{
    delete[] s;
}

uint32_t
fbas_node_count(const fbas_t* f)
{
    return f == nullptr ? 0 : f->net.fbas.universe();
}

const char*
fbas_node_name(const fbas_t* f, uint32_t node)
{
    if (f == nullptr || node >= f->net.fbas.universe())
    {
        return nullptr;
    }
    return f->net.names.name(node).c_str();
}

int64_t
fbas_node_index(const fbas_t* f, const char* name)
{
    if (f == nullptr || name == nullptr)
    {
        return -1;
    }
    NodeId v = f->net.names.indexOf(name);
    return v == NameTable::kNone ? -1 : static_cast<int64_t>(v);
}

int
fbas_is_simple(const fbas_t* f)
{
    return f != nullptr && f->net.fbas.isSimple() ? 1 : 0;
}

uint64_t
fbas_size_measure(const fbas_t* f)
{
    return f == nullptr ? 0 : fbasSize(f->net.fbas);
}

uint32_t
fbas_org_count(const fbas_t* f)
{
    return f == nullptr ? 0 : static_cast<uint32_t>(f->net.orgs.size());
}

const char*
fbas_org_name(const fbas_t* f, uint32_t org)
{
    if (f == nullptr || org >= f->net.orgs.size())
    {
        return nullptr;
    }
    return f->net.orgs[org].name.c_str();
}

fbas_status
fbas_org_members(const fbas_t* f, uint32_t org, uint32_t** members,
                 size_t* count)
{
    if (f == nullptr || members == nullptr || count == nullptr ||
        org >= f->net.orgs.size())
    {
        return fail(FBAS_ERR_ARGUMENT, "bad organization query");
    }
    *members = arrayFromSet(f->net.orgs[org].members, count);
    return FBAS_OK;
}

void
fbas_nodes_free(uint32_t* nodes)
{
    delete[] nodes;
}

size_t
fbas_setlist_size(const fbas_setlist* l)
{
    return l == nullptr ? 0 : l->sets.size();
}

size_t
fbas_setlist_len(const fbas_setlist* l, size_t i)
{
    return l == nullptr || i >= l->sets.size() ? 0 : l->sets[i].size();
}

const uint32_t*
fbas_setlist_get(const fbas_setlist* l, size_t i)
{
    return l == nullptr || i >= l->sets.size() ? nullptr : l->sets[i].data();
}

void
fbas_setlist_free(fbas_setlist* l)
{
    delete l;
}

int
fbas_is_quorum(const fbas_t* f, const uint32_t* nodes, size_t count,
               const uint32_t* del, size_t del_count)
{
    if (f == nullptr)
    {
        return -FBAS_ERR_ARGUMENT;
    }
    bool result = false;
    fbas_status st = guarded([&] {
        NodeSet u = setFromArray(f, nodes, count, "quorum candidate");
        NodeSet d = setFromArray(f, del, del_count, "deletion set");
        result = isQuorum(f->net.fbas, u, d);
    });
    return st == FBAS_OK ? (result ? 1 : 0) : -int(st);
}

fbas_status
fbas_quorums_begin(const fbas_t* f, int minimal, const uint32_t* del,
                   size_t del_count, fbas_quorum_iter** out)
{
    if (f == nullptr || out == nullptr)
    {
        return fail(FBAS_ERR_ARGUMENT, "null argument");
    }
    return guarded([&] {
        NodeSet d = setFromArray(f, del, del_count, "deletion set");
        *out = new fbas_quorum_iter{
            QuorumEnumerator(f->net.fbas,
                             minimal ? EnumMode::kMinimalBounded
                                     : EnumMode::kAll,
                             std::move(d)),
            {}};
    });
}

int
fbas_quorums_next(fbas_quorum_iter* it, uint32_t** nodes, size_t* count)
{
    if (it == nullptr || nodes == nullptr || count == nullptr)
    {
        return -FBAS_ERR_ARGUMENT;
    }
    bool produced = false;
    fbas_status st = guarded([&] {
        auto q = it->en.next();
        if (q.has_value())
        {
            it->scratch = q->toVector();
            *nodes = it->scratch.data();
            *count = it->scratch.size();
            produced = true;
        }
    });
    if (st != FBAS_OK)
    {
        return -int(st);
    }
    return produced ? 1 : 0;
}

void
fbas_quorums_end(fbas_quorum_iter* it)
{
    delete it;
}

fbas_status
fbas_quorum_count(const fbas_t* f, int minimal, uint64_t limit, uint64_t* out)
{
    if (f == nullptr || out == nullptr)
    {
        return fail(FBAS_ERR_ARGUMENT, "null argument");
    }
    return guarded([&] {
        QuorumEnumerator en(f->net.fbas, minimal ? EnumMode::kMinimalBounded
                                                 : EnumMode::kAll);
        uint64_t n = 0;
        while (en.next().has_value())
        {
            ++n;
            if (limit > 0 && n > limit)
            {
                raise(ErrorCode::kTooManyQuorums,
                      "quorum count exceeds the requested limit");
            }
        }
        *out = n;
    });
}

fbas_status
fbas_check_intersection(const fbas_t* f, int scc_preprocessing,
                        int* intersects, uint32_t** witness1,
                        size_t* witness1_count, uint32_t** witness2,
                        size_t* witness2_count)
{
    if (f == nullptr || intersects == nullptr)
    {
        return fail(FBAS_ERR_ARGUMENT, "null argument");
    }
    return guarded([&] {
        auto res = scc_preprocessing
                       ? quorumIntersectionWithSccPreprocessing(f->net.fbas)
                       : quorumIntersection(f->net.fbas);
        *intersects = res.intersects ? 1 : 0;
        if (witness1 != nullptr && witness1_count != nullptr &&
            witness2 != nullptr && witness2_count != nullptr)
        {
            if (res.witness.has_value())
            {
                *witness1 = arrayFromSet(res.witness->first, witness1_count);
                *witness2 = arrayFromSet(res.witness->second, witness2_count);
            }
            else
            {
                *witness1 = nullptr;
                *witness2 = nullptr;
                *witness1_count = 0;
                *witness2_count = 0;
            }
        }
    });
}

fbas_status
fbas_min_intersection_size(const fbas_t* f, uint64_t quorum_cap,
                           int* has_value, uint32_t* out)
{
    if (f == nullptr || has_value == nullptr || out == nullptr)
    {
        return fail(FBAS_ERR_ARGUMENT, "null argument");
    }
    return guarded([&] {
        auto res = minIntersectionSize(f->net.fbas,
                                       quorum_cap ? quorum_cap : 1000000);
        *has_value = res.has_value() ? 1 : 0;
        *out = res.value_or(0);
    });
}

fbas_status
fbas_sccs(const fbas_t* f, fbas_setlist** components, uint32_t** component_of,
          int64_t* greatest_index, uint32_t** maximal, size_t* maximal_count)
{
    if (f == nullptr || components == nullptr)
    {
        return fail(FBAS_ERR_ARGUMENT, "null argument");
    }
    return guarded([&] {
        auto part = sccPartition(buildTrustGraph(f->net.fbas));
        auto* list = new fbas_setlist;
        for (auto const& comp : part.components)
        {
            list->sets.push_back(comp.toVector());
        }
        *components = list;
        if (component_of != nullptr)
        {
            auto* ids = new uint32_t[part.componentOf.size()];
            std::copy(part.componentOf.begin(), part.componentOf.end(), ids);
            *component_of = ids;
        }
        if (greatest_index != nullptr)
        {
            *greatest_index = part.greatest.has_value()
                                  ? static_cast<int64_t>(*part.greatest)
                                  : -1;
        }
        if (maximal != nullptr && maximal_count != nullptr)
        {
            auto* m = new uint32_t[part.maximal.size()];
            std::copy(part.maximal.begin(), part.maximal.end(), m);
            *maximal = m;
            *maximal_count = part.maximal.size();
        }
    });
}

int
fbas_is_trust_cluster(const fbas_t* f, const uint32_t* nodes, size_t count)
{
    if (f == nullptr)
    {
        return -FBAS_ERR_ARGUMENT;
    }
    bool result = false;
    fbas_status st = guarded([&] {
        NodeSet z = setFromArray(f, nodes, count, "cluster candidate");
        result = isTrustCluster(buildTrustGraph(f->net.fbas), z);
    });
    return st == FBAS_OK ? (result ? 1 : 0) : -int(st);
}

fbas_status
fbas_restrict(const fbas_t* f, const uint32_t* nodes, size_t count,
              fbas_t** out)
{
    if (f == nullptr || out == nullptr)
    {
        return fail(FBAS_ERR_ARGUMENT, "null argument");
    }
    return guarded([&] {
        NodeSet z = setFromArray(f, nodes, count, "cluster");
        auto restricted = restrictToCluster(f->net.fbas, z);
        std::vector<std::string> names;
        names.reserve(restricted.toParent.size());
        for (NodeId v : restricted.toParent)
        {
            names.push_back(f->net.names.name(v));
        }
        *out = wrap(networkFromFbas(std::move(restricted.fbas),
                                    NameTable(std::move(names))));
    });
}

fbas_status
fbas_delete_nodes(const fbas_t* f, const uint32_t* nodes, size_t count,
                  fbas_t** out)
{
    if (f == nullptr || out == nullptr)
    {
        return fail(FBAS_ERR_ARGUMENT, "null argument");
    }
    return guarded([&] {
        NodeSet d = setFromArray(f, nodes, count, "deletion set");
        auto without = deleteNodes(f->net.fbas, d);
        if (without.fbas.isEmpty())
        {
            raise(ErrorCode::kEmptySet,
                  "deleting every node leaves nothing to export");
        }
        std::vector<std::string> names;
        names.reserve(without.toParent.size());
        for (NodeId v : without.toParent)
        {
            names.push_back(f->net.names.name(v));
        }
        *out = wrap(networkFromFbas(std::move(without.fbas),
                                    NameTable(std::move(names))));
    });
}

fbas_status
fbas_intact_nodes(const fbas_t* f, const uint32_t* b, size_t b_count,
                  uint32_t** intact, size_t* intact_count)
{
    if (f == nullptr || intact == nullptr || intact_count == nullptr)
    {
        return fail(FBAS_ERR_ARGUMENT, "null argument");
    }
    return guarded([&] {
        NodeSet bad = setFromArray(f, b, b_count, "ill-behaved set");
        auto rep = intactNodes(f->net.fbas, bad);
        *intact = arrayFromSet(rep.intact, intact_count);
    });
}

int
fbas_is_dset(const fbas_t* f, const uint32_t* nodes, size_t count)
{
    if (f == nullptr)
    {
        return -FBAS_ERR_ARGUMENT;
    }
    bool result = false;
    fbas_status st = guarded([&] {
        NodeSet d = setFromArray(f, nodes, count, "candidate DSet");
        result = isDset(f->net.fbas, d);
    });
    return st == FBAS_OK ? (result ? 1 : 0) : -int(st);
}

fbas_status
fbas_enumerate_dsets(const fbas_t* f, uint32_t max_nodes, fbas_setlist** out)
{
    if (f == nullptr || out == nullptr)
    {
        return fail(FBAS_ERR_ARGUMENT, "null argument");
    }
    return guarded([&] {
        auto dsets = bruteDsets(f->net.fbas,
                                max_nodes ? max_nodes : kBruteDsetGuard);
        auto* list = new fbas_setlist;
        for (auto const& d : dsets)
        {
            list->sets.push_back(d.toVector());
        }
        *out = list;
    });
}

int
fbas_is_b_quorum(const fbas_t* f, const uint32_t* b, size_t b_count,
                 const uint32_t* q, size_t q_count)
{
    if (f == nullptr)
    {
        return -FBAS_ERR_ARGUMENT;
    }
    bool result = false;
    fbas_status st = guarded([&] {
        NodeSet bad = setFromArray(f, b, b_count, "ill-behaved set");
        NodeSet quorum = setFromArray(f, q, q_count, "candidate");
        result = isBQuorum(f->net.fbas, bad, quorum);
    });
    return st == FBAS_OK ? (result ? 1 : 0) : -int(st);
}

int
fbas_is_b_intact_set(const fbas_t* f, const uint32_t* b, size_t b_count,
                     const uint32_t* u, size_t u_count)
{
    if (f == nullptr)
    {
        return -FBAS_ERR_ARGUMENT;
    }
    bool result = false;
    fbas_status st = guarded([&] {
        NodeSet bad = setFromArray(f, b, b_count, "ill-behaved set");
        NodeSet candidate = setFromArray(f, u, u_count, "candidate");
        result = isBIntactSet(f->net.fbas, bad, candidate);
    });
    return st == FBAS_OK ? (result ? 1 : 0) : -int(st);
}

int
fbas_has_subslice_property(const fbas_t* f, const uint32_t* b, size_t b_count)
{
    if (f == nullptr)
    {
        return -FBAS_ERR_ARGUMENT;
    }
    bool result = false;
    fbas_status st = guarded([&] {
        NodeSet bad = setFromArray(f, b, b_count, "ill-behaved set");
        result = hasSubsliceProperty(f->net.fbas, bad);
    });
    return st == FBAS_OK ? (result ? 1 : 0) : -int(st);
}

fbas_status
fbas_dist_at_most_one(const fbas_t* f, double p_empty, const double* p_single,
                      fbas_distribution** out)
{
    if (f == nullptr || p_single == nullptr || out == nullptr)
    {
        return fail(FBAS_ERR_ARGUMENT, "null argument");
    }
    return guarded([&] {
        uint32_t n = f->net.fbas.universe();
        *out = new fbas_distribution{FailureDistribution::atMostOne(
            n, p_empty, std::vector<double>(p_single, p_single + n))};
    });
}

fbas_status
fbas_dist_independent(const fbas_t* f, const double* p,
                      fbas_distribution** out)
{
    if (f == nullptr || p == nullptr || out == nullptr)
    {
        return fail(FBAS_ERR_ARGUMENT, "null argument");
    }
    return guarded([&] {
        uint32_t n = f->net.fbas.universe();
        *out = new fbas_distribution{FailureDistribution::independent(
            n, std::vector<double>(p, p + n))};
    });
}

namespace
{

std::vector<NodeSet>
orgSets(fbas_t const* f)
{
    std::vector<NodeSet> orgs;
    orgs.reserve(f->net.orgs.size());
    for (auto const& o : f->net.orgs)
    {
        orgs.push_back(o.members);
    }
    if (orgs.empty())
    {
        raise(ErrorCode::kPartitionInvalid,
              "the document declares no organizations");
    }
    return orgs;
}

} // namespace

fbas_status
fbas_dist_grouped_byzantine(const fbas_t* f, const double* q, const double* r,
                            fbas_distribution** out)
{
    if (f == nullptr || q == nullptr || r == nullptr || out == nullptr)
    {
        return fail(FBAS_ERR_ARGUMENT, "null argument");
    }
    return guarded([&] {
        auto orgs = orgSets(f);
        size_t k = orgs.size();
        *out = new fbas_distribution{FailureDistribution::groupedByzantine(
            f->net.fbas.universe(), std::move(orgs),
            std::vector<double>(q, q + k), std::vector<double>(r, r + k))};
    });
}

fbas_status
fbas_dist_grouped(const fbas_t* f, const uint32_t* org, const size_t* offset,
                  const uint32_t* members, const double* prob, size_t entries,
                  fbas_distribution** out)
{
    if (f == nullptr || org == nullptr || offset == nullptr ||
        prob == nullptr || out == nullptr)
    {
        return fail(FBAS_ERR_ARGUMENT, "null argument");
    }
    return guarded([&] {
        auto orgs = orgSets(f);
        std::vector<std::vector<std::pair<NodeSet, double>>> tables(
            orgs.size());
        for (size_t e = 0; e < entries; ++e)
        {
            if (org[e] >= orgs.size())
            {
                raise(ErrorCode::kInvalidArgument,
                      "table entry names an unknown organization");
            }
            NodeSet subset = setFromArray(f, members + offset[e],
                                          offset[e + 1] - offset[e],
                                          "table entry");
            tables[org[e]].emplace_back(std::move(subset), prob[e]);
        }
        *out = new fbas_distribution{FailureDistribution::grouped(
            f->net.fbas.universe(), std::move(orgs), std::move(tables))};
    });
}

fbas_status
fbas_dist_explicit(const fbas_t* f, const size_t* offset,
                   const uint32_t* members, const double* prob, size_t entries,
                   fbas_distribution** out)
{
    if (f == nullptr || offset == nullptr || prob == nullptr ||
        out == nullptr)
    {
        return fail(FBAS_ERR_ARGUMENT, "null argument");
    }
    return guarded([&] {
        std::vector<std::pair<NodeSet, double>> table;
        table.reserve(entries);
        for (size_t e = 0; e < entries; ++e)
        {
            table.emplace_back(setFromArray(f, members + offset[e],
                                            offset[e + 1] - offset[e],
                                            "table entry"),
                               prob[e]);
        }
        *out = new fbas_distribution{FailureDistribution::explicitTable(
            f->net.fbas.universe(), std::move(table))};
    });
}

void
fbas_dist_free(fbas_distribution* d)
{
    delete d;
}

namespace
{

fbas_probability
toC(IntactProbability const& p)
{
    fbas_probability out;
    out.p_intact = p.pIntact;
    out.p_intact_given_well_behaved = p.pIntactGivenWellBehaved;
    out.conditional_defined = p.conditionalDefined ? 1 : 0;
    out.method = static_cast<int>(p.method);
    out.samples = p.samples;
    out.std_error = p.stdError;
    return out;
}

IntactProbability
dispatchProbability(Fbas const& f, NodeId v, FailureDistribution const& d,
                    int method, uint64_t samples, uint64_t seed)
{
    switch (method)
    {
    case FBAS_METHOD_EXACT:
        return intactProbabilityExact(f, v, d);
    case FBAS_METHOD_INCLUSION_EXCLUSION:
        return intactProbabilityInclExcl(f, v, d);
    case FBAS_METHOD_MONTE_CARLO:
        return intactProbabilityMc(f, v, d, samples, seed);
    default:
        raise(ErrorCode::kInvalidArgument, "unknown probability method");
    }
}

} // namespace

fbas_status
fbas_intact_probability(const fbas_t* f, uint32_t node,
                        const fbas_distribution* d, int method,
                        uint64_t mc_samples, uint64_t seed,
                        fbas_probability* out)
{
    if (f == nullptr || d == nullptr || out == nullptr)
    {
        return fail(FBAS_ERR_ARGUMENT, "null argument");
    }
    return guarded([&] {
        *out = toC(dispatchProbability(f->net.fbas, node, d->dist, method,
                                       mc_samples, seed));
    });
}

fbas_status
fbas_intact_probability_all(const fbas_t* f, const fbas_distribution* d,
                            int method, uint64_t mc_samples, uint64_t seed,
                            fbas_probability* out)
{
    if (f == nullptr || d == nullptr || out == nullptr)
    {
        return fail(FBAS_ERR_ARGUMENT, "null argument");
    }
    return guarded([&] {
        std::vector<IntactProbability> all;
        switch (method)
        {
        case FBAS_METHOD_EXACT:
            all = intactProbabilityExactAll(f->net.fbas, d->dist);
            break;
        case FBAS_METHOD_MONTE_CARLO:
            all = intactProbabilityMcAll(f->net.fbas, d->dist, mc_samples,
                                         seed);
            break;
        case FBAS_METHOD_INCLUSION_EXCLUSION:
            for (uint32_t v = 0; v < f->net.fbas.universe(); ++v)
            {
                all.push_back(
                    intactProbabilityInclExcl(f->net.fbas, v, d->dist));
            }
            break;
        default:
            raise(ErrorCode::kInvalidArgument, "unknown probability method");
        }
        for (size_t v = 0; v < all.size(); ++v)
        {
            out[v] = toC(all[v]);
        }
    });
}

fbas_status
fbas_oracle_check(const fbas_t* f, int* ok)
{
    if (f == nullptr || ok == nullptr)
    {
        return fail(FBAS_ERR_ARGUMENT, "null argument");
    }
    return guarded([&] {
        auto reference = bruteQuorums(f->net.fbas);
        auto enumerated =
            collectQuorums(f->net.fbas, EnumMode::kAll,
                           NodeSet(f->net.fbas.universe()), 1u << 20);
        std::sort(reference.begin(), reference.end(),
                  [](NodeSet const& a, NodeSet const& b) {
                      return a.toVector() < b.toVector();
                  });
        std::sort(enumerated.begin(), enumerated.end(),
                  [](NodeSet const& a, NodeSet const& b) {
                      return a.toVector() < b.toVector();
                  });
        bool same = reference == enumerated;
        bool splitBrute = bruteDisjointQuorums(f->net.fbas).has_value();
        bool splitFast = !quorumIntersection(f->net.fbas).intersects;
        *ok = same && splitBrute == splitFast ? 1 : 0;
    });
}

} // extern "C"
