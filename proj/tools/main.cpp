// Copyright 2026 the fbaskit developers. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Command-line front end. Everything below talks to the library through the
// C interface in fbaskit.h only.

#include "fbaskit.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace
{

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitPropertyViolated = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct CliError
{
    int exitCode;
    std::string message;
};

[[noreturn]] void
die(int exitCode, std::string const& message)
{
    throw CliError{exitCode, message};
}

int
exitCodeFor(fbas_status status)
{
    switch (status)
    {
    case FBAS_OK:
        return kExitOk;
    case FBAS_ERR_TOO_LARGE:
    case FBAS_ERR_TOO_MANY_QUORUMS:
    case FBAS_ERR_TOO_MANY_DSETS:
    case FBAS_ERR_EXPANSION_TOO_LARGE:
        return kExitGuard;
    case FBAS_ERR_NO_INTERSECTION:
        return kExitPropertyViolated;
    default:
        return kExitUsage;
    }
}

void
check(fbas_status status)
{
    if (status != FBAS_OK)
    {
        die(exitCodeFor(status), fbas_last_error());
    }
}

struct FbasHandle
{
    fbas_t* f = nullptr;
    ~FbasHandle()
    {
        fbas_free(f);
    }
};

struct NodeBuffer
{
    uint32_t* nodes = nullptr;
    size_t count = 0;
    ~NodeBuffer()
    {
        fbas_nodes_free(nodes);
    }
};

uint64_t gExpansionCap = 0; // 0 keeps the library default

void
loadFbas(std::string const& path, FbasHandle& handle)
{
    check(fbas_load_file_capped(path.c_str(), gExpansionCap, &handle.f));
}

std::string
nameOf(fbas_t const* f, uint32_t v)
{
    char const* name = fbas_node_name(f, v);
    return name ? name : "?";
}

uint32_t
resolveName(fbas_t const* f, std::string const& name)
{
    int64_t v = fbas_node_index(f, name.c_str());
    if (v < 0)
    {
        die(kExitUsage, "unknown node name \"" + name + "\"");
    }
    return static_cast<uint32_t>(v);
}

std::vector<uint32_t>
resolveNames(fbas_t const* f, std::vector<std::string> const& names)
{
    std::vector<uint32_t> out;
    out.reserve(names.size());
    for (auto const& n : names)
    {
        out.push_back(resolveName(f, n));
    }
    return out;
}

std::string
joinNames(fbas_t const* f, uint32_t const* nodes, size_t count)
{
    std::string out;
    for (size_t i = 0; i < count; ++i)
    {
        if (i > 0)
        {
            out += ' ';
        }
        out += nameOf(f, nodes[i]);
    }
    return out;
}

Json
namesJson(fbas_t const* f, uint32_t const* nodes, size_t count)
{
    Json arr = Json::array();
    for (size_t i = 0; i < count; ++i)
    {
        arr.push_back(nameOf(f, nodes[i]));
    }
    return arr;
}

void
emitDocument(fbas_t const* f, std::string const& outPath)
{
    if (outPath.empty())
    {
        char* text = nullptr;
        check(fbas_emit_string(f, &text));
        std::cout << text;
        fbas_string_free(text);
    }
    else
    {
        check(fbas_save_file(f, outPath.c_str()));
    }
}

// name=value option items like --p a=0.2.
double
parseAssignment(std::string const& item, std::string& name)
{
    auto eq = item.find('=');
    if (eq == std::string::npos)
    {
        die(kExitUsage, "expected name=value, got \"" + item + "\"");
    }
    name = item.substr(0, eq);
    try
    {
        size_t used = 0;
        double value = std::stod(item.substr(eq + 1), &used);
        if (used != item.size() - eq - 1)
        {
            throw std::invalid_argument(item);
        }
        return value;
    }
    catch (std::exception const&)
    {
        die(kExitUsage, "bad numeric value in \"" + item + "\"");
    }
}

struct ProbabilityOptions
{
    std::string model;
    std::string node;
    bool all = false;
    std::string method = "exact";
    uint64_t mcSamples = 100000;
    uint64_t seed = 1;
    double pEmpty = -1;
    double pDefault = 0.0;
    std::vector<std::string> pItems;
    std::vector<std::string> qItems;
    std::vector<std::string> rItems;
    std::string distFile;
};

std::vector<double>
perNodeValues(fbas_t const* f, std::vector<std::string> const& items,
              double fallback)
{
    std::vector<double> values(fbas_node_count(f), fallback);
    for (auto const& item : items)
    {
        std::string name;
        double value = parseAssignment(item, name);
        values[resolveName(f, name)] = value;
    }
    return values;
}

std::vector<double>
perOrgValues(fbas_t const* f, std::vector<std::string> const& items,
             char const* what)
{
    uint32_t orgCount = fbas_org_count(f);
    if (orgCount == 0)
    {
        die(kExitUsage,
            std::string("the document declares no organizations; ") + what +
                " needs them");
    }
    std::vector<double> values(orgCount, -1.0);
    double uniform = -1.0;
    for (auto const& item : items)
    {
        if (item.find('=') == std::string::npos)
        {
            try
            {
                uniform = std::stod(item);
            }
            catch (std::exception const&)
            {
                die(kExitUsage, "bad numeric value \"" + item + "\"");
            }
            continue;
        }
        std::string name;
        double value = parseAssignment(item, name);
        bool found = false;
        for (uint32_t o = 0; o < orgCount; ++o)
        {
            if (name == fbas_org_name(f, o))
            {
                values[o] = value;
                found = true;
                break;
            }
        }
        if (!found)
        {
            die(kExitUsage, "unknown organization \"" + name + "\"");
        }
    }
    for (auto& v : values)
    {
        if (v < 0)
        {
            if (uniform < 0)
            {
                die(kExitUsage,
                    std::string(what) +
                        " needs a uniform value or one per organization");
            }
            v = uniform;
        }
    }
    return values;
}

Json
loadJsonFile(std::string const& path)
{
    std::ifstream in(path);
    if (!in)
    {
        die(kExitUsage, "cannot open " + path);
    }
    try
    {
        return Json::parse(in);
    }
    catch (std::exception const& e)
    {
        die(kExitUsage, "invalid JSON in " + path + ": " + e.what());
    }
}

struct DistHandle
{
    fbas_distribution* d = nullptr;
    ~DistHandle()
    {
        fbas_dist_free(d);
    }
};

void
buildDistribution(fbas_t const* f, ProbabilityOptions const& opt,
                  DistHandle& dist)
{
    if (opt.model == "at-most-one")
    {
        auto p = perNodeValues(f, opt.pItems, opt.pDefault);
        double mass = 0;
        for (double x : p)
        {
            mass += x;
        }
        double pEmpty = opt.pEmpty >= 0 ? opt.pEmpty : 1.0 - mass;
        check(fbas_dist_at_most_one(f, pEmpty, p.data(), &dist.d));
    }
    else if (opt.model == "independent")
    {
        auto p = perNodeValues(f, opt.pItems, opt.pDefault);
        check(fbas_dist_independent(f, p.data(), &dist.d));
    }
    else if (opt.model == "grouped-byzantine")
    {
        auto q = perOrgValues(f, opt.qItems, "--q");
        auto r = perOrgValues(f, opt.rItems, "--r");
        check(fbas_dist_grouped_byzantine(f, q.data(), r.data(), &dist.d));
    }
    else if (opt.model == "grouped")
    {
        if (opt.distFile.empty())
        {
            die(kExitUsage, "--model grouped needs --dist-file");
        }
        Json doc = loadJsonFile(opt.distFile);
        if (!doc.contains("tables") || !doc["tables"].is_array())
        {
            die(kExitUsage, "grouped tables file needs a tables array");
        }
        std::vector<uint32_t> orgOf;
        std::vector<size_t> offsets{0};
        std::vector<uint32_t> members;
        std::vector<double> probs;
        for (auto const& table : doc["tables"])
        {
            std::string orgName = table.value("org", "");
            int64_t org = -1;
            for (uint32_t o = 0; o < fbas_org_count(f); ++o)
            {
                if (orgName == fbas_org_name(f, o))
                {
                    org = o;
                    break;
                }
            }
            if (org < 0)
            {
                die(kExitUsage, "unknown organization \"" + orgName + "\"");
            }
            for (auto const& entry : table["subsets"])
            {
                orgOf.push_back(static_cast<uint32_t>(org));
                for (auto const& name : entry["nodes"])
                {
                    members.push_back(
                        resolveName(f, name.get<std::string>()));
                }
                offsets.push_back(members.size());
                probs.push_back(entry["p"].get<double>());
            }
        }
        check(fbas_dist_grouped(f, orgOf.data(), offsets.data(),
                                members.data(), probs.data(), probs.size(),
                                &dist.d));
    }
    else if (opt.model == "explicit")
    {
        if (opt.distFile.empty())
        {
            die(kExitUsage, "--model explicit needs --dist-file");
        }
        Json doc = loadJsonFile(opt.distFile);
        if (!doc.contains("sets") || !doc["sets"].is_array())
        {
            die(kExitUsage, "explicit table file needs a sets array");
        }
        std::vector<size_t> offsets{0};
        std::vector<uint32_t> members;
        std::vector<double> probs;
        for (auto const& entry : doc["sets"])
        {
            for (auto const& name : entry["nodes"])
            {
                members.push_back(resolveName(f, name.get<std::string>()));
            }
            offsets.push_back(members.size());
            probs.push_back(entry["p"].get<double>());
        }
        check(fbas_dist_explicit(f, offsets.data(), members.data(),
                                 probs.data(), probs.size(), &dist.d));
    }
    else
    {
        die(kExitUsage, "unknown model \"" + opt.model + "\"");
    }
}

int
methodCode(std::string const& method)
{
    if (method == "exact")
    {
        return FBAS_METHOD_EXACT;
    }
    if (method == "inclusion-exclusion")
    {
        return FBAS_METHOD_INCLUSION_EXCLUSION;
    }
    if (method == "monte-carlo")
    {
        return FBAS_METHOD_MONTE_CARLO;
    }
    die(kExitUsage, "unknown method \"" + method + "\"");
}

Json
probabilityJson(fbas_probability const& p)
{
    Json out;
    out["p_intact"] = p.p_intact;
    if (p.conditional_defined)
    {
        out["p_intact_given_well_behaved"] = p.p_intact_given_well_behaved;
    }
    else
    {
        out["p_intact_given_well_behaved"] = nullptr;
    }
    out["method"] = p.method == FBAS_METHOD_EXACT ? "exact"
                    : p.method == FBAS_METHOD_INCLUSION_EXCLUSION
                        ? "inclusion-exclusion"
                        : "monte-carlo";
    if (p.method == FBAS_METHOD_MONTE_CARLO)
    {
        out["samples"] = p.samples;
        out["std_error"] = p.std_error;
    }
    return out;
}

void
printProbability(fbas_t const* f, uint32_t v, fbas_probability const& p)
{
    std::printf("%s: p_intact=%.9f", nameOf(f, v).c_str(), p.p_intact);
    if (p.conditional_defined)
    {
        std::printf(" p_intact_given_well_behaved=%.9f",
                    p.p_intact_given_well_behaved);
    }
    else
    {
        std::printf(" p_intact_given_well_behaved=n/a");
    }
    if (p.method == FBAS_METHOD_MONTE_CARLO)
    {
        std::printf(" samples=%llu std_error=%.9f",
                    static_cast<unsigned long long>(p.samples), p.std_error);
    }
    std::printf("\n");
}

// ------------------------------------------------------------------
// Subcommand bodies. Each returns the process exit code.

int
cmdQuorums(std::string const& path, bool minimal, uint64_t limit,
           bool countOnly, uint64_t maxQuorums, bool json)
{
    FbasHandle h;
    loadFbas(path, h);
    if (countOnly)
    {
        uint64_t total = 0;
        check(fbas_quorum_count(h.f, minimal ? 1 : 0, maxQuorums, &total));
        if (json)
        {
            Json out;
            out["count"] = total;
            std::cout << out.dump(2) << "\n";
        }
        else
        {
            std::cout << total << "\n";
        }
        return kExitOk;
    }
    fbas_quorum_iter* it = nullptr;
    check(fbas_quorums_begin(h.f, minimal ? 1 : 0, nullptr, 0, &it));
    uint64_t produced = 0;
    Json lists = Json::array();
    uint32_t* nodes = nullptr;
    size_t count = 0;
    int step = 0;
    while ((limit == 0 || produced < limit) &&
           (step = fbas_quorums_next(it, &nodes, &count)) == 1)
    {
        ++produced;
        if (json)
        {
            lists.push_back(namesJson(h.f, nodes, count));
        }
        else
        {
            std::cout << joinNames(h.f, nodes, count) << "\n";
        }
        if (maxQuorums > 0 && produced > maxQuorums)
        {
            fbas_quorums_end(it);
            die(kExitGuard, "quorum cap exceeded");
        }
    }
    fbas_quorums_end(it);
    if (step < 0)
    {
        die(exitCodeFor(static_cast<fbas_status>(-step)), fbas_last_error());
    }
    if (json)
    {
        Json out;
        out["quorums"] = std::move(lists);
        out["count"] = produced;
        out["truncated"] = limit != 0 && produced == limit;
        std::cout << out.dump(2) << "\n";
    }
    else
    {
        std::cout << "count: " << produced << "\n";
    }
    return kExitOk;
}

int
cmdCheckIntersection(std::string const& path, bool noPreprocessing,
                     bool witness, bool expectIntersection, bool oracle,
                     bool json)
{
    FbasHandle h;
    loadFbas(path, h);
    int intersects = 0;
    NodeBuffer w1, w2;
    check(fbas_check_intersection(h.f, noPreprocessing ? 0 : 1, &intersects,
                                  &w1.nodes, &w1.count, &w2.nodes,
                                  &w2.count));
    bool oracleOk = true;
    if (oracle)
    {
        int ok = 0;
        check(fbas_oracle_check(h.f, &ok));
        oracleOk = ok == 1;
    }
    if (json)
    {
        Json out;
        out["intersects"] = intersects == 1;
        if (witness && intersects == 0)
        {
            out["witness"] = Json::array({namesJson(h.f, w1.nodes, w1.count),
                                          namesJson(h.f, w2.nodes,
                                                    w2.count)});
        }
        if (oracle)
        {
            out["oracle_agrees"] = oracleOk;
        }
        std::cout << out.dump(2) << "\n";
    }
    else
    {
        std::cout << "intersects: " << (intersects ? "true" : "false")
                  << "\n";
        if (witness && intersects == 0)
        {
            std::cout << "witness quorum 1: "
                      << joinNames(h.f, w1.nodes, w1.count) << "\n";
            std::cout << "witness quorum 2: "
                      << joinNames(h.f, w2.nodes, w2.count) << "\n";
        }
        if (oracle)
        {
            std::cout << "oracle agrees: " << (oracleOk ? "true" : "false")
                      << "\n";
        }
    }
    if (!oracleOk)
    {
        return kExitPropertyViolated;
    }
    if (expectIntersection && intersects == 0)
    {
        return kExitPropertyViolated;
    }
    return kExitOk;
}

int
cmdSccs(std::string const& path, bool json)
{
    FbasHandle h;
    loadFbas(path, h);
    fbas_setlist* comps = nullptr;
    NodeBuffer compOf, maximal;
    int64_t greatest = -1;
    check(fbas_sccs(h.f, &comps, &compOf.nodes, &greatest, &maximal.nodes,
                    &maximal.count));
    std::unique_ptr<fbas_setlist, decltype(&fbas_setlist_free)> compsGuard(
        comps, &fbas_setlist_free);
    auto isMaximal = [&](size_t c) {
        for (size_t i = 0; i < maximal.count; ++i)
        {
            if (maximal.nodes[i] == c)
            {
                return true;
            }
        }
        return false;
    };
    if (json)
    {
        Json out;
        out["components"] = Json::array();
        for (size_t c = 0; c < fbas_setlist_size(comps); ++c)
        {
            Json comp;
            comp["members"] = namesJson(h.f, fbas_setlist_get(comps, c),
                                        fbas_setlist_len(comps, c));
            comp["maximal"] = isMaximal(c);
            comp["greatest"] = greatest >= 0 && size_t(greatest) == c;
            out["components"].push_back(std::move(comp));
        }
        out["has_greatest"] = greatest >= 0;
        std::cout << out.dump(2) << "\n";
    }
    else
    {
        for (size_t c = 0; c < fbas_setlist_size(comps); ++c)
        {
            std::cout << "component " << c << ":";
            if (greatest >= 0 && size_t(greatest) == c)
            {
                std::cout << " (greatest)";
            }
            else if (isMaximal(c))
            {
                std::cout << " (maximal)";
            }
            std::cout << " "
                      << joinNames(h.f, fbas_setlist_get(comps, c),
                                   fbas_setlist_len(comps, c))
                      << "\n";
        }
        if (greatest < 0)
        {
            std::cout << "no greatest component\n";
        }
    }
    return kExitOk;
}

int
cmdIntact(std::string const& path, std::vector<std::string> const& illNames,
          bool json)
{
    FbasHandle h;
    loadFbas(path, h);
    auto ill = resolveNames(h.f, illNames);
    NodeBuffer intact;
    check(fbas_intact_nodes(h.f, ill.data(), ill.size(), &intact.nodes,
                            &intact.count));
    std::vector<uint32_t> dset;
    {
        std::vector<bool> isIntact(fbas_node_count(h.f), false);
        for (size_t i = 0; i < intact.count; ++i)
        {
            isIntact[intact.nodes[i]] = true;
        }
        for (uint32_t v = 0; v < fbas_node_count(h.f); ++v)
        {
            if (!isIntact[v])
            {
                dset.push_back(v);
            }
        }
    }
    if (json)
    {
        Json out;
        out["intact"] = namesJson(h.f, intact.nodes, intact.count);
        out["smallest_dset"] = namesJson(h.f, dset.data(), dset.size());
        std::cout << out.dump(2) << "\n";
    }
    else
    {
        std::cout << "intact: " << joinNames(h.f, intact.nodes, intact.count)
                  << "\n";
        std::cout << "smallest dset containing the ill-behaved nodes: "
                  << joinNames(h.f, dset.data(), dset.size()) << "\n";
    }
    return kExitOk;
}

int
cmdDsets(std::string const& path, uint32_t maxNodes, bool json)
{
    FbasHandle h;
    loadFbas(path, h);
    fbas_setlist* dsets = nullptr;
    check(fbas_enumerate_dsets(h.f, maxNodes, &dsets));
    std::unique_ptr<fbas_setlist, decltype(&fbas_setlist_free)> guard(
        dsets, &fbas_setlist_free);
    if (json)
    {
        Json out;
        out["dsets"] = Json::array();
        for (size_t i = 0; i < fbas_setlist_size(dsets); ++i)
        {
            out["dsets"].push_back(namesJson(h.f, fbas_setlist_get(dsets, i),
                                             fbas_setlist_len(dsets, i)));
        }
        out["count"] = fbas_setlist_size(dsets);
        std::cout << out.dump(2) << "\n";
    }
    else
    {
        for (size_t i = 0; i < fbas_setlist_size(dsets); ++i)
        {
            size_t len = fbas_setlist_len(dsets, i);
            std::cout << (len == 0 ? std::string("(empty)")
                                   : joinNames(h.f,
                                               fbas_setlist_get(dsets, i),
                                               len))
                      << "\n";
        }
        std::cout << "count: " << fbas_setlist_size(dsets) << "\n";
    }
    return kExitOk;
}

int
cmdCheckDset(std::string const& path, std::vector<std::string> const& names,
             bool json)
{
    FbasHandle h;
    loadFbas(path, h);
    auto nodes = resolveNames(h.f, names);
    int verdict = fbas_is_dset(h.f, nodes.data(), nodes.size());
    if (verdict < 0)
    {
        die(exitCodeFor(static_cast<fbas_status>(-verdict)),
            fbas_last_error());
    }
    if (json)
    {
        Json out;
        out["dset"] = verdict == 1;
        std::cout << out.dump(2) << "\n";
    }
    else
    {
        std::cout << "dset: " << (verdict ? "true" : "false") << "\n";
    }
    return kExitOk;
}

int
cmdIntactProbability(std::string const& path, ProbabilityOptions const& opt,
                     bool json)
{
    FbasHandle h;
    loadFbas(path, h);
    DistHandle dist;
    buildDistribution(h.f, opt, dist);
    int method = methodCode(opt.method);

    if (opt.all)
    {
        uint32_t n = fbas_node_count(h.f);
        std::vector<fbas_probability> all(n);
        check(fbas_intact_probability_all(h.f, dist.d, method, opt.mcSamples,
                                          opt.seed, all.data()));
        if (json)
        {
            Json out;
            out["nodes"] = Json::object();
            for (uint32_t v = 0; v < n; ++v)
            {
                out["nodes"][nameOf(h.f, v)] = probabilityJson(all[v]);
            }
            std::cout << out.dump(2) << "\n";
        }
        else
        {
            for (uint32_t v = 0; v < n; ++v)
            {
                printProbability(h.f, v, all[v]);
            }
        }
        return kExitOk;
    }
    if (opt.node.empty())
    {
        die(kExitUsage, "need --node NAME or --all");
    }
    uint32_t v = resolveName(h.f, opt.node);
    fbas_probability p;
    check(fbas_intact_probability(h.f, v, dist.d, method, opt.mcSamples,
                                  opt.seed, &p));
    if (json)
    {
        Json out;
        out["node"] = opt.node;
        out.update(probabilityJson(p));
        std::cout << out.dump(2) << "\n";
    }
    else
    {
        printProbability(h.f, v, p);
    }
    return kExitOk;
}

int
cmdGenerateSymmetric(uint32_t nodes, uint32_t threshold,
                     std::string const& outPath)
{
    FbasHandle h;
    check(fbas_generate_symmetric(nodes, threshold, &h.f));
    emitDocument(h.f, outPath);
    return kExitOk;
}

std::vector<uint32_t>
parseUintList(std::string const& text)
{
    std::vector<uint32_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        try
        {
            out.push_back(static_cast<uint32_t>(std::stoul(item)));
        }
        catch (std::exception const&)
        {
            die(kExitUsage, "bad integer list \"" + text + "\"");
        }
    }
    return out;
}

int
cmdGenerateOrgs(std::string const& sizes, std::string const& thresholds,
                uint32_t rootThreshold, std::string const& outPath)
{
    auto sizeList = parseUintList(sizes);
    auto thresholdList = parseUintList(thresholds);
    if (sizeList.size() != thresholdList.size() || sizeList.empty())
    {
        die(kExitUsage,
            "--sizes and --thresholds must match and be non-empty");
    }
    FbasHandle h;
    check(fbas_generate_orgs(static_cast<uint32_t>(sizeList.size()),
                             sizeList.data(), thresholdList.data(),
                             rootThreshold, &h.f));
    emitDocument(h.f, outPath);
    return kExitOk;
}

int
cmdReduce3Sat(std::string const& cnfPath, std::string const& outPath)
{
    std::ifstream in(cnfPath);
    if (!in)
    {
        die(kExitUsage, "cannot open " + cnfPath);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    FbasHandle h;
    check(fbas_reduce_3sat(buf.str().c_str(), &h.f));
    emitDocument(h.f, outPath);
    return kExitOk;
}

int
cmdBench(uint32_t minOrgs, uint32_t maxOrgs, uint64_t quorumCap)
{
    std::cout << "rule\torgs\tnodes\tthreshold\tquorums\tseconds\n";
    for (int rule = 0; rule < 2; ++rule)
    {
        for (uint32_t n = minOrgs; n <= maxOrgs; ++n)
        {
            uint32_t t = rule == 0 ? n - 1 : (2 * n) / 3 + 1;
            if (t < 1 || t > n)
            {
                continue;
            }
            std::vector<uint32_t> sizes(n, 3);
            std::vector<uint32_t> thresholds(n, 2);
            FbasHandle h;
            check(fbas_generate_orgs(n, sizes.data(), thresholds.data(), t,
                                     &h.f));
            auto start = std::chrono::steady_clock::now();
            uint64_t quorums = 0;
            check(fbas_quorum_count(h.f, 0, quorumCap, &quorums));
            std::chrono::duration<double> elapsed =
                std::chrono::steady_clock::now() - start;
            std::printf("%s\t%u\t%u\t%u\t%llu\t%.6f\n",
                        rule == 0 ? "n-1" : "2n/3+1", n, 3 * n, t,
                        static_cast<unsigned long long>(quorums),
                        elapsed.count());
        }
    }
    return kExitOk;
}

} // namespace

int
main(int argc, char** argv)
{
    CLI::App app{"fbaskit: federated Byzantine agreement system analyzer"};
    app.require_subcommand(1);
    app.fallthrough(true);
    bool json = false;
    app.add_flag("--json", json, "machine-readable JSON output");
    app.add_option("--expansion-cap", gExpansionCap,
                   "cap on slices expanded per node while loading "
                   "(0 = default of one million)");

    auto* quorums = app.add_subcommand("quorums", "enumerate quorums");
    std::string qPath;
    bool qMinimal = false, qCountOnly = false;
    uint64_t qLimit = 0, qCap = 1000000;
    quorums->add_option("file", qPath)->required();
    quorums->add_flag("--minimal", qMinimal,
                      "only minimal quorums within half the universe");
    quorums->add_option("--limit", qLimit, "stop after this many quorums");
    quorums->add_flag("--count-only", qCountOnly, "print only the count");
    quorums->add_option("--max-quorums", qCap,
                        "resource guard on the enumeration (0 = unlimited)");

    auto* inter = app.add_subcommand("check-intersection",
                                     "decide quorum intersection");
    std::string iPath;
    bool iNoPre = false, iWitness = false, iExpect = false, iOracle = false;
    inter->add_option("file", iPath)->required();
    inter->add_flag("--no-scc-preprocessing", iNoPre,
                    "skip the strongly-connected-component reduction");
    inter->add_flag("--witness", iWitness,
                    "print two disjoint quorums when intersection fails");
    inter->add_flag("--expect-intersection", iExpect,
                    "exit 1 when intersection does not hold");
    inter->add_flag("--oracle", iOracle,
                    "cross-check against the brute-force reference");

    auto* sccs = app.add_subcommand(
        "sccs", "strongly connected components of the trust graph");
    std::string sPath;
    sccs->add_option("file", sPath)->required();

    auto* intact =
        app.add_subcommand("intact", "intact nodes for an ill-behaved set");
    std::string tPath;
    std::vector<std::string> tIll;
    intact->add_option("file", tPath)->required();
    intact->add_option("--ill-behaved", tIll, "ill-behaved node names")
        ->delimiter(',');

    auto* dsets =
        app.add_subcommand("dsets", "enumerate all dispensable sets");
    std::string dPath;
    uint32_t dMaxNodes = 0;
    dsets->add_option("file", dPath)->required();
    dsets->add_option("--max-nodes", dMaxNodes,
                      "raise the exhaustive-search guard (default 12)");

    auto* checkDset =
        app.add_subcommand("check-dset", "test one dispensable set");
    std::string cPath;
    std::vector<std::string> cSet;
    checkDset->add_option("file", cPath)->required();
    checkDset->add_option("--set", cSet, "candidate node names")
        ->delimiter(',')
        ->required();

    auto* prob = app.add_subcommand("intact-probability",
                                    "per-node intactness probabilities");
    std::string pPath;
    ProbabilityOptions pOpt;
    prob->add_option("file", pPath)->required();
    prob->add_option("--model", pOpt.model,
                     "at-most-one | independent | grouped | "
                     "grouped-byzantine | explicit")
        ->required();
    prob->add_option("--node", pOpt.node, "node name");
    prob->add_flag("--all", pOpt.all, "report every node");
    prob->add_option("--method", pOpt.method,
                     "exact | inclusion-exclusion | monte-carlo");
    prob->add_option("--mc-samples", pOpt.mcSamples,
                     "sample count for monte-carlo");
    prob->add_option("--seed", pOpt.seed, "master seed for monte-carlo");
    prob->add_option("--p", pOpt.pItems,
                     "per-node probability, name=value (repeatable)");
    prob->add_option("--p-default", pOpt.pDefault,
                     "probability for unlisted nodes");
    prob->add_option("--p-empty", pOpt.pEmpty,
                     "at-most-one probability of no failure");
    prob->add_option("--q", pOpt.qItems,
                     "per-organization node failure probability "
                     "(value or ORG=value)");
    prob->add_option("--r", pOpt.rItems,
                     "per-organization Byzantine probability "
                     "(value or ORG=value)");
    prob->add_option("--dist-file", pOpt.distFile,
                     "JSON tables for grouped / explicit models");

    auto* generate = app.add_subcommand("generate", "produce FBAS documents");
    generate->require_subcommand(1);
    auto* genSym = generate->add_subcommand("symmetric", "symmetric FBAS");
    uint32_t gNodes = 0, gThreshold = 0;
    std::string gOut;
    genSym->add_option("--nodes", gNodes)->required();
    genSym->add_option("--threshold", gThreshold)->required();
    genSym->add_option("-o,--output", gOut, "output file (default stdout)");
    auto* genOrgs =
        generate->add_subcommand("orgs", "organization threshold family");
    std::string oSizes, oThresholds, oOut;
    uint32_t oRoot = 0;
    genOrgs
        ->add_option("--sizes", oSizes, "members per org, e.g. 3,3,3,3,3,5")
        ->required();
    genOrgs
        ->add_option("--thresholds", oThresholds,
                     "threshold per org, e.g. 2,2,2,2,2,3")
        ->required();
    genOrgs->add_option("--root-threshold", oRoot)->required();
    genOrgs->add_option("-o,--output", oOut, "output file (default stdout)");

    auto* reduce = app.add_subcommand(
        "reduce-3sat", "build the quorum-split FBAS of a 3-CNF formula");
    std::string rPath, rOut;
    reduce->add_option("cnf", rPath, "DIMACS file with 3-literal clauses")
        ->required();
    reduce->add_option("-o,--output", rOut, "output file (default stdout)");

    auto* bench = app.add_subcommand(
        "bench", "quorum growth over the organization families");
    uint32_t bMin = 2, bMax = 6;
    uint64_t bCap = 100000000;
    bench->add_option("--min-orgs", bMin);
    bench->add_option("--max-orgs", bMax);
    bench->add_option("--max-quorums", bCap, "resource guard per instance");

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::ParseError const& e)
    {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try
    {
        if (quorums->parsed())
        {
            return cmdQuorums(qPath, qMinimal, qLimit, qCountOnly, qCap,
                              json);
        }
        if (inter->parsed())
        {
            return cmdCheckIntersection(iPath, iNoPre, iWitness, iExpect,
                                        iOracle, json);
        }
        if (sccs->parsed())
        {
            return cmdSccs(sPath, json);
        }
        if (intact->parsed())
        {
            return cmdIntact(tPath, tIll, json);
        }
        if (dsets->parsed())
        {
            return cmdDsets(dPath, dMaxNodes, json);
        }
        if (checkDset->parsed())
        {
            return cmdCheckDset(cPath, cSet, json);
        }
        if (prob->parsed())
        {
            return cmdIntactProbability(pPath, pOpt, json);
        }
        if (generate->parsed())
        {
            if (genSym->parsed())
            {
                return cmdGenerateSymmetric(gNodes, gThreshold, gOut);
            }
            return cmdGenerateOrgs(oSizes, oThresholds, oRoot, oOut);
        }
        if (reduce->parsed())
        {
            return cmdReduce3Sat(rPath, rOut);
        }
        if (bench->parsed())
        {
            return cmdBench(bMin, bMax, bCap);
        }
    }
    catch (CliError const& e)
    {
        std::cerr << "error: " << e.message << "\n";
        return e.exitCode;
    }
    catch (std::exception const& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
