// Copyright 2026 the fbaskit developers. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "format.hpp"

#include <json.hpp>

#include <algorithm>
#include <unordered_set>

namespace fbas
{

namespace
{

using Json = nlohmann::ordered_json;

[[noreturn]] void
parseFail(std::string const& what)
{
    raise(ErrorCode::kParseError, what);
}

NodeSet
namesToSet(Json const& arr, NameTable const& names, uint32_t universe,
           std::string const& where)
{
    if (!arr.is_array())
    {
        parseFail(where + " must be an array of node names");
    }
    NodeSet s(universe);
    for (auto const& item : arr)
    {
        if (!item.is_string())
        {
            parseFail(where + " must contain node names");
        }
        NodeId v = names.indexOf(item.get<std::string>());
        if (v == NameTable::kNone)
        {
            parseFail(where + " references undeclared node \"" +
                      item.get<std::string>() + "\"");
        }
        s.insert(v);
    }
    return s;
}

uint32_t
thresholdField(Json const& obj, std::string const& where)
{
    if (!obj.contains("threshold") || !obj["threshold"].is_number_unsigned())
    {
        parseFail(where + " needs a non-negative integer threshold");
    }
    return obj["threshold"].get<uint32_t>();
}

SliceDefinition
parseDefinition(Json const& obj, NameTable const& names, uint32_t universe,
                bool publicConvention, std::string const& where)
{
    if (!obj.is_object())
    {
        parseFail(where + " must be an object");
    }
    SliceDefinition d;
    d.threshold = thresholdField(obj, where);
    d.validators = obj.contains("validators")
                       ? namesToSet(obj["validators"], names, universe,
                                    where + ".validators")
                       : NodeSet(universe);
    char const* innerKey = publicConvention ? "innerQuorumSets" : "inner";
    if (obj.contains(innerKey))
    {
        if (!obj[innerKey].is_array())
        {
            parseFail(where + " inner definitions must form an array");
        }
        uint32_t i = 0;
        for (auto const& child : obj[innerKey])
        {
            d.children.push_back(parseDefinition(
                child, names, universe, publicConvention,
                where + "." + innerKey + "[" + std::to_string(i++) + "]"));
        }
    }
    return d;
}

std::vector<std::string>
sortedNames(NodeSet const& s, NameTable const& names)
{
    std::vector<std::string> out;
    out.reserve(s.size());
    for (NodeId v : s)
    {
        out.push_back(names.name(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Json
emitDefinition(SliceDefinition const& d, NameTable const& names)
{
    Json obj;
    obj["threshold"] = d.threshold;
    obj["validators"] = sortedNames(d.validators, names);
    std::vector<Json> inner;
    for (auto const& c : d.children)
    {
        inner.push_back(emitDefinition(c, names));
    }
    std::sort(inner.begin(), inner.end(),
              [](Json const& a, Json const& b) { return a.dump() < b.dump(); });
    obj["inner"] = inner;
    return obj;
}

} // namespace

Network
parseFbasDocument(std::string const& text, uint64_t sliceCap)
{
    Json doc;
    try
    {
        doc = Json::parse(text);
    }
    catch (nlohmann::json::exception const& e)
    {
        parseFail(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("version") ||
        !doc["version"].is_number_unsigned() ||
        doc["version"].get<uint32_t>() != 1)
    {
        parseFail("document must declare version 1");
    }
    if (!doc.contains("nodes") || !doc["nodes"].is_array() ||
        doc["nodes"].empty())
    {
        parseFail("document must declare a non-empty nodes array");
    }

    std::vector<std::string> nameList;
    std::unordered_set<std::string> seen;
    for (auto const& node : doc["nodes"])
    {
        if (!node.is_object() || !node.contains("name") ||
            !node["name"].is_string())
        {
            parseFail("every node needs a string name");
        }
        std::string name = node["name"].get<std::string>();
        if (name.empty() || !seen.insert(name).second)
        {
            parseFail("node names must be unique and non-empty");
        }
        nameList.push_back(std::move(name));
    }
    NameTable names(nameList);
    uint32_t universe = names.size();

    std::vector<NodeForm> forms(universe);
    bool allSimple = true;
    uint32_t v = 0;
    for (auto const& node : doc["nodes"])
    {
        std::string where = "node \"" + nameList[v] + "\"";
        bool hasSlices = node.contains("slices");
        bool hasSimple = node.contains("quorum") || node.contains("threshold");
        bool hasDef = node.contains("slice_definition");
        bool hasPublic = node.contains("quorumSet");
        int formCount = int(hasSlices) + int(hasSimple) + int(hasDef) +
                        int(hasPublic);
        if (formCount != 1)
        {
            parseFail(where + " must use exactly one slice form");
        }
        NodeForm& form = forms[v];
        if (hasSlices)
        {
            form.kind = NodeForm::kExplicit;
            if (!node["slices"].is_array() || node["slices"].empty())
            {
                parseFail(where + " needs a non-empty slices array");
            }
            for (auto const& s : node["slices"])
            {
                form.slices.push_back(
                    namesToSet(s, names, universe, where + " slice"));
            }
            allSimple = false;
        }
        else if (hasSimple)
        {
            if (!node.contains("quorum") || !node.contains("threshold"))
            {
                parseFail(where + " needs both quorum and threshold");
            }
            form.kind = NodeForm::kSimple;
            form.quorum =
                namesToSet(node["quorum"], names, universe, where + ".quorum");
            form.threshold = thresholdField(node, where);
        }
        else
        {
            form.kind = NodeForm::kDefinition;
            form.definition = parseDefinition(
                hasDef ? node["slice_definition"] : node["quorumSet"], names,
                universe, hasPublic, where);
            validateDefinition(form.definition);
            allSimple = false;
        }
        ++v;
    }

    std::vector<Org> orgs;
    if (doc.contains("organizations"))
    {
        if (!doc["organizations"].is_array())
        {
            parseFail("organizations must form an array");
        }
        NodeSet used(universe);
        std::unordered_set<std::string> orgNames;
        for (auto const& block : doc["organizations"])
        {
            if (!block.is_object() || !block.contains("name") ||
                !block["name"].is_string() || !block.contains("members"))
            {
                parseFail("every organization needs a name and members");
            }
            Org org;
            org.name = block["name"].get<std::string>();
            if (org.name.empty() || !orgNames.insert(org.name).second)
            {
                parseFail("organization names must be unique and non-empty");
            }
            org.members = namesToSet(block["members"], names, universe,
                                     "organization \"" + org.name + "\"");
            if (org.members.empty() || org.members.intersects(used))
            {
                parseFail("organizations must be non-empty and disjoint");
            }
            used |= org.members;
            orgs.push_back(std::move(org));
        }
    }

    if (allSimple)
    {
        std::vector<NodeSet> q;
        std::vector<uint32_t> t;
        q.reserve(universe);
        t.reserve(universe);
        for (auto const& form : forms)
        {
            q.push_back(form.quorum);
            t.push_back(form.threshold);
        }
        return {makeSimple(universe, std::move(q), std::move(t)),
                std::move(names), std::move(forms), std::move(orgs)};
    }

    std::vector<std::vector<NodeSet>> slices(universe);
    for (uint32_t u = 0; u < universe; ++u)
    {
        switch (forms[u].kind)
        {
        case NodeForm::kExplicit:
            slices[u] = forms[u].slices;
            break;
        case NodeForm::kSimple:
            if (!forms[u].quorum.contains(u))
            {
                raise(ErrorCode::kMembershipViolation,
                      "node \"" + names.name(u) +
                          "\" is missing from its own quorum set");
            }
            if (forms[u].threshold < 1 ||
                forms[u].threshold > forms[u].quorum.size())
            {
                raise(ErrorCode::kThresholdOutOfRange,
                      "threshold of node \"" + names.name(u) +
                          "\" out of [1, |quorum|]");
            }
            slices[u] = simpleNodeSlices(forms[u].quorum, forms[u].threshold,
                                         u, sliceCap);
            break;
        case NodeForm::kDefinition:
            slices[u] =
                generateSlices(personalize(forms[u].definition, u), sliceCap);
            break;
        }
    }
    return {makeGeneral(universe, slices), std::move(names), std::move(forms),
            std::move(orgs)};
}

std::string
emitFbasDocument(Network const& net)
{
    uint32_t universe = net.fbas.universe();
    std::vector<NodeId> order(universe);
    for (uint32_t v = 0; v < universe; ++v)
    {
        order[v] = v;
    }
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        return net.names.name(a) < net.names.name(b);
    });

    Json doc;
    doc["version"] = 1;
    doc["nodes"] = Json::array();
    for (NodeId v : order)
    {
        Json node;
        node["name"] = net.names.name(v);
        auto const& form = net.forms[v];
        switch (form.kind)
        {
        case NodeForm::kExplicit:
        {
            std::vector<std::vector<std::string>> lists;
            for (auto const& s : form.slices)
            {
                lists.push_back(sortedNames(s, net.names));
            }
            std::sort(lists.begin(), lists.end());
            node["slices"] = lists;
            break;
        }
        case NodeForm::kSimple:
            node["quorum"] = sortedNames(form.quorum, net.names);
            node["threshold"] = form.threshold;
            break;
        case NodeForm::kDefinition:
            node["slice_definition"] = emitDefinition(form.definition,
                                                      net.names);
            break;
        }
        doc["nodes"].push_back(std::move(node));
    }
    if (!net.orgs.empty())
    {
        std::vector<size_t> orgOrder(net.orgs.size());
        for (size_t i = 0; i < net.orgs.size(); ++i)
        {
            orgOrder[i] = i;
        }
        std::sort(orgOrder.begin(), orgOrder.end(), [&](size_t a, size_t b) {
            return net.orgs[a].name < net.orgs[b].name;
        });
        doc["organizations"] = Json::array();
        for (size_t i : orgOrder)
        {
            Json block;
            block["name"] = net.orgs[i].name;
            block["members"] = sortedNames(net.orgs[i].members, net.names);
            doc["organizations"].push_back(std::move(block));
        }
    }
    return doc.dump(2) + "\n";
}

Network
networkFromOrgFbas(OrgFbas of)
{
    uint32_t universe = of.fbas.universe();
    std::vector<NodeForm> forms(universe);
    for (uint32_t v = 0; v < universe; ++v)
    {
        forms[v].kind = NodeForm::kDefinition;
        forms[v].definition = of.baseDefinition;
    }
    return {std::move(of.fbas), std::move(of.names), std::move(forms),
            std::move(of.orgs)};
}

Network
networkFromFbas(Fbas f, NameTable names)
{
    uint32_t universe = f.universe();
    std::vector<NodeForm> forms(universe);
    if (f.isSimple())
    {
        auto const& s = f.simple();
        for (uint32_t v = 0; v < universe; ++v)
        {
            forms[v].kind = NodeForm::kSimple;
            forms[v].quorum = s.quorumSet[v];
            forms[v].threshold = s.threshold[v];
        }
    }
    else
    {
        auto const& g = f.general();
        for (uint32_t v = 0; v < universe; ++v)
        {
            forms[v].kind = NodeForm::kExplicit;
            auto const& fam = g.slices[v];
            forms[v].slices.reserve(fam.count());
            for (uint32_t i = 0; i < fam.count(); ++i)
            {
                forms[v].slices.push_back(fam.slice(i));
            }
        }
    }
    return {std::move(f), std::move(names), std::move(forms), {}};
}

} // namespace fbas
