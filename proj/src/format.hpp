// Copyright 2026 the fbaskit developers. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef FBASKIT_FORMAT_HPP
#define FBASKIT_FORMAT_HPP

#include "model.hpp"
#include "slice_defs.hpp"

#include <string>
#include <vector>

namespace fbas
{

// The slice form a node was authored in. Documents keep it so that emission
// reproduces the input shape instead of flattening everything to explicit
// slice lists.
struct NodeForm
{
    enum Kind
    {
        kExplicit,
        kSimple,
        kDefinition,
    };
    Kind kind = kExplicit;
    std::vector<NodeSet> slices;  // kExplicit
    NodeSet quorum;               // kSimple
    uint32_t threshold = 0;       // kSimple
    SliceDefinition definition;   // kDefinition
};

// An FBAS together with its name table, authored forms and optional
// organization blocks. This is the unit the file format and the C API
// operate on.
struct Network
{
    Fbas fbas;
    NameTable names;
    std::vector<NodeForm> forms;
    std::vector<Org> orgs;
};

// Parses the JSON document format (or the public quorum-set convention with
// threshold/validators/innerQuorumSets fields). Slice-definition nodes are
// personalized to their owner and expanded; documents consisting solely of
// simple-form nodes keep the simple representation.
Network parseFbasDocument(std::string const& text,
                          uint64_t sliceCap = kDefaultSliceCap);

// Canonical emission: nodes and organizations sorted by name, member lists
// sorted, fixed field order. parse(emit(net)) describes the same network
// and emit is a fixed point on its own output.
std::string emitFbasDocument(Network const& net);

Network networkFromOrgFbas(OrgFbas of);
Network networkFromFbas(Fbas f, NameTable names);

} // namespace fbas

#endif
