#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "cxs/builders.hpp"
#include "cxs/errors.hpp"
#include "cxs/hypergraph.hpp"
#include "cxs/multiset.hpp"
#include "cxs/space.hpp"
#include "cxs/transversal.hpp"

namespace cxs {

using Json = nlohmann::json;

// Document argument convention: inline JSON when the text starts with '{' or
// '[', "-" for the given input stream, otherwise a file path. Parse and file
// problems raise ParseError.
Json load_document(const std::string& arg, std::istream& in);

// Space documents: {"kind":"explicit","ground_size":N,"convex_sets":[[...],...]},
// {"kind":"generators","ground_size":N,"generators":[[...],...]}, or
// {"kind":"builder","name":...,"params":{...}} with builder names interval,
// free, powerset, planar_trace, grid_trace. Element lists must be strictly
// increasing.
ConvexitySpace parse_space(const Json& doc, std::size_t closure_cap = kDefaultClosureCap,
                           Budget* budget = nullptr);

// {"ground_size":N,"members":[[...],...]}
SetSystem parse_system(const Json& doc);

// Bare array of element lists over a known ground size.
std::vector<ElementSet> parse_family(const Json& doc, int ground_size);

// Bare array of families.
std::vector<std::vector<ElementSet>> parse_families(const Json& doc, int ground_size);

// {"0":2,"1":1} — element index (as a decimal string key) to multiplicity.
Multiset parse_multiset(const Json& doc);

// {"n":N,"k":K,"edges":[[...],...]}
Hypergraph parse_hypergraph(const Json& doc);

// {"Y":{...},"epsilon":"p/q"}
NetRequest parse_net_request(const Json& doc);

std::vector<int> parse_element_list(const Json& doc);

Json element_set_to_json(const ElementSet& s);
Json space_to_json(const ConvexitySpace& space);
Json system_to_json(const SetSystem& system);
Json hypergraph_to_json(const Hypergraph& h);
Json multiset_to_json(const Multiset& y);

// FNV-1a 64-bit digest of a canonical serialization, as 16 hex digits.
std::string fnv1a_hex(const std::string& data);
std::string digest(const Json& canonical_form);

}  // namespace cxs
