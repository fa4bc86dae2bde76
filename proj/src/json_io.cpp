#include "cxs/json_io.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <istream>
#include <sstream>

#include "cxs/bigmath.hpp"

namespace cxs {

namespace {

Json parse_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, origin + ": " + e.what());
  }
}

const Json& require_field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw Error(ErrorKind::ParseError, std::string("missing field \"") + key + "\"");
  }
  return doc.at(key);
}

int require_int(const Json& value, const char* what) {
  if (!value.is_number_integer()) {
    throw Error(ErrorKind::ParseError, std::string(what) + " must be an integer");
  }
  return value.get<int>();
}

}  // namespace

Json load_document(const std::string& arg, std::istream& in) {
  std::size_t first = 0;
  while (first < arg.size() && std::isspace(static_cast<unsigned char>(arg[first]))) ++first;
  if (first < arg.size() && (arg[first] == '{' || arg[first] == '[')) {
    return parse_text(arg, "inline document");
  }
  if (arg == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_text(buffer.str(), "standard input");
  }
  std::ifstream file(arg);
  if (!file) {
    throw Error(ErrorKind::ParseError, "cannot open file: " + arg);
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_text(buffer.str(), arg);
}

std::vector<int> parse_element_list(const Json& doc) {
  if (!doc.is_array()) {
    throw Error(ErrorKind::ParseError, "element list must be an array");
  }
  std::vector<int> elements;
  elements.reserve(doc.size());
  for (const Json& item : doc) {
    int e = require_int(item, "element");
    if (!elements.empty() && e <= elements.back()) {
      throw Error(ErrorKind::ParseError, "element list must be strictly increasing");
    }
    elements.push_back(e);
  }
  return elements;
}

namespace {

ElementSet set_from_json(const Json& doc, int ground_size) {
  return ElementSet::from_indices(ground_size, parse_element_list(doc));
}

std::vector<ElementSet> sets_from_json(const Json& doc, int ground_size, const char* what) {
  if (!doc.is_array()) {
    throw Error(ErrorKind::ParseError, std::string(what) + " must be an array");
  }
  std::vector<ElementSet> sets;
  sets.reserve(doc.size());
  for (const Json& item : doc) sets.push_back(set_from_json(item, ground_size));
  return sets;
}

ConvexitySpace space_from_builder(const Json& doc, std::size_t closure_cap, Budget* budget) {
  const Json& name_field = require_field(doc, "name");
  if (!name_field.is_string()) {
    throw Error(ErrorKind::ParseError, "builder name must be a string");
  }
  std::string name = name_field.get<std::string>();
  Json params = doc.contains("params") ? doc.at("params") : Json::object();
  if (!params.is_object()) {
    throw Error(ErrorKind::ParseError, "builder params must be an object");
  }
  if (name == "interval") {
    return make_interval_space(require_int(require_field(params, "n"), "n"), budget);
  }
  if (name == "free") {
    return make_free_space(require_int(require_field(params, "n"), "n"), budget);
  }
  if (name == "powerset") {
    return make_powerset_space(require_int(require_field(params, "n"), "n"), closure_cap, budget);
  }
  if (name == "planar_trace") {
    const Json& pts = require_field(params, "points");
    if (!pts.is_array()) {
      throw Error(ErrorKind::ParseError, "points must be an array");
    }
    std::vector<std::array<long long, 2>> points;
    points.reserve(pts.size());
    for (const Json& p : pts) {
      if (!p.is_array() || p.size() != 2) {
        throw Error(ErrorKind::UnsupportedDimension, "points must be pairs of coordinates");
      }
      if (!p[0].is_number_integer() || !p[1].is_number_integer()) {
        throw Error(ErrorKind::ParseError, "coordinates must be integers");
      }
      points.push_back({p[0].get<long long>(), p[1].get<long long>()});
    }
    return make_planar_trace_space(points, closure_cap, budget);
  }
  if (name == "grid_trace") {
    return make_grid_trace_space(require_int(require_field(params, "width"), "width"),
                                 require_int(require_field(params, "height"), "height"),
                                 closure_cap, budget);
  }
  throw Error(ErrorKind::ParseError, "unknown builder name: " + name);
}

}  // namespace

ConvexitySpace parse_space(const Json& doc, std::size_t closure_cap, Budget* budget) {
  const Json& kind_field = require_field(doc, "kind");
  if (!kind_field.is_string()) {
    throw Error(ErrorKind::ParseError, "space kind must be a string");
  }
  std::string kind = kind_field.get<std::string>();
  if (kind == "explicit") {
    int n = require_int(require_field(doc, "ground_size"), "ground_size");
    if (n < 0) throw Error(ErrorKind::ParseError, "ground_size must be nonnegative");
    std::vector<ElementSet> sets = sets_from_json(require_field(doc, "convex_sets"), n, "convex_sets");
    return validate_space(n, std::move(sets), budget);
  }
  if (kind == "generators") {
    int n = require_int(require_field(doc, "ground_size"), "ground_size");
    if (n < 0) throw Error(ErrorKind::ParseError, "ground_size must be nonnegative");
    std::vector<ElementSet> generators =
        sets_from_json(require_field(doc, "generators"), n, "generators");
    return closure_from_generators(n, generators, closure_cap, budget);
  }
  if (kind == "builder") {
    return space_from_builder(doc, closure_cap, budget);
  }
  throw Error(ErrorKind::ParseError, "unknown space kind: " + kind);
}

SetSystem parse_system(const Json& doc) {
  int n = require_int(require_field(doc, "ground_size"), "ground_size");
  if (n < 0) throw Error(ErrorKind::ParseError, "ground_size must be nonnegative");
  SetSystem system;
  system.ground_size = n;
  system.members = sets_from_json(require_field(doc, "members"), n, "members");
  return system;
}

std::vector<ElementSet> parse_family(const Json& doc, int ground_size) {
  return sets_from_json(doc, ground_size, "family");
}

std::vector<std::vector<ElementSet>> parse_families(const Json& doc, int ground_size) {
  if (!doc.is_array()) {
    throw Error(ErrorKind::ParseError, "families must be an array of families");
  }
  std::vector<std::vector<ElementSet>> families;
  families.reserve(doc.size());
  for (const Json& item : doc) families.push_back(sets_from_json(item, ground_size, "family"));
  return families;
}

Multiset parse_multiset(const Json& doc) {
  if (!doc.is_object()) {
    throw Error(ErrorKind::ParseError, "multiset must be an object of element -> multiplicity");
  }
  Multiset y;
  for (const auto& [key, value] : doc.items()) {
    std::size_t used = 0;
    int element = 0;
    try {
      element = std::stoi(key, &used);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "multiset key is not an element index: \"" + key + "\"");
    }
    if (used != key.size() || element < 0) {
      throw Error(ErrorKind::ParseError, "multiset key is not an element index: \"" + key + "\"");
    }
    int count = require_int(value, "multiplicity");
    if (count <= 0) {
      throw Error(ErrorKind::ParseError, "multiplicity must be positive");
    }
    y.add(element, count);
  }
  return y;
}

Hypergraph parse_hypergraph(const Json& doc) {
  int n = require_int(require_field(doc, "n"), "n");
  int k = require_int(require_field(doc, "k"), "k");
  const Json& edges_field = require_field(doc, "edges");
  if (!edges_field.is_array()) {
    throw Error(ErrorKind::ParseError, "edges must be an array");
  }
  std::vector<std::vector<int>> edges;
  edges.reserve(edges_field.size());
  for (const Json& item : edges_field) {
    std::vector<int> edge = parse_element_list(item);
    for (int v : edge) {
      if (v < 0 || v >= n) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "vertex " + std::to_string(v) + " outside vertex set of size " +
                        std::to_string(n));
      }
    }
    edges.push_back(std::move(edge));
  }
  return Hypergraph(n, k, std::move(edges));
}

NetRequest parse_net_request(const Json& doc) {
  NetRequest request;
  request.y = parse_multiset(require_field(doc, "Y"));
  const Json& eps = require_field(doc, "epsilon");
  if (!eps.is_string()) {
    throw Error(ErrorKind::ParseError, "epsilon must be an exact rational string");
  }
  request.epsilon = parse_rational(eps.get<std::string>());
  return request;
}

Json element_set_to_json(const ElementSet& s) {
  Json out = Json::array();
  for (int e : s.indices()) out.push_back(e);
  return out;
}

Json space_to_json(const ConvexitySpace& space) {
  Json sets = Json::array();
  for (const ElementSet& s : space.convex_sets()) sets.push_back(element_set_to_json(s));
  return Json{{"kind", "explicit"},
              {"ground_size", space.ground_size()},
              {"convex_sets", std::move(sets)}};
}

Json system_to_json(const SetSystem& system) {
  Json members = Json::array();
  for (const ElementSet& s : system.members) members.push_back(element_set_to_json(s));
  return Json{{"ground_size", system.ground_size}, {"members", std::move(members)}};
}

Json hypergraph_to_json(const Hypergraph& h) {
  Json edges = Json::array();
  for (const std::vector<int>& edge : h.edges()) {
    Json e = Json::array();
    for (int v : edge) e.push_back(v);
    edges.push_back(std::move(e));
  }
  return Json{{"n", h.vertex_count()}, {"k", h.uniformity()}, {"edges", std::move(edges)}};
}

Json multiset_to_json(const Multiset& y) {
  Json out = Json::object();
  for (const auto& [element, count] : y.counts()) {
    out[std::to_string(element)] = count;
  }
  return out;
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[hash & 0xf];
    hash >>= 4;
  }
  return out;
}

std::string digest(const Json& canonical_form) { return fnv1a_hex(canonical_form.dump()); }

}  // namespace cxs
