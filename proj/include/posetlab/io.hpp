#pragma once

// JSON formats for every view of a poset.
//
//   relation       {"elements": [...], "pairs": [["a","b"], ...], "reflexive": bool}
//                  With "reflexive": true the diagonal is implied and must
//                  not be listed.
//   enumeration    ["b", "a", "c"]
//   enumset        {"elements": [...], "members": [[...], ...]} or a bare
//                  non-empty array of enumerations
//   partition      [["a","b"], ["c"]]
//   interval code  {"reference": [...], "lower": [["u","v"], ...], "upper": [...]}
//   set family     [[], ["a"], ...] canonical order, or
//                  {"elements": [...], "sets": [...]}
//   vector         {"a": "1/2", "b": "-3"}
//   cone           {"elements": [...], "constraints": [["u","v"], ...]}  (x_u ≤ x_v)

#include <istream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "posetlab/convexity.hpp"
#include "posetlab/geometry.hpp"
#include "posetlab/topology.hpp"

namespace posetlab::io {

using Json = nlohmann::json;

/// Malformed or inconsistent input document.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads a JSON document from `path`, or from stdin when path is "-".
Json read_json(const std::string& path);
Json parse_json(std::istream& in);

Base base_from_json(const Json& elements);
Json to_json(const ElementSet& base);

Relation relation_from_json(const Json& doc);
/// Uses "reflexive": true whenever the relation contains the diagonal.
Json to_json(const Relation& r);
Json to_json(const Poset& p);

Enumeration enumeration_from_json(const Json& doc, const Base& base);
/// An enumeration document on its own determines the element set.
Enumeration enumeration_from_json(const Json& doc);
Json to_json(const Enumeration& pi);

EnumSet enumset_from_json(const Json& doc);
Json to_json(const EnumSet& s);

OrderedPartition partition_from_json(const Json& doc, const Base& base);
Json to_json(const OrderedPartition& p);

IntervalCode interval_code_from_json(const Json& doc);
Json to_json(const IntervalCode& code);

SetFamily family_from_json(const Json& doc);
Json to_json(const SetFamily& family);

RationalVector vector_from_json(const Json& doc, const Base& base);
Json to_json(const RationalVector& x);

BraidCone cone_from_json(const Json& doc);
Json to_json(const BraidCone& cone);

Json to_json(const std::vector<ConicTerm>& terms, const Base& base);

Json pairs_to_json(const Relation& r);

}  // namespace posetlab::io
