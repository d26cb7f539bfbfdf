#include "posetlab/io.hpp"

#include <fstream>
#include <iostream>
#include <set>

namespace posetlab::io {

namespace {

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key))
    throw FormatError(std::string("expected an object with key \"") + key + "\"");
  return doc.at(key);
}

std::string identifier(const Json& item) {
  if (!item.is_string()) throw FormatError("element identifiers must be strings, got " + item.dump());
  return item.get<std::string>();
}

Index element(const Base& base, const Json& item) {
  auto name = identifier(item);
  if (auto i = base->find(name)) return *i;
  throw FormatError("unknown element \"" + name + "\"");
}

Pair pair_from_json(const Base& base, const Json& item) {
  if (!item.is_array() || item.size() != 2) throw FormatError("pairs must be two-element arrays, got " + item.dump());
  return {element(base, item[0]), element(base, item[1])};
}

Relation strict_pairs_from_json(const Base& base, const Json& doc) {
  if (!doc.is_array()) throw FormatError("expected an array of pairs");
  Relation r(base);
  for (const auto& item : doc) {
    auto [u, v] = pair_from_json(base, item);
    r.insert(u, v);
  }
  return r;
}

Json names_of(const Base& base, Mask set) {
  Json out = Json::array();
  for_each_bit(set, [&](Index u) { out.push_back(base->name(u)); });
  return out;
}

Mask set_from_json(const Base& base, const Json& doc) {
  if (!doc.is_array()) throw FormatError("sets must be arrays of identifiers, got " + doc.dump());
  Mask m = 0;
  for (const auto& item : doc) m |= bit(element(base, item));
  return m;
}

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const PreconditionError& e) {
    throw FormatError(e.what());
  }
}

}  // namespace

Json parse_json(std::istream& in) {
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json(const std::string& path) {
  if (path == "-") return parse_json(std::cin);
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  return parse_json(in);
}

Base base_from_json(const Json& elements) {
  if (!elements.is_array()) throw FormatError("\"elements\" must be an array");
  std::vector<std::string> names;
  for (const auto& item : elements) names.push_back(identifier(item));
  return guarded([&] { return make_base(std::move(names)); });
}

Json to_json(const ElementSet& base) { return Json(base.names()); }

Json pairs_to_json(const Relation& r) {
  Json out = Json::array();
  for (auto [u, v] : r.pairs()) out.push_back({r.base()->name(u), r.base()->name(v)});
  return out;
}

Relation relation_from_json(const Json& doc) {
  Base base = base_from_json(field(doc, "elements"));
  bool reflexive = false;
  if (doc.contains("reflexive")) {
    if (!doc["reflexive"].is_boolean()) throw FormatError("\"reflexive\" must be a boolean");
    reflexive = doc["reflexive"].get<bool>();
  }
  Relation r = strict_pairs_from_json(base, field(doc, "pairs"));
  if (reflexive) {
    for (std::size_t u = 0; u < r.n(); ++u)
      if (r.contains(static_cast<Index>(u), static_cast<Index>(u)))
        throw FormatError("diagonal pair (" + base->name(static_cast<Index>(u)) +
                          ", itself) must not be listed when \"reflexive\" is true");
    r = r.with_diagonal();
  }
  return r;
}

Json to_json(const Relation& r) {
  bool reflexive = r.has_diagonal();
  return Json{{"elements", to_json(*r.base())},
              {"pairs", pairs_to_json(reflexive ? r.strict_part() : r)},
              {"reflexive", reflexive}};
}

Json to_json(const Poset& p) { return to_json(p.relation()); }

Enumeration enumeration_from_json(const Json& doc, const Base& base) {
  if (!doc.is_array()) throw FormatError("an enumeration is an array of identifiers, got " + doc.dump());
  std::vector<Index> order;
  for (const auto& item : doc) order.push_back(element(base, item));
  return guarded([&] { return Enumeration(base, std::move(order)); });
}

Enumeration enumeration_from_json(const Json& doc) {
  return enumeration_from_json(doc, base_from_json(doc));
}

Json to_json(const Enumeration& pi) {
  Json out = Json::array();
  for (Index u : pi.order()) out.push_back(pi.base()->name(u));
  return out;
}

EnumSet enumset_from_json(const Json& doc) {
  Base base;
  const Json* members = nullptr;
  if (doc.is_object()) {
    base = base_from_json(field(doc, "elements"));
    members = &field(doc, "members");
    if (!members->is_array()) throw FormatError("\"members\" must be an array");
  } else if (doc.is_array()) {
    if (doc.empty()) throw FormatError("an empty enumeration set needs the {\"elements\", \"members\"} form");
    base = base_from_json(doc[0]);
    members = &doc;
  } else {
    throw FormatError("expected an enumeration set");
  }
  std::vector<Enumeration> list;
  for (const auto& item : *members) list.push_back(enumeration_from_json(item, base));
  return EnumSet(base, std::move(list));
}

Json to_json(const EnumSet& s) {
  Json members = Json::array();
  for (const auto& pi : s) members.push_back(to_json(pi));
  return Json{{"elements", to_json(*s.base())}, {"members", std::move(members)}};
}

OrderedPartition partition_from_json(const Json& doc, const Base& base) {
  if (!doc.is_array()) throw FormatError("an ordered partition is an array of blocks");
  std::vector<Mask> blocks;
  for (const auto& block : doc) {
    Mask m = set_from_json(base, block);
    if (popcount(m) != block.size()) throw FormatError("an ordered partition block repeats an element");
    blocks.push_back(m);
  }
  return guarded([&] { return OrderedPartition(base, std::move(blocks)); });
}

Json to_json(const OrderedPartition& p) {
  Json out = Json::array();
  for (Mask block : p.blocks()) out.push_back(names_of(p.base(), block));
  return out;
}

IntervalCode interval_code_from_json(const Json& doc) {
  Enumeration reference = enumeration_from_json(field(doc, "reference"));
  Relation lower = strict_pairs_from_json(reference.base(), field(doc, "lower"));
  Relation upper = strict_pairs_from_json(reference.base(), field(doc, "upper"));
  return guarded([&] { return IntervalCode(reference, lower, upper); });
}

Json to_json(const IntervalCode& code) {
  return Json{{"reference", to_json(code.reference())},
              {"lower", pairs_to_json(code.lower())},
              {"upper", pairs_to_json(code.upper())}};
}

SetFamily family_from_json(const Json& doc) {
  Base base;
  const Json* sets = nullptr;
  if (doc.is_object()) {
    base = base_from_json(field(doc, "elements"));
    sets = &field(doc, "sets");
  } else if (doc.is_array()) {
    std::set<std::string> names;
    for (const auto& set : doc) {
      if (!set.is_array()) throw FormatError("family members must be arrays of identifiers");
      for (const auto& item : set) names.insert(identifier(item));
    }
    if (names.empty()) throw FormatError("cannot infer the element set of this family; use {\"elements\", \"sets\"}");
    base = guarded([&] { return make_base({names.begin(), names.end()}); });
    sets = &doc;
  } else {
    throw FormatError("expected a set family");
  }
  if (!sets->is_array()) throw FormatError("\"sets\" must be an array");
  std::vector<Mask> masks;
  for (const auto& set : *sets) masks.push_back(set_from_json(base, set));
  return SetFamily(base, std::move(masks));
}

Json to_json(const SetFamily& family) {
  Json out = Json::array();
  for (Mask d : family) out.push_back(names_of(family.base(), d));
  return out;
}

RationalVector vector_from_json(const Json& doc, const Base& base) {
  if (!doc.is_object()) throw FormatError("a vector is an object mapping identifiers to \"p/q\" strings");
  RationalVector x(base);
  std::size_t seen = 0;
  for (const auto& [key, value] : doc.items()) {
    Index u = element(base, Json(key));
    std::string text = value.is_string() ? value.get<std::string>() : value.dump();
    x[u] = guarded([&] { return parse_rational(text); });
    ++seen;
  }
  if (seen != base->size()) throw FormatError("a vector needs a coordinate for every element");
  return x;
}

Json to_json(const RationalVector& x) {
  Json out = Json::object();
  for (std::size_t u = 0; u < x.size(); ++u)
    out[x.base()->name(static_cast<Index>(u))] = to_string(x[static_cast<Index>(u)]);
  return out;
}

BraidCone cone_from_json(const Json& doc) {
  Base base = base_from_json(field(doc, "elements"));
  return cone_of(strict_pairs_from_json(base, field(doc, "constraints")));
}

Json to_json(const BraidCone& cone) {
  return Json{{"elements", to_json(*cone.base())},
              {"constraints", pairs_to_json(cone.constraints().relation().strict_part())}};
}

Json to_json(const std::vector<ConicTerm>& terms, const Base& base) {
  Json out = Json::array();
  for (const auto& term : terms) {
    Json generator = term.generator == ConicTerm::Generator::all_ones
                         ? Json("chi_N")
                         : Json{{"neg_chi", names_of(base, term.set)}};
    out.push_back(Json{{"generator", std::move(generator)}, {"coefficient", to_string(term.coefficient)}});
  }
  return out;
}

}  // namespace posetlab::io
