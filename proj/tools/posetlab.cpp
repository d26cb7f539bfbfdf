// posetlab: command-line access to posets and their linear extensions.
//
// Exit codes: 0 success or affirmative verdict, 1 negative verdict,
// 2 input error.

#include <cstdlib>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "posetlab/convexity.hpp"
#include "posetlab/dot.hpp"
#include "posetlab/geometry.hpp"
#include "posetlab/io.hpp"
#include "posetlab/topology.hpp"

using namespace posetlab;
using io::FormatError;
using io::Json;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

constexpr std::size_t kListLimit = 8;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Poset require_poset(const Relation& r) {
  auto checked = validate_poset(r);
  if (auto* v = std::get_if<AxiomViolation>(&checked))
    throw InputError("input is not a poset (" + v->message() + ")");
  return std::get<Poset>(checked);
}

/// tr(R ∪ Δ) as a poset, or an input error when R∖Δ is cyclic.
Poset poset_from_generators(const Relation& r) {
  if (!is_acyclic(r.strict_part())) throw InputError("relation is cyclic and generates no poset");
  return Poset::from_strict_generators(r.strict_part());
}

void guard_size(std::size_t n, bool force, const std::string& what) {
  if (n > kListLimit && !force)
    throw InputError(what + " on " + std::to_string(n) + " elements may list up to n! items; pass --force");
}

/// Accepts a JSON array (["b","a","c"]) or a comma-separated list (b,a,c).
Enumeration parse_reference(const std::string& text, const Base& base) {
  Json doc;
  if (!text.empty() && text.front() == '[') {
    std::istringstream in(text);
    doc = io::parse_json(in);
  } else {
    doc = Json::array();
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) doc.push_back(item);
  }
  return io::enumeration_from_json(doc, base);
}

Enumeration reference_or_identity(const std::string& text, const Base& base) {
  return text.empty() ? Enumeration::identity(base) : parse_reference(text, base);
}

void print(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

// ---------------------------------------------------------------------------

int cmd_check(const std::string& path) {
  Relation r = io::relation_from_json(io::read_json(path));
  auto as_poset = validate_poset(r);
  if (auto* p = std::get_if<Poset>(&as_poset)) {
    std::cout << "poset, strict=" << p->strict().size() << ", width=" << width(*p)
              << ", extensions=" << count_extensions(*p).get_str() << '\n';
    return kOk;
  }
  auto as_preposet = validate_preposet(r);
  if (auto* q = std::get_if<Preposet>(&as_preposet)) {
    std::cout << "preposet, classes=" << preposet_quotient(*q).classes.size() << '\n';
    return kOk;
  }
  if (is_acyclic(r.strict_part())) {
    std::cout << "acyclic-only (" << std::get<AxiomViolation>(as_poset).message() << ")\n";
    return kOk;
  }
  std::cout << "general (cyclic)\n";
  return kOk;
}

int cmd_hasse(const std::string& path, bool dot) {
  Poset p = require_poset(io::relation_from_json(io::read_json(path)));
  if (dot) {
    std::cout << hasse_dot(p);
    return kOk;
  }
  for (auto [u, v] : cover_relation(p).pairs())
    std::cout << p.base()->name(u) << " -> " << p.base()->name(v) << '\n';
  return kOk;
}

int cmd_extensions(const std::string& path, bool list, bool force) {
  Relation r = io::relation_from_json(io::read_json(path));
  if (!list) {
    if (!is_acyclic(r.strict_part())) {
      std::cout << "0\n";
      return kOk;
    }
    std::cout << count_extensions(poset_from_generators(r)).get_str() << '\n';
    return kOk;
  }
  guard_size(r.n(), force, "listing extensions");
  if (!is_acyclic(r.strict_part())) return kOk;
  for_each_linear_extension(poset_from_generators(r), [&](const std::vector<Index>& order) {
    Json line = Json::array();
    for (Index u : order) line.push_back(r.base()->name(u));
    std::cout << line.dump() << '\n';
  });
  return kOk;
}

int cmd_convex(const std::string& path) {
  EnumSet s = io::enumset_from_json(io::read_json(path));
  ConvexityReport report = is_geodetically_convex(s);
  if (report.convex && s.empty()) {
    std::cout << "convex (empty)\n";
    return kOk;
  }
  if (report.convex) {
    std::cout << "convex\n";
    print(io::to_json(*report.poset));
    return kOk;
  }
  const ViolatingTriple& w = *report.violation;
  std::cout << "not convex\n";
  print(Json{{"pi", io::to_json(w.pi)}, {"gamma", io::to_json(w.gamma)}, {"sigma", io::to_json(w.sigma)}});
  return kNegative;
}

int cmd_encode(const std::string& path, const std::string& ref) {
  Poset p = require_poset(io::relation_from_json(io::read_json(path)));
  print(io::to_json(encode_interval(p, reference_or_identity(ref, p.base()))));
  return kOk;
}

int cmd_graph(const std::string& path, bool dot, bool force) {
  EnumSet s = io::enumset_from_json(io::read_json(path));
  guard_size(s.base()->size(), force, "graph export");
  if (dot) {
    std::cout << permutohedral_dot(s);
    return kOk;
  }
  auto edges = induced_edges(s);
  std::set<EdgeLabel> labels;
  for (const auto& e : edges) labels.insert(e.label);
  std::cout << "nodes=" << s.size() << " edges=" << edges.size() << " labels=" << labels.size() << '\n';
  return kOk;
}

// Views understood by `convert`.
const std::vector<std::string> kViews = {"relation", "extensions", "downsets", "interval-code", "cone-constraints"};

Preposet read_view(const std::string& view, const Json& doc) {
  if (view == "relation") return Preposet::closure_of(io::relation_from_json(doc));
  if (view == "extensions") {
    EnumSet s = io::enumset_from_json(doc);
    if (s.empty()) throw InputError("an empty enumeration set is not the extension set of a poset");
    ConvexityReport report = is_geodetically_convex(s);
    if (!report.convex) throw InputError("enumeration set is not geodetically convex, so it is not L(P) for any poset");
    return Preposet::from_relation(report.poset->relation());
  }
  if (view == "downsets") {
    SetFamily family = io::family_from_json(doc);
    if (!is_topology(family)) throw InputError("set family is not closed under union and intersection");
    return specialization_preposet(family);
  }
  if (view == "interval-code") {
    IntervalCode code = io::interval_code_from_json(doc);
    return Preposet::from_relation(reconstruct_poset(interval_extensions(code)).relation());
  }
  return io::cone_from_json(doc).constraints();
}

Json write_view(const std::string& view, const Preposet& q, const std::string& ref, bool force,
                std::size_t samples) {
  if (view == "relation") return io::to_json(q.relation());
  if (view == "extensions") {
    guard_size(q.n(), force, "listing extensions");
    return io::to_json(linear_extensions(q.relation()));
  }
  if (view == "downsets") return io::to_json(down_sets(q.relation()));
  if (view == "interval-code") {
    if (!q.is_poset()) throw InputError("interval codes exist only for posets");
    Poset p = Poset::from_relation(q.relation());
    return io::to_json(encode_interval(p, reference_or_identity(ref, p.base())));
  }
  Json out = io::to_json(cone_of(q.relation()));
  if (samples > 0) {
    const char* seed_text = std::getenv("POSETLAB_SEED");
    std::uint64_t seed = seed_text ? std::strtoull(seed_text, nullptr, 10) : 0;
    std::mt19937_64 rng(seed);
    Json members = Json::array();
    for (std::size_t i = 0; i < samples; ++i) members.push_back(io::to_json(sample_cone_member(q, rng)));
    out["samples"] = std::move(members);
  }
  return out;
}

int cmd_convert(const std::string& path, const std::string& from, const std::string& to, const std::string& ref,
                bool force, std::size_t samples) {
  Preposet q = read_view(from, io::read_json(path));
  print(write_view(to, q, ref, force, samples));
  return kOk;
}

int cmd_dim(const std::string& path, std::optional<std::size_t> max_k) {
  Poset p = require_poset(io::relation_from_json(io::read_json(path)));
  std::size_t k = max_k.value_or(std::max<std::size_t>(2, p.n() / 2));
  auto realizer = find_realizer(p, k);
  if (!realizer) {
    std::cout << "dimension > " << k << '\n';
    return kNegative;
  }
  std::cout << "dimension=" << realizer->size() << '\n';
  Json members = Json::array();
  for (const auto& pi : *realizer) members.push_back(io::to_json(pi));
  std::cout << members.dump() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Posets, linear extensions and their equivalent views"};
  app.require_subcommand(1);

  std::string input;
  auto add_input = [&](CLI::App* sub, const char* what) {
    sub->add_option("input", input, std::string(what) + " JSON file, or - for stdin")->required();
  };

  auto* check = app.add_subcommand("check", "Classify a relation");
  add_input(check, "relation");

  bool dot = false;
  auto* hasse = app.add_subcommand("hasse", "Covering pairs of a poset");
  add_input(hasse, "relation");
  hasse->add_flag("--dot", dot, "Emit a Graphviz digraph");

  bool count = false, list = false, force = false;
  auto* extensions = app.add_subcommand("extensions", "Count or list linear extensions");
  add_input(extensions, "relation");
  auto* count_flag = extensions->add_flag("--count", count, "Print the number of extensions (default)");
  extensions->add_flag("--list", list, "Print every extension, one per line")->excludes(count_flag);
  extensions->add_flag("--force", force, "Allow listing beyond 8 elements");

  auto* convex = app.add_subcommand("convex", "Decide geodetic convexity of an enumeration set");
  add_input(convex, "enumeration set");

  std::string ref;
  auto* encode = app.add_subcommand("encode", "Interval code of a poset relative to a reference enumeration");
  add_input(encode, "relation");
  encode->add_option("--ref", ref, "Reference enumeration: JSON array or comma-separated identifiers");

  auto* graph = app.add_subcommand("graph", "Induced permutohedral subgraph of an enumeration set");
  graph->add_option("--induced", input, "Enumeration set JSON file, or - for stdin")->required();
  graph->add_flag("--dot", dot, "Emit a Graphviz graph");
  graph->add_flag("--force", force, "Allow more than 8 elements");

  std::string from, to;
  std::size_t samples = 0;
  auto* convert = app.add_subcommand("convert", "Convert between views of a poset or preposet");
  add_input(convert, "input");
  convert->add_option("--from", from, "Input view")->required()->check(CLI::IsMember(kViews));
  convert->add_option("--to", to, "Output view")->required()->check(CLI::IsMember(kViews));
  convert->add_option("--ref", ref, "Reference enumeration for interval-code output");
  convert->add_option("--samples", samples, "Random cone members to attach to cone-constraints output (POSETLAB_SEED)");
  convert->add_flag("--force", force, "Allow listing extensions beyond 8 elements");

  std::optional<std::size_t> max_k;
  auto* dim = app.add_subcommand("dim", "Order dimension of a poset with a minimum realizer");
  add_input(dim, "relation");
  dim->add_option("--max-k", max_k, "Largest realizer size to try (default max(2, n/2))");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    if (*check) return cmd_check(input);
    if (*hasse) return cmd_hasse(input, dot);
    if (*extensions) return cmd_extensions(input, list, force);
    if (*convex) return cmd_convex(input);
    if (*encode) return cmd_encode(input, ref);
    if (*graph) return cmd_graph(input, dot, force);
    if (*convert) return cmd_convert(input, from, to, ref, force, samples);
    if (*dim) return cmd_dim(input, max_k);
  } catch (const FormatError& e) {
    std::cerr << "posetlab: " << e.what() << '\n';
  } catch (const InputError& e) {
    std::cerr << "posetlab: " << e.what() << '\n';
  } catch (const PreconditionError& e) {
    std::cerr << "posetlab: " << e.what() << '\n';
  }
  return kInputError;
}
