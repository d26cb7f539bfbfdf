#include "posetlab/dot.hpp"

#include <algorithm>
#include <sstream>

namespace posetlab {

namespace {

std::string quoted(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string hasse_dot(const Poset& p) {
  const ElementSet& base = *p.base();
  std::ostringstream out;
  out << "digraph hasse {\n";
  for (const auto& name : base.names()) out << "  " << quoted(name) << ";\n";
  for (auto [u, v] : cover_relation(p).pairs())
    out << "  " << quoted(base.name(u)) << " -> " << quoted(base.name(v)) << ";\n";
  out << "}\n";
  return out.str();
}

std::vector<InducedEdge> induced_edges(const EnumSet& s) {
  std::vector<InducedEdge> edges;
  const auto& members = s.members();
  for (std::size_t a = 0; a < members.size(); ++a) {
    const Enumeration& pi = members[a];
    for (std::size_t i = 1; i < pi.size(); ++i) {
      Enumeration sigma = swap_at(pi, i);
      auto it = std::lower_bound(members.begin(), members.end(), sigma);
      if (it == members.end() || !(*it == sigma)) continue;
      auto b = static_cast<std::size_t>(it - members.begin());
      if (b > a) edges.push_back({a, b, EdgeLabel(pi.at(i), pi.at(i + 1))});
    }
  }
  std::sort(edges.begin(), edges.end(), [](const InducedEdge& x, const InducedEdge& y) {
    return std::tie(x.from, x.to) < std::tie(y.from, y.to);
  });
  return edges;
}

std::string permutohedral_dot(const EnumSet& s) {
  const auto& members = s.members();
  std::ostringstream out;
  out << "graph permutohedron {\n";
  for (const auto& pi : members) out << "  " << quoted(pi.to_string()) << ";\n";
  for (const auto& e : induced_edges(s))
    out << "  " << quoted(members[e.from].to_string()) << " -- " << quoted(members[e.to].to_string())
        << " [label=" << quoted(e.label.to_string(*s.base())) << "];\n";
  out << "}\n";
  return out.str();
}

}  // namespace posetlab
