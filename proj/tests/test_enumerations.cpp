#include <doctest.h>

#include <set>

#include "support/oracles.hpp"

using namespace posetlab;
using oracle::enu;
using oracle::letters;
using oracle::rel;

TEST_CASE("all_enumerations") {
  CHECK(EnumSet::all(letters(1)).size() == 1);
  CHECK(EnumSet::all(letters(3)).size() == 6);

  Base b6 = letters(6);
  std::set<std::vector<Index>> seen;
  std::size_t count = 0;
  std::optional<Enumeration> previous;
  for (Enumeration pi : all_enumerations(b6)) {
    seen.emplace(pi.order().begin(), pi.order().end());
    if (previous) CHECK(*previous < pi);
    previous = pi;
    ++count;
  }
  CHECK(count == 720);
  CHECK(seen.size() == 720);

  // The range restarts from the beginning.
  auto range = all_enumerations(letters(3));
  CHECK(*range.begin() == enu(letters(3), "abc"));
  CHECK(std::distance(range.begin(), range.end()) == 6);
  CHECK(std::distance(range.begin(), range.end()) == 6);
}

TEST_CASE("enumeration basics") {
  Base b = letters(3);
  Enumeration pi = enu(b, "bca");
  CHECK(pi.at(1) == 1);
  CHECK(pi.position_of(0) == 3);
  CHECK(pi.to_string() == "|b|c|a|");
  CHECK(pi.reversed() == enu(b, "acb"));
  CHECK_THROWS_AS(Enumeration(b, {0, 0, 1}), PreconditionError);
  CHECK_THROWS_AS(Enumeration(b, {0, 1}), PreconditionError);
}

TEST_CASE("toset_of") {
  Base b2 = letters(2);
  CHECK(toset_of(enu(b2, "ab")) == rel(b2, {{"a", "b"}}, true));
  Base b3 = letters(3);
  CHECK(toset_of(enu(b3, "abc")).strict_part() == rel(b3, {{"a", "b"}, {"a", "c"}, {"b", "c"}}));
  for (Enumeration pi : all_enumerations(letters(4))) {
    Relation t = toset_of(pi);
    REQUIRE(std::holds_alternative<Poset>(validate_poset(t)));
    CHECK(t.strict_part().size() == 6);
    for (Index u = 0; u < 4; ++u)
      for (Index v = 0; v < 4; ++v) CHECK((t.contains(u, v) || t.contains(v, u)));
  }
}

TEST_CASE("inversions and distance agree with BFS on the explicit graph") {
  Base b3 = letters(3);
  CHECK(inversions_between(enu(b3, "abc"), enu(b3, "abc")).empty());
  CHECK(inversions_between(enu(b3, "abc"), enu(b3, "cba")).size() == 3);
  CHECK(distance(enu(b3, "abc"), enu(b3, "cba")) == 3);

  SUBCASE("all pairs at n = 4") {
    oracle::PermutohedralGraph g(letters(4));
    for (std::size_t a = 0; a < g.size(); ++a)
      for (std::size_t b = 0; b < g.size(); ++b) {
        CHECK(distance(g.node(a), g.node(b)) == static_cast<std::size_t>(g.bfs_distance(a, b)));
        CHECK(inversions_between(g.node(a), g.node(b)) == inversions_between(g.node(b), g.node(a)));
      }
  }

  SUBCASE("inversion set equals BFS path labels at n = 5") {
    oracle::PermutohedralGraph g(letters(5));
    for (std::size_t a = 0; a < g.size(); a += 7)
      for (std::size_t b = 0; b < g.size(); b += 3)
        CHECK(inversions_between(g.node(a), g.node(b)) == g.shortest_path_labels(a, b));
  }
}

TEST_CASE("distance is a metric bounded by C(n,2)") {
  Base b4 = letters(4);
  EnumSet all = EnumSet::all(b4);
  for (const auto& x : all)
    for (const auto& y : all) {
      std::size_t d = distance(x, y);
      CHECK((d == 0) == (x == y));
      CHECK(d == distance(y, x));
      CHECK(d <= 6);
      CHECK((d == 6) == (y == x.reversed()));
      for (const auto& z : all) CHECK(distance(x, z) <= d + distance(y, z));
    }
}

TEST_CASE("adjacency and swap_at") {
  Base b3 = letters(3);
  auto label = adjacency(enu(b3, "abc"), enu(b3, "bac"));
  REQUIRE(label);
  CHECK(*label == EdgeLabel(0, 1));
  CHECK_FALSE(adjacency(enu(b3, "abc"), enu(b3, "cba")));
  CHECK_FALSE(adjacency(enu(b3, "abc"), enu(b3, "abc")));
  CHECK(swap_at(enu(b3, "abc"), 1) == enu(b3, "bac"));
  CHECK_THROWS_AS(swap_at(enu(b3, "abc"), 0), PreconditionError);
  CHECK_THROWS_AS(swap_at(enu(b3, "abc"), 3), PreconditionError);

  for (Enumeration pi : all_enumerations(letters(4)))
    for (std::size_t i = 1; i < 4; ++i) {
      Enumeration sigma = swap_at(pi, i);
      CHECK(swap_at(sigma, i) == pi);
      auto l = adjacency(pi, sigma);
      REQUIRE(l);
      CHECK(*l == EdgeLabel(pi.at(i), pi.at(i + 1)));
      CHECK(distance(pi, sigma) == 1);
      // Only the labelled pair flips between the two tosets.
      Relation flipped = toset_of(pi) - toset_of(sigma);
      CHECK(flipped == Relation::from_pairs(pi.base(), {{pi.at(i), pi.at(i + 1)}}));
      // r_π − r_σ = χ_v − χ_u for u = π(i), v = π(i+1).
      Index u = pi.at(i), v = pi.at(i + 1);
      for (Index w = 0; w < 4; ++w) {
        long diff = long(pi.position_of(w)) - long(sigma.position_of(w));
        long expected = (w == v) - (w == u);
        CHECK(diff == expected);
      }
    }
}

TEST_CASE("is_between: both criteria agree with geodesic enumeration") {
  Base b3 = letters(3);
  CHECK(is_between(enu(b3, "abc"), enu(b3, "abc"), enu(b3, "cba")));
  CHECK(is_between(enu(b3, "abc"), enu(b3, "bac"), enu(b3, "cba")));

  oracle::PermutohedralGraph g(letters(4));
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t c = 0; c < g.size(); ++c)
      for (std::size_t b = 0; b < g.size(); ++b) {
        bool by_distance = is_between(g.node(a), g.node(c), g.node(b));
        CHECK(by_distance == is_between_by_tosets(g.node(a), g.node(c), g.node(b)));
        CHECK(by_distance == g.between(a, c, b));
      }
}

TEST_CASE("geodesic") {
  Base b3 = letters(3);
  CHECK(geodesic(enu(b3, "abc"), enu(b3, "abc")) == std::vector<Enumeration>{enu(b3, "abc")});
  auto walk = geodesic(enu(b3, "abc"), enu(b3, "cba"));
  CHECK(walk.size() == 4);
  // Lowest eligible position first: abc → bac → bca → cba.
  CHECK(walk == std::vector<Enumeration>{enu(b3, "abc"), enu(b3, "bac"), enu(b3, "bca"), enu(b3, "cba")});

  EnumSet all = EnumSet::all(letters(4));
  for (const auto& pi : all)
    for (const auto& sigma : all) {
      auto path = geodesic(pi, sigma);
      REQUIRE(path.size() == distance(pi, sigma) + 1);
      CHECK(path.front() == pi);
      CHECK(path.back() == sigma);
      std::set<EdgeLabel> labels;
      std::set<Enumeration> nodes(path.begin(), path.end());
      CHECK(nodes.size() == path.size());
      for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        auto l = adjacency(path[k], path[k + 1]);
        REQUIRE(l);
        CHECK(labels.insert(*l).second);
      }
      auto inv = inversions_between(pi, sigma);
      CHECK(std::vector<EdgeLabel>(labels.begin(), labels.end()) == inv);
    }
}

TEST_CASE("transposition_automorphism") {
  Base b3 = letters(3);
  CHECK(transposition_automorphism(EdgeLabel(0, 1), enu(b3, "abc")) == enu(b3, "bac"));
  CHECK(transposition_automorphism(EdgeLabel(0, 2), enu(b3, "abc")) == enu(b3, "cba"));

  Base b4 = letters(4);
  for (Enumeration pi : all_enumerations(b4))
    for (Index u = 0; u < 4; ++u)
      for (Index v = u + 1; v < 4; ++v) {
        EdgeLabel tau(u, v);
        Enumeration image = transposition_automorphism(tau, pi);
        CHECK(transposition_automorphism(tau, image) == pi);
        CHECK(pi.before(u, v) != image.before(u, v));
        for (std::size_t i = 1; i < 4; ++i) {
          Enumeration sigma = swap_at(pi, i);
          auto l = adjacency(pi, sigma);
          auto mapped = adjacency(image, transposition_automorphism(tau, sigma));
          REQUIRE(mapped);
          // Labels are carried along by τ_uv.
          auto relabel = [&](Index w) -> Index { return w == u ? v : (w == v ? u : w); };
          CHECK(*mapped == EdgeLabel(relabel(l->first), relabel(l->second)));
        }
      }
}

TEST_CASE("edge_bipartition") {
  Base b2 = letters(2);
  auto [near_a, near_b] = edge_bipartition(enu(b2, "ab"), enu(b2, "ba"));
  CHECK(near_a == EnumSet(b2, {enu(b2, "ab")}));
  CHECK(near_b == EnumSet(b2, {enu(b2, "ba")}));
  CHECK_THROWS_AS(edge_bipartition(enu(b2, "ab"), enu(b2, "ab")), PreconditionError);

  Base b4 = letters(4);
  EnumSet all = EnumSet::all(b4);
  struct Edge {
    EdgeLabel label;
    std::pair<EnumSet, EnumSet> parts;
  };
  std::vector<Edge> edges;
  for (const auto& pi : all)
    for (std::size_t i = 1; i < 4; ++i) {
      Enumeration sigma = swap_at(pi, i);
      if (sigma < pi) continue;
      auto parts = edge_bipartition(pi, sigma);
      CHECK(parts.first.size() + parts.second.size() == 24);
      CHECK(set_intersection(parts.first, parts.second).empty());
      CHECK(set_union(parts.first, parts.second) == all);
      // The part nearer pi is the set of enumerations ordering u before v.
      Index u = pi.at(i), v = pi.at(i + 1);
      for (const auto& gamma : parts.first) CHECK(gamma.before(u, v));
      for (const auto& gamma : parts.second) CHECK(gamma.before(v, u));
      edges.push_back({EdgeLabel(u, v), std::move(parts)});
    }
  CHECK(edges.size() == 36);
  for (const auto& e : edges)
    for (const auto& f : edges) {
      bool same_split = (e.parts.first == f.parts.first && e.parts.second == f.parts.second) ||
                        (e.parts.first == f.parts.second && e.parts.second == f.parts.first);
      CHECK((e.label == f.label) == same_split);
    }
}
