#include <doctest.h>

#include <random>

#include "support/oracles.hpp"

using namespace posetlab;
using oracle::enu;
using oracle::letters;
using oracle::rel;

namespace {

Mask names(const Base& b, std::initializer_list<const char*> ids) {
  Mask m = 0;
  for (const char* id : ids) m |= bit(b->index_of(id));
  return m;
}

}  // namespace

TEST_CASE("down_sets") {
  Base b3 = letters(3);
  CHECK(down_sets(Relation::diagonal(b3)).size() == 8);
  Relation chain = rel(b3, {{"a", "b"}, {"b", "c"}});
  SetFamily expected(b3, {0, names(b3, {"a"}), names(b3, {"a", "b"}), names(b3, {"a", "b", "c"})});
  CHECK(down_sets(chain) == expected);
  CHECK(down_sets(chain).sets() == std::vector<Mask>{0, 0b001, 0b011, 0b111});
  CHECK_THROWS_AS(down_sets(Relation::diagonal(letters(5)), 16), PreconditionError);

  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    Relation r = oracle::random_relation(letters(5), rng, 0.05 + 0.001 * trial);
    SetFamily family = down_sets(r);
    CHECK(family.sets() == SetFamily(r.base(), oracle::down_sets_by_subsets(r)).sets());
    CHECK(is_topology(family));
  }
}

TEST_CASE("is_topology") {
  Base b3 = letters(3);
  CHECK(is_topology(SetFamily(b3, {0, 0b111})));
  CHECK_FALSE(is_topology(SetFamily(b3, {0, 0b001, 0b010, 0b111})));
  CHECK_FALSE(is_topology(SetFamily(b3, {0b111})));
  CHECK_FALSE(is_topology(SetFamily(b3, {0})));
  auto tops = oracle::all_topologies(b3);
  CHECK(tops.size() == 29);
  std::size_t accepted = 0;
  for (std::uint64_t code = 0; code < 256; ++code) {
    std::vector<Mask> sets;
    for (Mask m = 0; m < 8; ++m)
      if ((code >> m) & 1U) sets.push_back(m);
    accepted += is_topology(SetFamily(b3, sets));
  }
  CHECK(accepted == 29);
}

TEST_CASE("specialization_preposet") {
  Base b2 = letters(2);
  CHECK(specialization_preposet(SetFamily(b2, {0, 0b01, 0b10, 0b11})).relation() == Relation::diagonal(b2));
  CHECK(specialization_preposet(SetFamily(b2, {0, 0b01, 0b11})).relation() == rel(b2, {{"a", "b"}}, true));
  CHECK_THROWS_AS(specialization_preposet(SetFamily(b2, {0, 0b01})), PreconditionError);

  for (std::size_t n = 1; n <= 4; ++n) {
    Base b = letters(n);
    for (const Relation& q : oracle::all_preposets(b)) {
      SetFamily family = down_sets(q);
      CHECK(specialization_preposet(family).relation() == q);
      CHECK(distinguishes_points(family) == oracle::is_antisymmetric(q));
    }
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    Base b = letters(n);
    for (const auto& sets : oracle::all_topologies(b)) {
      SetFamily family(b, sets);
      CHECK(down_sets(specialization_preposet(family).relation()) == family);
    }
  }
}

TEST_CASE("distinguishes_points") {
  Base b3 = letters(3);
  CHECK_FALSE(distinguishes_points(SetFamily(b3, {0, 0b111})));
  CHECK(distinguishes_points(down_sets(rel(b3, {{"a", "b"}, {"b", "c"}}))));
}

TEST_CASE("chain_of") {
  Base b2 = letters(2);
  CHECK(chain_of(enu(b2, "ab")).sets() == std::vector<Mask>{0, 0b01, 0b11});
  CHECK(chain_of(enu(letters(3), "cab")).size() == 4);
}

TEST_CASE("extensions_via_chains") {
  Base b3 = letters(3);
  CHECK(extensions_via_chains(Poset::from_relation(toset_of(enu(b3, "bac")))).size() == 1);
  CHECK(extensions_via_chains(Poset::from_relation(Relation::diagonal(b3))).size() == 6);
  for (const Relation& r : oracle::all_posets(letters(4))) {
    Poset p = Poset::from_relation(r);
    CHECK(extensions_via_chains(p) == linear_extensions(p));
  }
}

TEST_CASE("count_extensions") {
  Base b3 = letters(3);
  CHECK(count_extensions(Poset::from_relation(toset_of(enu(b3, "abc")))) == 1);
  CHECK(count_extensions(Poset::from_relation(Relation::diagonal(letters(8)))) == 40320);
  CHECK(count_extensions(example_dim3()) == 48);
  CHECK(count_extensions(Poset::from_relation(Relation::diagonal(letters(20)))) ==
        mpz_class("2432902008176640000"));
  {
    // Two disjoint chains of 20: C(40, 20) interleavings over 21·21 down sets.
    std::vector<std::string> ids;
    for (int i = 0; i < 40; ++i) ids.push_back("x" + std::to_string(100 + i));
    Base b40 = make_base(ids);
    Relation chains(b40);
    for (Index u = 0; u + 1 < 40; ++u)
      if (u != 19) chains.insert(u, u + 1);
    ExtensionCount c = count_extensions_detailed(Poset::from_strict_generators(chains));
    mpz_class binomial;
    mpz_bin_uiui(binomial.get_mpz_t(), 40, 20);
    CHECK(c.count == binomial);
    CHECK(c.count == mpz_class("137846528820"));
    CHECK(c.states == 21 * 21);
  }

  for (std::size_t n = 1; n <= 4; ++n)
    for (const Relation& r : oracle::all_posets(letters(n))) {
      Poset p = Poset::from_relation(r);
      ExtensionCount c = count_extensions_detailed(p);
      CHECK(c.count == oracle::extensions_by_filter(r).size());
      std::size_t family_size = oracle::down_sets_by_subsets(r).size();
      CHECK(c.states == family_size);
      CHECK(family_size >= n + 1);
      bool toset = p.strict().size() == oracle::pairs_count(n);
      CHECK((family_size == n + 1) == toset);
    }

  std::mt19937_64 rng(83);
  for (std::size_t n : {5u, 6u})
    for (int trial = 0; trial < 100; ++trial) {
      Relation r = oracle::random_poset(letters(n), rng, 0.1 + 0.005 * trial);
      CHECK(count_extensions(Poset::from_relation(r)) == oracle::extensions_by_filter(r).size());
    }
}

TEST_CASE("join_irreducibles") {
  Base b3 = letters(3);
  auto anti = join_irreducibles(Poset::from_relation(Relation::diagonal(b3)));
  CHECK(anti == std::map<Index, Mask>{{0, 0b001}, {1, 0b010}, {2, 0b100}});
  auto chain = join_irreducibles(Poset::from_relation(rel(b3, {{"a", "b"}, {"b", "c"}, {"a", "c"}}, true)));
  CHECK(chain == std::map<Index, Mask>{{0, 0b001}, {1, 0b011}, {2, 0b111}});

  for (const Relation& r : oracle::all_posets(letters(4))) {
    Poset p = Poset::from_relation(r);
    auto ji = join_irreducibles(p);
    std::vector<Mask> principal;
    for (auto [v, ideal] : ji) principal.push_back(ideal);
    std::sort(principal.begin(), principal.end(), family_less);
    CHECK(union_irreducible_members(down_sets(p.relation())) == principal);
  }
}

TEST_CASE("width") {
  Base b3 = letters(3);
  CHECK(width(Poset::from_relation(toset_of(enu(b3, "abc")))) == 1);
  CHECK(width(Poset::from_relation(Relation::diagonal(letters(7)))) == 7);
  CHECK(width(example_dim3()) == 3);
  CHECK(width(example_dim3()) == oracle::width_by_subsets(example_dim3().relation()));
  for (const Relation& r : oracle::all_posets(letters(4)))
    CHECK(width(Poset::from_relation(r)) == oracle::width_by_subsets(r));
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 100; ++trial) {
    Relation r = oracle::random_poset(letters(8), rng, 0.05 + 0.004 * trial);
    CHECK(width(Poset::from_relation(r)) == oracle::width_by_subsets(r));
  }
}

TEST_CASE("set family order") {
  Base b3 = letters(3);
  SetFamily f(b3, {0b111, 0b010, 0, 0b011, 0b001, 0b010});
  CHECK(f.sets() == std::vector<Mask>{0, 0b001, 0b010, 0b011, 0b111});
  CHECK(f.contains(0b011));
  CHECK_FALSE(f.contains(0b100));
  CHECK(SetFamily(b3, {0, 0b111}).is_subfamily_of(f));
}
