#pragma once

// Down-set families as finite topologies: the Birkhoff-style round trip
// between preposets and topologies, chain criteria, join-irreducibles,
// width, and counting linear extensions over the lattice of down sets.

#include <cstddef>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "posetlab/extensions.hpp"

namespace posetlab {

/// A family of subsets of N in canonical order: by size, then
/// lexicographically by members.
class SetFamily {
 public:
  explicit SetFamily(Base base);
  SetFamily(Base base, std::vector<Mask> sets);

  const Base& base() const { return base_; }
  const std::vector<Mask>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool contains(Mask set) const;
  bool is_subfamily_of(const SetFamily& other) const;

  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }

  bool operator==(const SetFamily& other) const {
    return same_base(base_, other.base_) && sets_ == other.sets_;
  }

 private:
  Base base_;
  std::vector<Mask> sets_;
};

/// Canonical family order.
bool family_less(Mask a, Mask b);

/// Families larger than this are refused by down_sets.
inline constexpr std::size_t kDefaultDownSetCap = std::size_t{1} << 22;

/// {D : (u, v) ∈ T and v ∈ D imply u ∈ D}. Throws PreconditionError when
/// the family would exceed `cap` members.
SetFamily down_sets(const Relation& t, std::size_t cap = kDefaultDownSetCap);

/// ∅ and N belong to the family and it is closed under ∩ and ∪.
bool is_topology(const SetFamily& family);

/// {(u, v) : every member containing v contains u}. Requires a topology.
Preposet specialization_preposet(const SetFamily& family);

/// Every two distinct elements are separated by some member.
bool distinguishes_points(const SetFamily& family);

/// The n + 1 prefix sets of pi.
SetFamily chain_of(const Enumeration& pi);

/// {π : chain_of(π) ⊆ D_P}. Also checks that the chains of the result
/// cover D_P, throwing std::logic_error otherwise.
EnumSet extensions_via_chains(const Poset& p);

struct ExtensionCount {
  mpz_class count;
  /// Number of down sets visited, equal to |D_P|.
  std::size_t states = 0;
};

/// |L(P)| as the number of maximal chains of (D_P, ⊆), by memoized
/// recursion over down sets. No extension is enumerated.
ExtensionCount count_extensions_detailed(const Poset& p);
mpz_class count_extensions(const Poset& p);

/// v ↦ I(v) = {w : w ⪯ v}.
std::map<Index, Mask> join_irreducibles(const Poset& p);

/// Members of the family that are not the union of their proper
/// sub-members in the family (∅ excluded).
std::vector<Mask> union_irreducible_members(const SetFamily& family);

/// Size of a largest antichain.
std::size_t width(const Poset& p);

}  // namespace posetlab
