#pragma once

// Geodetic convexity of enumeration sets in the permutohedral graph and the
// poset views it unlocks: reconstruction, height and diameter, poset
// dimension, and interval codes relative to a reference enumeration.

#include <optional>
#include <vector>

#include "posetlab/extensions.hpp"

namespace posetlab {

/// gamma lies on a geodesic between pi and sigma but is missing from S.
struct ViolatingTriple {
  Enumeration pi;
  Enumeration gamma;
  Enumeration sigma;
};

struct ConvexityReport {
  bool convex = false;
  /// Populated iff convex and S is non-empty.
  std::optional<Poset> poset;
  /// Populated iff not convex.
  std::optional<ViolatingTriple> violation;
};

/// Labels of the edges of the subgraph induced by S. Requires S ≠ ∅.
std::vector<EdgeLabel> inversions_within(const EnumSet& s);

/// Cov(S): (u, v) such that some π ∈ S has an out-of-S neighbour through the
/// label {u, v} and u ≺_π v. Requires S ≠ ∅.
Relation covering_of(const EnumSet& s);

/// Decides convexity as the fixpoint test S^▷◁ = S. A non-convex verdict
/// carries the first violating triple found by scanning pairs of S in
/// lexicographic order.
ConvexityReport is_geodetically_convex(const EnumSet& s);

/// The first violating triple by the geodesic definition, if any. Scans
/// pairs (π, σ) of S in lexicographic order and walks the interval between
/// them breadth-first.
std::optional<ViolatingTriple> find_violating_triple(const EnumSet& s);

/// tr(Δ ∪ Cov(S)). Throws PreconditionError unless S is non-empty and
/// convex.
Poset reconstruct_poset(const EnumSet& s);

/// Every ordered pair u ≠ v meets exactly one of: {u, v} ∈ Inv(S),
/// (u, v) ∈ tr(Cov(S)), (v, u) ∈ tr(Cov(S)). Necessary for convexity only.
bool trichotomy_check(const EnumSet& s);

/// |Inv(S)|, with the convention −1 for the empty set.
int height(const EnumSet& s);

/// Largest distance between two members. Requires S ≠ ∅.
std::size_t diameter(const EnumSet& s);

/// Least k ≤ max_k such that k linear extensions of p intersect to p, or
/// nullopt when none exists.
std::optional<std::size_t> poset_dimension(const Poset& p, std::size_t max_k);

/// A realizer of minimum size, searched up to max_k members.
std::optional<std::vector<Enumeration>> find_realizer(const Poset& p, std::size_t max_k);

/// The six-element poset of dimension 3 on {a,…,f}:
/// Δ ∪ {(a,e),(a,f),(b,d),(b,f),(c,d),(c,e)}.
Poset example_dim3();

/// The interval [A, B] of strict pairs of T_D, A ⊆ B ⊆ T_D∖Δ.
class IntervalCode {
 public:
  IntervalCode(Enumeration reference, Relation lower, Relation upper);

  const Enumeration& reference() const { return reference_; }
  const Relation& lower() const { return lower_; }
  const Relation& upper() const { return upper_; }

  bool operator==(const IntervalCode& other) const {
    return reference_ == other.reference_ && lower_ == other.lower_ && upper_ == other.upper_;
  }

 private:
  Enumeration reference_;
  Relation lower_;
  Relation upper_;
};

/// {γ : A ⊆ T_D∖T_γ ⊆ B}.
EnumSet interval_extensions(const IntervalCode& code);

/// [(T_D ∩ P^op)∖Δ, T_D∖P], the minimal code of p.
IntervalCode encode_interval(const Poset& p, const Enumeration& reference);

/// [⋂ T_D∖T_γ, ⋃ T_D∖T_γ] over γ ∈ S. Requires S ≠ ∅.
IntervalCode encode_interval_from_extensions(const EnumSet& s, const Enumeration& reference);

}  // namespace posetlab
