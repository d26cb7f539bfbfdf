#pragma once

// Braid cones {x : x_u ≤ x_v for (u, v) ∈ T} in exact rational arithmetic:
// membership, Weyl chamber covers, full-dimensionality, the cone ↔ topology
// transfer and a constructive conic decomposition of cone members.

#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "posetlab/topology.hpp"

namespace posetlab {

/// A point of ℚ^N.
class RationalVector {
 public:
  explicit RationalVector(Base base);
  RationalVector(Base base, std::vector<mpq_class> coords);

  /// χ_A
  static RationalVector incidence(Base base, Mask subset);
  /// r_π: u ↦ 1-based position of u in pi.
  static RationalVector rank_vector(const Enumeration& pi);

  const Base& base() const { return base_; }
  std::size_t size() const { return coords_.size(); }
  const mpq_class& operator[](Index u) const { return coords_.at(u); }
  mpq_class& operator[](Index u) { return coords_.at(u); }
  const std::vector<mpq_class>& coords() const { return coords_; }

  bool has_distinct_coordinates() const;

  RationalVector& operator+=(const RationalVector& other);
  RationalVector& operator-=(const RationalVector& other);
  RationalVector& operator*=(const mpq_class& factor);
  friend RationalVector operator+(RationalVector a, const RationalVector& b) { return a += b; }
  friend RationalVector operator-(RationalVector a, const RationalVector& b) { return a -= b; }
  friend RationalVector operator*(const mpq_class& factor, RationalVector a) { return a *= factor; }

  bool operator==(const RationalVector& other) const {
    return same_base(base_, other.base_) && coords_ == other.coords_;
  }

 private:
  Base base_;
  std::vector<mpq_class> coords_;
};

/// ν_T kept in half-space form by the preposet tr(T ∪ Δ).
class BraidCone {
 public:
  explicit BraidCone(Preposet constraints) : constraints_(std::move(constraints)) {}

  const Base& base() const { return constraints_.base(); }
  const Preposet& constraints() const { return constraints_; }

 private:
  Preposet constraints_;
};

BraidCone cone_of(const Relation& t);

/// Exact check of x_u ≤ x_v for every constraint (u, v).
bool membership(const BraidCone& cone, const RationalVector& x);

/// inner ⊆ outer, decided by constraint implication: every constraint of
/// outer is one of inner.
bool cone_includes(const BraidCone& outer, const BraidCone& inner);

/// {π : P ⊆ T_π}, the Weyl chambers ν^π tiling ν_P.
EnumSet chamber_cover(const Poset& p);

/// The unique σ with x ∈ ν^σ. Requires pairwise distinct coordinates.
Enumeration chamber_of(const RationalVector& x);

/// ν_T spans ℚ^N iff T is a poset. A poset is witnessed by the rank vector
/// of one of its linear extensions.
bool is_full_dimensional(const Preposet& t);

/// {D : −χ_D ∈ cone}.
SetFamily cone_to_topology(const BraidCone& cone);

/// One term c·g of a conic combination, with g either χ_N or −χ_D for a
/// down set D. Only χ_N may carry a negative coefficient.
struct ConicTerm {
  enum class Generator { all_ones, negated_down_set };
  Generator generator;
  /// D for negated_down_set; N for all_ones.
  Mask set;
  mpq_class coefficient;

  RationalVector vector(const Base& base) const;
};

/// x = c₀·χ_N + Σ cᵢ·(−χ_{Dᵢ}) with nested down sets Dᵢ of T. The Dᵢ are
/// prefix unions of the equivalence classes of T ordered by increasing x,
/// ties broken consonantly with T. Zero coefficients are omitted. Throws
/// PreconditionError when x is outside ν_T.
std::vector<ConicTerm> conic_decomposition(const RationalVector& x, const Preposet& t);

/// Σ cᵢ·gᵢ
RationalVector evaluate(const Base& base, const std::vector<ConicTerm>& terms);

struct SampleOptions {
  /// Chance that a gap between consecutive classes is zero.
  double tie_probability = 0.25;
  /// Numerators and denominators are drawn from [1, max_term].
  long max_term = 12;
};

/// A member of ν_T built as a non-negative combination of the constructive
/// generators plus a signed multiple of χ_N. Identical generator state gives
/// identical samples.
RationalVector sample_cone_member(const Preposet& t, std::mt19937_64& rng,
                                  const SampleOptions& options = {});

/// |L(P)| / n!
mpq_class extension_fraction(const Poset& p);

/// "p/q", or "p" for integers.
std::string to_string(const mpq_class& q);
/// Parses "p/q" or "p"; throws PreconditionError on malformed input.
mpq_class parse_rational(const std::string& text);

}  // namespace posetlab
