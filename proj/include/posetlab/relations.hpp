#pragma once

// Binary relations on a finite element set: closure, acyclicity, poset and
// preposet validation, covering relations and preposet quotients.

#include <compare>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "posetlab/element_set.hpp"

namespace posetlab {

using Pair = std::pair<Index, Index>;

/// A set of ordered pairs over base × base, stored as one successor mask
/// per element. (u, v) is present iff bit v of row u is set.
class Relation {
 public:
  explicit Relation(Base base);

  static Relation diagonal(Base base);
  static Relation full(Base base);
  static Relation from_pairs(Base base, const std::vector<Pair>& pairs);

  const Base& base() const { return base_; }
  std::size_t n() const { return rows_.size(); }

  bool contains(Index u, Index v) const { return (rows_[u] >> v) & 1U; }
  void insert(Index u, Index v) { rows_[u] |= bit(v); }
  void erase(Index u, Index v) { rows_[u] &= ~bit(v); }

  /// {v : (u, v) ∈ R}
  Mask successors(Index u) const { return rows_[u]; }
  /// {u : (u, v) ∈ R}
  Mask predecessors(Index v) const;

  /// Number of pairs, diagonal members included.
  std::size_t size() const;
  bool empty() const { return size() == 0; }

  bool has_diagonal() const;
  Relation strict_part() const;
  Relation with_diagonal() const;

  bool is_subset_of(const Relation& other) const;
  bool is_transitive() const;

  /// All pairs in lexicographic order of (u, v).
  std::vector<Pair> pairs() const;

  Relation& operator|=(const Relation& other);
  Relation& operator&=(const Relation& other);
  Relation& operator-=(const Relation& other);
  friend Relation operator|(Relation a, const Relation& b) { return a |= b; }
  friend Relation operator&(Relation a, const Relation& b) { return a &= b; }
  friend Relation operator-(Relation a, const Relation& b) { return a -= b; }

  bool operator==(const Relation& other) const;
  /// Orders relations over the same base by their row masks.
  std::strong_ordering operator<=>(const Relation& other) const;

 private:
  Base base_;
  std::vector<Mask> rows_;
};

/// Least transitive relation containing r.
Relation transitive_closure(const Relation& r);

/// Relational composition: (u, w) iff (u, v) ∈ a and (v, w) ∈ b for some v.
Relation compose(const Relation& a, const Relation& b);

/// No element reaches itself through a non-empty chain of pairs of r. A
/// loop (u, u) counts as a cycle.
bool is_acyclic(const Relation& r);

Relation opposite(const Relation& r);

/// A partial order, held by its strict part.
class Poset {
 public:
  /// Throws PreconditionError when r is not reflexive, transitive and
  /// antisymmetric.
  static Poset from_relation(const Relation& r);
  /// Builds the poset tr(strict) ∪ Δ; throws when strict is cyclic.
  static Poset from_strict_generators(const Relation& strict);

  const Base& base() const { return strict_.base(); }
  std::size_t n() const { return strict_.n(); }
  const Relation& strict() const { return strict_; }
  Relation relation() const { return strict_.with_diagonal(); }

  bool less(Index u, Index v) const { return strict_.contains(u, v); }
  bool leq(Index u, Index v) const { return u == v || strict_.contains(u, v); }
  bool incomparable(Index u, Index v) const {
    return u != v && !strict_.contains(u, v) && !strict_.contains(v, u);
  }

  bool operator==(const Poset&) const = default;

 private:
  explicit Poset(Relation strict) : strict_(std::move(strict)) {}
  Relation strict_;
};

/// A reflexive transitive relation.
class Preposet {
 public:
  /// Throws PreconditionError when r is not reflexive and transitive.
  static Preposet from_relation(const Relation& r);
  /// tr(r ∪ Δ), always a preposet.
  static Preposet closure_of(const Relation& r);

  const Base& base() const { return pairs_.base(); }
  std::size_t n() const { return pairs_.n(); }
  const Relation& relation() const { return pairs_; }
  bool is_poset() const;

  bool operator==(const Preposet&) const = default;

 private:
  explicit Preposet(Relation pairs) : pairs_(std::move(pairs)) {}
  Relation pairs_;
};

enum class Axiom { missing_diagonal, not_transitive, cyclic };

std::string to_string(Axiom axiom);

/// Broken axioms are reported in the order missing-diagonal,
/// not-transitive, cyclic.
struct AxiomViolation {
  Axiom axiom;
  std::string message() const { return to_string(axiom); }
};

std::variant<Poset, AxiomViolation> validate_poset(const Relation& r);
std::variant<Preposet, AxiomViolation> validate_preposet(const Relation& r);

/// The covering pairs u ⋖ v of p.
Relation cover_relation(const Poset& p);

enum class Comparability { equal, strictly_below, strictly_above, incomparable };

std::string to_string(Comparability c);

Comparability comparability(const Poset& p, Index u, Index v);

/// Equivalence classes of Q ∩ Q^op and the induced poset on them.
struct PreposetQuotient {
  /// Classes ordered by their least member; members ascending.
  std::vector<std::vector<Index>> classes;
  /// class_of[u] is the position of u's class in `classes`.
  std::vector<std::size_t> class_of;
  /// Poset over an element set naming each class "{m1,m2,...}".
  Poset order;
};

PreposetQuotient preposet_quotient(const Preposet& q);

/// Inverse of preposet_quotient: (l, u) iff class(l) ⪯ class(u).
Preposet expand_quotient(const Base& base, const PreposetQuotient& quotient);

}  // namespace posetlab
