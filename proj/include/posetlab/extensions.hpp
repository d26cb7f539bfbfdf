#pragma once

// The precedence Galois connection between sets of enumerations and
// relations on N, its two closure operators, the coatoms S_{u≺v}, and the
// enumeration sets and posets attached to faces of the permutohedron.

#include <vector>

#include "posetlab/enumerations.hpp"

namespace posetlab {

/// L(T): every π with π⁻¹(u) ≤ π⁻¹(v) for all (u, v) ∈ T, in lexicographic
/// order. Posets are handled by recursive choice of minimal elements; any
/// other relation falls back to filtering all n! enumerations.
EnumSet linear_extensions(const Relation& t);
EnumSet linear_extensions(const Poset& p);

/// Calls visit(order) for every linear extension of p in lexicographic order
/// without materializing the set. `order` is only valid during the call.
template <typename Visit>
void for_each_linear_extension(const Poset& p, Visit&& visit);

/// S^▷: the intersection of the tosets of S, or N × N when S is empty.
Relation upper_galois(const EnumSet& s);

/// tr(T ∪ Δ) when T∖Δ is acyclic, N × N otherwise.
Relation relation_closure(const Relation& t);

/// S^▷◁ = L(S^▷).
EnumSet enumset_closure(const EnumSet& s);

/// S_{u≺v}: enumerations placing u before v.
EnumSet coatom(const Base& base, Index u, Index v);

/// |A₁|…|A_m|: disjoint non-empty blocks covering N.
class OrderedPartition {
 public:
  OrderedPartition(Base base, std::vector<Mask> blocks);
  static OrderedPartition from_names(Base base, const std::vector<std::vector<std::string>>& blocks);

  const Base& base() const { return base_; }
  const std::vector<Mask>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }

  /// "|ab|c|"
  std::string to_string() const;

 private:
  Base base_;
  std::vector<Mask> blocks_;
};

/// Every ordered partition of the base (the faces of the permutohedron).
std::vector<OrderedPartition> all_ordered_partitions(const Base& base);

/// Enumerations listing A₁ first, then A₂, and so on.
EnumSet face_enum_set(const OrderedPartition& p);

/// Δ ∪ {(u, v) : u ∈ A_i, v ∈ A_j, i < j}.
Poset face_poset(const OrderedPartition& p);

/// n − m.
std::size_t face_dimension(const OrderedPartition& p);

/// Given P_sub ⊂ P_super, removes the lexicographically least covering pair
/// of P_super that P_sub lacks. The result P'' satisfies
/// P_sub ⊆ P'' ⊂ P_super with exactly one pair fewer than P_super.
Poset sandwich_step(const Poset& sub, const Poset& super);

// ---------------------------------------------------------------------------

namespace detail {

template <typename Visit>
void extend_minimal(const std::vector<Mask>& preds, Mask placed, Mask all, std::vector<Index>& order,
                    Visit& visit) {
  if (placed == all) {
    visit(static_cast<const std::vector<Index>&>(order));
    return;
  }
  Mask remaining = all & ~placed;
  for_each_bit(remaining, [&](Index u) {
    if ((preds[u] & ~placed) != 0) return;
    order.push_back(u);
    extend_minimal(preds, placed | bit(u), all, order, visit);
    order.pop_back();
  });
}

}  // namespace detail

template <typename Visit>
void for_each_linear_extension(const Poset& p, Visit&& visit) {
  const std::size_t n = p.n();
  std::vector<Mask> preds(n);
  for (std::size_t u = 0; u < n; ++u) preds[u] = p.strict().predecessors(static_cast<Index>(u));
  std::vector<Index> order;
  order.reserve(n);
  detail::extend_minimal(preds, Mask{0}, p.base()->all(), order, visit);
}

}  // namespace posetlab
