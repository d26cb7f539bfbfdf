#pragma once

// Enumerations of N, their tosets and rank vectors, and the permutohedral
// graph: adjacency, inversion distance, betweenness and geodesics. The graph
// itself is never materialized here.

#include <compare>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "posetlab/relations.hpp"

namespace posetlab {

/// A bijection [n] → N. Positions are 1-based in the public interface.
class Enumeration {
 public:
  /// `order[i]` is the element at position i + 1.
  Enumeration(Base base, std::vector<Index> order);
  static Enumeration from_names(Base base, const std::vector<std::string>& names);
  /// The enumeration listing elements in identifier order.
  static Enumeration identity(Base base);

  const Base& base() const { return base_; }
  std::size_t size() const { return order_.size(); }

  /// Element at 1-based position i.
  Index at(std::size_t position) const { return order_.at(position - 1); }
  /// 1-based position of u; the rank vector component r_π(u).
  std::size_t position_of(Index u) const { return std::size_t{rank_.at(u)} + 1; }
  bool before(Index u, Index v) const { return rank_[u] < rank_[v]; }

  std::span<const Index> order() const { return order_; }
  std::span<const Index> ranks() const { return rank_; }
  Mask prefix(std::size_t length) const;
  Enumeration reversed() const;

  /// "|a|b|c|"
  std::string to_string() const;

  bool operator==(const Enumeration& other) const { return order_ == other.order_; }
  std::strong_ordering operator<=>(const Enumeration& other) const { return order_ <=> other.order_; }

 private:
  Base base_;
  std::vector<Index> order_;
  std::vector<Index> rank_;
};

/// Two-element subset {first, second} with first < second.
struct EdgeLabel {
  Index first;
  Index second;

  EdgeLabel(Index u, Index v);
  std::string to_string(const ElementSet& base) const;
  auto operator<=>(const EdgeLabel&) const = default;
};

/// Restartable stream of all n! enumerations in lexicographic order.
class EnumerationRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Enumeration;
    using difference_type = std::ptrdiff_t;
    using pointer = const Enumeration*;
    using reference = Enumeration;

    iterator() = default;
    iterator(Base base, bool done);
    Enumeration operator*() const { return Enumeration(base_, order_); }
    iterator& operator++();
    iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const iterator& other) const { return done_ == other.done_; }

   private:
    Base base_;
    std::vector<Index> order_;
    bool done_ = true;
  };

  explicit EnumerationRange(Base base) : base_(std::move(base)) {}
  iterator begin() const { return iterator(base_, false); }
  iterator end() const { return iterator(base_, true); }

 private:
  Base base_;
};

EnumerationRange all_enumerations(Base base);

/// n!, throwing PreconditionError above 20.
std::size_t factorial(std::size_t n);

/// T_π: (u, v) iff π⁻¹(u) ≤ π⁻¹(v).
Relation toset_of(const Enumeration& pi);

/// Labels {u, v} whose mutual order differs between pi and sigma, ascending.
std::vector<EdgeLabel> inversions_between(const Enumeration& pi, const Enumeration& sigma);

/// Number of inversions between pi and sigma, i.e. the graph distance.
std::size_t distance(const Enumeration& pi, const Enumeration& sigma);

/// Label of the edge between pi and sigma, or nullopt when they are not adjacent.
std::optional<EdgeLabel> adjacency(const Enumeration& pi, const Enumeration& sigma);

/// Swaps the elements at 1-based positions i and i + 1.
Enumeration swap_at(const Enumeration& pi, std::size_t i);

/// The n − 1 neighbours of pi, neighbour k obtained by swap_at(pi, k).
std::vector<Enumeration> neighbours(const Enumeration& pi);

/// gamma lies on a geodesic between pi and sigma (distance criterion).
bool is_between(const Enumeration& pi, const Enumeration& gamma, const Enumeration& sigma);

/// Same question decided by T_π ∩ T_σ ⊆ T_γ.
bool is_between_by_tosets(const Enumeration& pi, const Enumeration& gamma,
                          const Enumeration& sigma);

/// A shortest walk from pi to sigma. Each step swaps the lowest position
/// whose adjacent pair is still inverted relative to sigma.
std::vector<Enumeration> geodesic(const Enumeration& pi, const Enumeration& sigma);

/// Exchanges the elements of `label` in pi (τ_uv ∘ π).
Enumeration transposition_automorphism(const EdgeLabel& label, const Enumeration& pi);

/// A finite set of enumerations of one base, kept sorted lexicographically.
class EnumSet {
 public:
  explicit EnumSet(Base base);
  EnumSet(Base base, std::vector<Enumeration> members);
  static EnumSet all(Base base);

  const Base& base() const { return base_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<Enumeration>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(const Enumeration& pi) const;
  bool is_subset_of(const EnumSet& other) const;

  bool operator==(const EnumSet& other) const {
    return same_base(base_, other.base_) && members_ == other.members_;
  }

 private:
  Base base_;
  std::vector<Enumeration> members_;
};

EnumSet set_union(const EnumSet& a, const EnumSet& b);
EnumSet set_intersection(const EnumSet& a, const EnumSet& b);
EnumSet set_difference(const EnumSet& a, const EnumSet& b);

/// (S_{π:σ}, S_{σ:π}): the enumerations strictly closer to pi, resp. sigma.
/// Throws PreconditionError unless pi and sigma are adjacent.
std::pair<EnumSet, EnumSet> edge_bipartition(const Enumeration& pi, const Enumeration& sigma);

}  // namespace posetlab
