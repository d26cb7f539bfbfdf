#include "posetlab/relations.hpp"

#include <algorithm>
#include <numeric>

namespace posetlab {

Relation::Relation(Base base) : base_(std::move(base)) {
  if (!base_) throw PreconditionError("relation needs an element set");
  rows_.assign(base_->size(), 0);
}

Relation Relation::diagonal(Base base) {
  Relation r(std::move(base));
  for (std::size_t u = 0; u < r.n(); ++u) r.rows_[u] = bit(u);
  return r;
}

Relation Relation::full(Base base) {
  Relation r(std::move(base));
  std::fill(r.rows_.begin(), r.rows_.end(), r.base_->all());
  return r;
}

Relation Relation::from_pairs(Base base, const std::vector<Pair>& pairs) {
  Relation r(std::move(base));
  for (auto [u, v] : pairs) {
    if (u >= r.n() || v >= r.n()) throw PreconditionError("pair outside the element set");
    r.insert(u, v);
  }
  return r;
}

Mask Relation::predecessors(Index v) const {
  Mask m = 0;
  for (std::size_t u = 0; u < rows_.size(); ++u)
    if ((rows_[u] >> v) & 1U) m |= bit(u);
  return m;
}

std::size_t Relation::size() const {
  return std::accumulate(rows_.begin(), rows_.end(), std::size_t{0},
                         [](std::size_t acc, Mask row) { return acc + popcount(row); });
}

bool Relation::has_diagonal() const {
  for (std::size_t u = 0; u < rows_.size(); ++u)
    if ((rows_[u] & bit(u)) == 0) return false;
  return true;
}

Relation Relation::strict_part() const {
  Relation r = *this;
  for (std::size_t u = 0; u < rows_.size(); ++u) r.rows_[u] &= ~bit(u);
  return r;
}

Relation Relation::with_diagonal() const {
  Relation r = *this;
  for (std::size_t u = 0; u < rows_.size(); ++u) r.rows_[u] |= bit(u);
  return r;
}

bool Relation::is_subset_of(const Relation& other) const {
  require_same_base(base_, other.base_, "is_subset_of");
  for (std::size_t u = 0; u < rows_.size(); ++u)
    if ((rows_[u] & ~other.rows_[u]) != 0) return false;
  return true;
}

bool Relation::is_transitive() const {
  for (std::size_t u = 0; u < rows_.size(); ++u) {
    Mask reach = 0;
    for_each_bit(rows_[u], [&](Index v) { reach |= rows_[v]; });
    if ((reach & ~rows_[u]) != 0) return false;
  }
  return true;
}

std::vector<Pair> Relation::pairs() const {
  std::vector<Pair> out;
  for (std::size_t u = 0; u < rows_.size(); ++u)
    for_each_bit(rows_[u], [&](Index v) { out.emplace_back(static_cast<Index>(u), v); });
  return out;
}

Relation& Relation::operator|=(const Relation& other) {
  require_same_base(base_, other.base_, "union");
  for (std::size_t u = 0; u < rows_.size(); ++u) rows_[u] |= other.rows_[u];
  return *this;
}

Relation& Relation::operator&=(const Relation& other) {
  require_same_base(base_, other.base_, "intersection");
  for (std::size_t u = 0; u < rows_.size(); ++u) rows_[u] &= other.rows_[u];
  return *this;
}

Relation& Relation::operator-=(const Relation& other) {
  require_same_base(base_, other.base_, "difference");
  for (std::size_t u = 0; u < rows_.size(); ++u) rows_[u] &= ~other.rows_[u];
  return *this;
}

bool Relation::operator==(const Relation& other) const {
  return same_base(base_, other.base_) && rows_ == other.rows_;
}

std::strong_ordering Relation::operator<=>(const Relation& other) const {
  return rows_ <=> other.rows_;
}

// Warshall's algorithm on successor masks.
Relation transitive_closure(const Relation& r) {
  Relation t = r;
  const std::size_t n = r.n();
  std::vector<Mask> rows(n);
  for (std::size_t u = 0; u < n; ++u) rows[u] = r.successors(static_cast<Index>(u));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t u = 0; u < n; ++u)
      if ((rows[u] >> k) & 1U) rows[u] |= rows[k];
  for (std::size_t u = 0; u < n; ++u)
    for_each_bit(rows[u], [&](Index v) { t.insert(static_cast<Index>(u), v); });
  return t;
}

Relation compose(const Relation& a, const Relation& b) {
  require_same_base(a.base(), b.base(), "compose");
  Relation out(a.base());
  for (std::size_t u = 0; u < a.n(); ++u)
    for_each_bit(a.successors(static_cast<Index>(u)), [&](Index v) {
      for_each_bit(b.successors(v), [&](Index w) { out.insert(static_cast<Index>(u), w); });
    });
  return out;
}

bool is_acyclic(const Relation& r) {
  Relation t = transitive_closure(r);
  for (std::size_t u = 0; u < t.n(); ++u)
    if (t.contains(static_cast<Index>(u), static_cast<Index>(u))) return false;
  return true;
}

Relation opposite(const Relation& r) {
  Relation out(r.base());
  for (auto [u, v] : r.pairs()) out.insert(v, u);
  return out;
}

std::string to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::missing_diagonal: return "missing-diagonal";
    case Axiom::not_transitive: return "not-transitive";
    case Axiom::cyclic: return "cyclic";
  }
  return "unknown";
}

std::variant<Poset, AxiomViolation> validate_poset(const Relation& r) {
  if (!r.has_diagonal()) return AxiomViolation{Axiom::missing_diagonal};
  Relation strict = r.strict_part();
  if (!strict.is_transitive()) return AxiomViolation{Axiom::not_transitive};
  if (!is_acyclic(strict)) return AxiomViolation{Axiom::cyclic};
  return Poset::from_relation(r);
}

std::variant<Preposet, AxiomViolation> validate_preposet(const Relation& r) {
  if (!r.has_diagonal()) return AxiomViolation{Axiom::missing_diagonal};
  if (!r.is_transitive()) return AxiomViolation{Axiom::not_transitive};
  return Preposet::from_relation(r);
}

Poset Poset::from_relation(const Relation& r) {
  if (!r.has_diagonal()) throw PreconditionError("not a poset: missing-diagonal");
  Relation strict = r.strict_part();
  if (!strict.is_transitive()) throw PreconditionError("not a poset: not-transitive");
  // A transitive relation is acyclic iff it is irreflexive.
  if (!is_acyclic(strict)) throw PreconditionError("not a poset: cyclic");
  return Poset(std::move(strict));
}

Poset Poset::from_strict_generators(const Relation& strict) {
  return from_relation(transitive_closure(strict.with_diagonal()));
}

Preposet Preposet::from_relation(const Relation& r) {
  if (!r.has_diagonal()) throw PreconditionError("not a preposet: missing-diagonal");
  if (!r.is_transitive()) throw PreconditionError("not a preposet: not-transitive");
  return Preposet(r);
}

Preposet Preposet::closure_of(const Relation& r) {
  return Preposet(transitive_closure(r.with_diagonal()));
}

bool Preposet::is_poset() const {
  for (std::size_t u = 0; u < n(); ++u)
    if ((pairs_.successors(static_cast<Index>(u)) & pairs_.predecessors(static_cast<Index>(u))) !=
        bit(u))
      return false;
  return true;
}

Relation cover_relation(const Poset& p) {
  const Relation& strict = p.strict();
  return strict - compose(strict, strict);
}

std::string to_string(Comparability c) {
  switch (c) {
    case Comparability::equal: return "equal";
    case Comparability::strictly_below: return "strictly-below";
    case Comparability::strictly_above: return "strictly-above";
    case Comparability::incomparable: return "incomparable";
  }
  return "unknown";
}

Comparability comparability(const Poset& p, Index u, Index v) {
  if (u >= p.n() || v >= p.n()) throw PreconditionError("comparability: element outside the base");
  if (u == v) return Comparability::equal;
  if (p.less(u, v)) return Comparability::strictly_below;
  if (p.less(v, u)) return Comparability::strictly_above;
  return Comparability::incomparable;
}

PreposetQuotient preposet_quotient(const Preposet& q) {
  const Relation& rel = q.relation();
  const std::size_t n = q.n();
  std::vector<std::size_t> class_of(n, n);
  std::vector<std::vector<Index>> classes;
  for (std::size_t u = 0; u < n; ++u) {
    if (class_of[u] != n) continue;
    Mask same = rel.successors(static_cast<Index>(u)) & rel.predecessors(static_cast<Index>(u));
    std::vector<Index> members;
    for_each_bit(same, [&](Index v) {
      members.push_back(v);
      class_of[v] = classes.size();
    });
    classes.push_back(std::move(members));
  }

  std::vector<std::string> names;
  names.reserve(classes.size());
  for (const auto& members : classes) {
    std::string name = "{";
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i) name += ',';
      name += q.base()->name(members[i]);
    }
    names.push_back(name + "}");
  }
  // Class names sort in the same order as their least members only when
  // identifiers do; map through the new base explicitly.
  Base class_base = make_base(names);
  std::vector<Index> class_index(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) class_index[c] = class_base->index_of(names[c]);

  Relation order(class_base);
  for (auto [l, u] : rel.pairs())
    order.insert(class_index[class_of[l]], class_index[class_of[u]]);
  return PreposetQuotient{std::move(classes), std::move(class_of), Poset::from_relation(order)};
}

Preposet expand_quotient(const Base& base, const PreposetQuotient& quotient) {
  const Base& class_base = quotient.order.base();
  auto index_of_class = [&](std::size_t c) {
    const auto& members = quotient.classes[c];
    std::string name = "{";
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i) name += ',';
      name += base->name(members[i]);
    }
    return class_base->index_of(name + "}");
  };
  std::vector<Index> class_index(quotient.classes.size());
  for (std::size_t c = 0; c < class_index.size(); ++c) class_index[c] = index_of_class(c);

  Relation r(base);
  for (std::size_t l = 0; l < base->size(); ++l)
    for (std::size_t u = 0; u < base->size(); ++u)
      if (quotient.order.leq(class_index[quotient.class_of[l]], class_index[quotient.class_of[u]]))
        r.insert(static_cast<Index>(l), static_cast<Index>(u));
  return Preposet::from_relation(r);
}

}  // namespace posetlab
