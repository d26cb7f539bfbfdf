#include "posetlab/enumerations.hpp"

#include <algorithm>
#include <numeric>

namespace posetlab {

Enumeration::Enumeration(Base base, std::vector<Index> order)
    : base_(std::move(base)), order_(std::move(order)) {
  if (!base_) throw PreconditionError("enumeration needs an element set");
  const std::size_t n = base_->size();
  if (order_.size() != n) throw PreconditionError("enumeration must list every element exactly once");
  rank_.assign(n, static_cast<Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    Index u = order_[i];
    if (u >= n || rank_[u] != n) throw PreconditionError("enumeration must list every element exactly once");
    rank_[u] = static_cast<Index>(i);
  }
}

Enumeration Enumeration::from_names(Base base, const std::vector<std::string>& names) {
  std::vector<Index> order;
  order.reserve(names.size());
  for (const auto& name : names) order.push_back(base->index_of(name));
  return Enumeration(std::move(base), std::move(order));
}

Enumeration Enumeration::identity(Base base) {
  std::vector<Index> order(base->size());
  std::iota(order.begin(), order.end(), Index{0});
  return Enumeration(std::move(base), std::move(order));
}

Mask Enumeration::prefix(std::size_t length) const {
  Mask m = 0;
  for (std::size_t i = 0; i < length && i < order_.size(); ++i) m |= bit(order_[i]);
  return m;
}

Enumeration Enumeration::reversed() const {
  return Enumeration(base_, std::vector<Index>(order_.rbegin(), order_.rend()));
}

std::string Enumeration::to_string() const {
  std::string out = "|";
  for (Index u : order_) out += base_->name(u) + "|";
  return out;
}

EdgeLabel::EdgeLabel(Index u, Index v) : first(std::min(u, v)), second(std::max(u, v)) {
  if (u == v) throw PreconditionError("edge label needs two distinct elements");
}

std::string EdgeLabel::to_string(const ElementSet& base) const {
  return "{" + base.name(first) + "," + base.name(second) + "}";
}

EnumerationRange::iterator::iterator(Base base, bool done) : base_(std::move(base)), done_(done) {
  if (!done_) {
    order_.resize(base_->size());
    std::iota(order_.begin(), order_.end(), Index{0});
  }
}

EnumerationRange::iterator& EnumerationRange::iterator::operator++() {
  if (!std::next_permutation(order_.begin(), order_.end())) done_ = true;
  return *this;
}

EnumerationRange all_enumerations(Base base) { return EnumerationRange(std::move(base)); }

std::size_t factorial(std::size_t n) {
  if (n > 20) throw PreconditionError("factorial overflows 64 bits above 20");
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

Relation toset_of(const Enumeration& pi) {
  Relation t(pi.base());
  const std::size_t n = pi.size();
  Mask later = 0;
  for (std::size_t i = n; i-- > 0;) {
    later |= bit(pi.order()[i]);
    for_each_bit(later, [&](Index v) { t.insert(pi.order()[i], v); });
  }
  return t;
}

namespace {

void require_comparable(const Enumeration& a, const Enumeration& b, const char* what) {
  require_same_base(a.base(), b.base(), what);
}

}  // namespace

std::vector<EdgeLabel> inversions_between(const Enumeration& pi, const Enumeration& sigma) {
  require_comparable(pi, sigma, "inversions_between");
  std::vector<EdgeLabel> out;
  const std::size_t n = pi.size();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      auto a = static_cast<Index>(u), b = static_cast<Index>(v);
      if (pi.before(a, b) != sigma.before(a, b)) out.emplace_back(a, b);
    }
  return out;
}

std::size_t distance(const Enumeration& pi, const Enumeration& sigma) {
  require_comparable(pi, sigma, "distance");
  std::size_t d = 0;
  const std::size_t n = pi.size();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      auto a = static_cast<Index>(u), b = static_cast<Index>(v);
      d += pi.before(a, b) != sigma.before(a, b);
    }
  return d;
}

std::optional<EdgeLabel> adjacency(const Enumeration& pi, const Enumeration& sigma) {
  require_comparable(pi, sigma, "adjacency");
  const auto a = pi.order();
  const auto b = sigma.order();
  std::size_t i = 0;
  while (i < a.size() && a[i] == b[i]) ++i;
  if (i + 1 >= a.size() || a[i] != b[i + 1] || a[i + 1] != b[i]) return std::nullopt;
  if (!std::equal(a.begin() + static_cast<std::ptrdiff_t>(i + 2), a.end(),
                  b.begin() + static_cast<std::ptrdiff_t>(i + 2)))
    return std::nullopt;
  return EdgeLabel(a[i], a[i + 1]);
}

Enumeration swap_at(const Enumeration& pi, std::size_t i) {
  if (i < 1 || i >= pi.size()) throw PreconditionError("swap_at: position must satisfy 1 <= i < n");
  std::vector<Index> order(pi.order().begin(), pi.order().end());
  std::swap(order[i - 1], order[i]);
  return Enumeration(pi.base(), std::move(order));
}

std::vector<Enumeration> neighbours(const Enumeration& pi) {
  std::vector<Enumeration> out;
  out.reserve(pi.size() > 0 ? pi.size() - 1 : 0);
  for (std::size_t i = 1; i < pi.size(); ++i) out.push_back(swap_at(pi, i));
  return out;
}

bool is_between(const Enumeration& pi, const Enumeration& gamma, const Enumeration& sigma) {
  return distance(pi, gamma) + distance(gamma, sigma) == distance(pi, sigma);
}

bool is_between_by_tosets(const Enumeration& pi, const Enumeration& gamma,
                          const Enumeration& sigma) {
  return (toset_of(pi) & toset_of(sigma)).is_subset_of(toset_of(gamma));
}

std::vector<Enumeration> geodesic(const Enumeration& pi, const Enumeration& sigma) {
  require_comparable(pi, sigma, "geodesic");
  std::vector<Enumeration> walk{pi};
  while (!(walk.back() == sigma)) {
    const Enumeration& current = walk.back();
    std::size_t i = 1;
    while (sigma.before(current.at(i), current.at(i + 1))) ++i;
    walk.push_back(swap_at(current, i));
  }
  return walk;
}

Enumeration transposition_automorphism(const EdgeLabel& label, const Enumeration& pi) {
  std::vector<Index> order(pi.order().begin(), pi.order().end());
  for (Index& u : order) {
    if (u == label.first)
      u = label.second;
    else if (u == label.second)
      u = label.first;
  }
  return Enumeration(pi.base(), std::move(order));
}

EnumSet::EnumSet(Base base) : base_(std::move(base)) {
  if (!base_) throw PreconditionError("enumeration set needs an element set");
}

EnumSet::EnumSet(Base base, std::vector<Enumeration> members)
    : base_(std::move(base)), members_(std::move(members)) {
  if (!base_) throw PreconditionError("enumeration set needs an element set");
  for (const auto& pi : members_) require_same_base(base_, pi.base(), "enumeration set member");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

EnumSet EnumSet::all(Base base) {
  std::vector<Enumeration> members;
  members.reserve(factorial(base->size()));
  for (Enumeration pi : all_enumerations(base)) members.push_back(std::move(pi));
  EnumSet out(std::move(base));
  out.members_ = std::move(members);
  return out;
}

bool EnumSet::contains(const Enumeration& pi) const {
  return std::binary_search(members_.begin(), members_.end(), pi);
}

bool EnumSet::is_subset_of(const EnumSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

EnumSet set_union(const EnumSet& a, const EnumSet& b) {
  require_same_base(a.base(), b.base(), "set_union");
  std::vector<Enumeration> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return EnumSet(a.base(), std::move(out));
}

EnumSet set_intersection(const EnumSet& a, const EnumSet& b) {
  require_same_base(a.base(), b.base(), "set_intersection");
  std::vector<Enumeration> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return EnumSet(a.base(), std::move(out));
}

EnumSet set_difference(const EnumSet& a, const EnumSet& b) {
  require_same_base(a.base(), b.base(), "set_difference");
  std::vector<Enumeration> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return EnumSet(a.base(), std::move(out));
}

std::pair<EnumSet, EnumSet> edge_bipartition(const Enumeration& pi, const Enumeration& sigma) {
  if (!adjacency(pi, sigma)) throw PreconditionError("edge_bipartition: enumerations are not adjacent");
  std::vector<Enumeration> near_pi, near_sigma;
  for (Enumeration gamma : all_enumerations(pi.base())) {
    // Adjacent endpoints differ by one in distance to every node.
    if (distance(gamma, pi) < distance(gamma, sigma))
      near_pi.push_back(std::move(gamma));
    else
      near_sigma.push_back(std::move(gamma));
  }
  return {EnumSet(pi.base(), std::move(near_pi)), EnumSet(pi.base(), std::move(near_sigma))};
}

}  // namespace posetlab
