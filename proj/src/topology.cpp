#include "posetlab/topology.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace posetlab {

bool family_less(Mask a, Mask b) {
  std::size_t ca = popcount(a), cb = popcount(b);
  if (ca != cb) return ca < cb;
  return lex_less(a, b);
}

SetFamily::SetFamily(Base base) : base_(std::move(base)) {
  if (!base_) throw PreconditionError("set family needs an element set");
}

SetFamily::SetFamily(Base base, std::vector<Mask> sets) : base_(std::move(base)), sets_(std::move(sets)) {
  if (!base_) throw PreconditionError("set family needs an element set");
  for (Mask m : sets_)
    if ((m & ~base_->all()) != 0) throw PreconditionError("set family member outside the base");
  std::sort(sets_.begin(), sets_.end(), family_less);
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

bool SetFamily::contains(Mask set) const {
  return std::binary_search(sets_.begin(), sets_.end(), set, family_less);
}

bool SetFamily::is_subfamily_of(const SetFamily& other) const {
  return std::includes(other.sets_.begin(), other.sets_.end(), sets_.begin(), sets_.end(),
                       family_less);
}

SetFamily down_sets(const Relation& t, std::size_t cap) {
  // Down sets are exactly the unions of principal ideals of tr(T ∪ Δ).
  Relation closure = transitive_closure(t.with_diagonal());
  const std::size_t n = t.n();
  std::vector<Mask> ideal(n);
  for (std::size_t v = 0; v < n; ++v) ideal[v] = closure.predecessors(static_cast<Index>(v));

  std::unordered_set<Mask> seen{0};
  std::vector<Mask> pending{0};
  while (!pending.empty()) {
    Mask d = pending.back();
    pending.pop_back();
    for_each_bit(t.base()->all() & ~d, [&](Index v) {
      Mask next = d | ideal[v];
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw PreconditionError("down_sets: family exceeds " + std::to_string(cap) + " members");
        pending.push_back(next);
      }
    });
  }
  return SetFamily(t.base(), std::vector<Mask>(seen.begin(), seen.end()));
}

bool is_topology(const SetFamily& family) {
  if (!family.contains(0) || !family.contains(family.base()->all())) return false;
  std::unordered_set<Mask> members(family.begin(), family.end());
  for (auto a = family.begin(); a != family.end(); ++a)
    for (auto b = std::next(a); b != family.end(); ++b)
      if (!members.count(*a & *b) || !members.count(*a | *b)) return false;
  return true;
}

Preposet specialization_preposet(const SetFamily& family) {
  if (!is_topology(family)) throw PreconditionError("specialization_preposet requires a topology");
  const std::size_t n = family.base()->size();
  Relation r = Relation::full(family.base());
  for (Mask d : family)
    for_each_bit(d, [&](Index v) {
      // (u, v) survives only if u ∈ D for every D containing v.
      for (std::size_t u = 0; u < n; ++u)
        if ((d & bit(u)) == 0) r.erase(static_cast<Index>(u), v);
    });
  return Preposet::from_relation(r);
}

bool distinguishes_points(const SetFamily& family) {
  const std::size_t n = family.base()->size();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      Mask pair = bit(u) | bit(v);
      bool separated = std::any_of(family.begin(), family.end(), [&](Mask d) {
        Mask hit = d & pair;
        return hit != 0 && hit != pair;
      });
      if (!separated) return false;
    }
  return true;
}

SetFamily chain_of(const Enumeration& pi) {
  std::vector<Mask> sets;
  for (std::size_t k = 0; k <= pi.size(); ++k) sets.push_back(pi.prefix(k));
  return SetFamily(pi.base(), std::move(sets));
}

EnumSet extensions_via_chains(const Poset& p) {
  SetFamily family = down_sets(p.relation());
  std::vector<Enumeration> members;
  std::unordered_set<Mask> covered;
  for (Enumeration pi : all_enumerations(p.base())) {
    SetFamily chain = chain_of(pi);
    if (!chain.is_subfamily_of(family)) continue;
    covered.insert(chain.begin(), chain.end());
    members.push_back(std::move(pi));
  }
  if (covered.size() != family.size())
    throw std::logic_error("maximal chains of linear extensions do not cover the down sets");
  return EnumSet(p.base(), std::move(members));
}

namespace {

class ChainCounter {
 public:
  explicit ChainCounter(const Poset& p) : all_(p.base()->all()), preds_(p.n()) {
    for (std::size_t u = 0; u < p.n(); ++u) preds_[u] = p.strict().predecessors(static_cast<Index>(u));
  }

  // Maximal chains from the down set d up to N.
  const mpz_class& count(Mask d) {
    if (auto it = memo_.find(d); it != memo_.end()) return it->second;
    mpz_class total = 0;
    if (d == all_) {
      total = 1;
    } else {
      for_each_bit(all_ & ~d, [&](Index u) {
        if ((preds_[u] & ~d) == 0) total += count(d | bit(u));
      });
    }
    return memo_.emplace(d, std::move(total)).first->second;
  }

  std::size_t states() const { return memo_.size(); }

 private:
  Mask all_;
  std::vector<Mask> preds_;
  std::unordered_map<Mask, mpz_class> memo_;
};

}  // namespace

ExtensionCount count_extensions_detailed(const Poset& p) {
  ChainCounter counter(p);
  mpz_class count = counter.count(0);
  return ExtensionCount{std::move(count), counter.states()};
}

mpz_class count_extensions(const Poset& p) { return count_extensions_detailed(p).count; }

std::map<Index, Mask> join_irreducibles(const Poset& p) {
  std::map<Index, Mask> out;
  Relation full = p.relation();
  for (std::size_t v = 0; v < p.n(); ++v) out.emplace(static_cast<Index>(v), full.predecessors(static_cast<Index>(v)));
  return out;
}

std::vector<Mask> union_irreducible_members(const SetFamily& family) {
  std::vector<Mask> out;
  for (Mask d : family) {
    if (d == 0) continue;
    Mask below = 0;
    for (Mask e : family)
      if (e != d && (e & ~d) == 0) below |= e;
    if (below != d) out.push_back(d);
  }
  return out;
}

namespace {

std::size_t largest_antichain(const std::vector<Mask>& incomparable, Mask candidates, std::size_t size,
                              std::size_t best) {
  if (candidates == 0) return std::max(best, size);
  if (size + popcount(candidates) <= best) return best;
  Index v = static_cast<Index>(std::countr_zero(candidates));
  Mask rest = candidates & ~bit(v);
  best = largest_antichain(incomparable, rest & incomparable[v], size + 1, best);
  return largest_antichain(incomparable, rest, size, best);
}

}  // namespace

std::size_t width(const Poset& p) {
  const std::size_t n = p.n();
  std::vector<Mask> incomparable(n, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (p.incomparable(static_cast<Index>(u), static_cast<Index>(v))) incomparable[u] |= bit(v);
  return largest_antichain(incomparable, p.base()->all(), 0, 0);
}

}  // namespace posetlab
