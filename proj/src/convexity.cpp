#include "posetlab/convexity.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace posetlab {

namespace {

void require_non_empty(const EnumSet& s, const char* what) {
  if (s.empty()) throw PreconditionError(std::string(what) + " requires a non-empty set");
}

}  // namespace

std::vector<EdgeLabel> inversions_within(const EnumSet& s) {
  require_non_empty(s, "inversions_within");
  std::set<EdgeLabel> labels;
  for (const Enumeration& pi : s)
    for (std::size_t i = 1; i < pi.size(); ++i)
      if (s.contains(swap_at(pi, i))) labels.emplace(pi.at(i), pi.at(i + 1));
  return {labels.begin(), labels.end()};
}

Relation covering_of(const EnumSet& s) {
  require_non_empty(s, "covering_of");
  Relation cov(s.base());
  for (const Enumeration& pi : s)
    for (std::size_t i = 1; i < pi.size(); ++i)
      if (!s.contains(swap_at(pi, i))) cov.insert(pi.at(i), pi.at(i + 1));
  return cov;
}

std::optional<ViolatingTriple> find_violating_triple(const EnumSet& s) {
  const auto& members = s.members();
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      const Enumeration& pi = members[a];
      const Enumeration& sigma = members[b];
      // Breadth-first over the interval: every step removes one inversion
      // relative to sigma, so each visited node lies on a geodesic.
      std::set<Enumeration> seen{pi};
      std::deque<Enumeration> frontier{pi};
      while (!frontier.empty()) {
        Enumeration gamma = std::move(frontier.front());
        frontier.pop_front();
        if (!s.contains(gamma)) return ViolatingTriple{pi, gamma, sigma};
        for (std::size_t i = 1; i < gamma.size(); ++i) {
          if (sigma.before(gamma.at(i), gamma.at(i + 1))) continue;
          Enumeration next = swap_at(gamma, i);
          if (seen.insert(next).second) frontier.push_back(std::move(next));
        }
      }
    }
  return std::nullopt;
}

ConvexityReport is_geodetically_convex(const EnumSet& s) {
  ConvexityReport report;
  if (s.empty()) {
    report.convex = true;
    return report;
  }
  if (enumset_closure(s) == s) {
    report.convex = true;
    report.poset = reconstruct_poset(s);
    return report;
  }
  report.violation = find_violating_triple(s);
  if (!report.violation)
    throw std::logic_error("closure test and geodesic search disagree on convexity");
  return report;
}

Poset reconstruct_poset(const EnumSet& s) {
  require_non_empty(s, "reconstruct_poset");
  Relation cov = covering_of(s);
  if (!is_acyclic(cov)) throw PreconditionError("reconstruct_poset: set is not geodetically convex");
  Poset p = Poset::from_strict_generators(cov);
  if (!(linear_extensions(p) == s))
    throw PreconditionError("reconstruct_poset: set is not geodetically convex");
  return p;
}

bool trichotomy_check(const EnumSet& s) {
  require_non_empty(s, "trichotomy_check");
  Relation reach = transitive_closure(covering_of(s));
  Relation inv(s.base());
  for (const EdgeLabel& label : inversions_within(s)) inv.insert(label.first, label.second);
  const std::size_t n = s.base()->size();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      auto a = static_cast<Index>(u), b = static_cast<Index>(v);
      int hits = int(inv.contains(a, b)) + int(reach.contains(a, b)) + int(reach.contains(b, a));
      if (hits != 1) return false;
    }
  return true;
}

int height(const EnumSet& s) {
  if (s.empty()) return -1;
  return static_cast<int>(inversions_within(s).size());
}

std::size_t diameter(const EnumSet& s) {
  require_non_empty(s, "diameter");
  std::size_t best = 0;
  const auto& members = s.members();
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b)
      best = std::max(best, distance(members[a], members[b]));
  return best;
}

namespace {

// Each linear extension is summarized by the incomparable ordered pairs it
// realizes; a family of extensions is a realizer iff together they realize
// every such pair.
class RealizerSearch {
 public:
  explicit RealizerSearch(const Poset& p) {
    const std::size_t n = p.n();
    std::vector<std::vector<int>> slot(n, std::vector<int>(n, -1));
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (p.incomparable(static_cast<Index>(u), static_cast<Index>(v))) slot[u][v] = bits_++;
    words_ = (bits_ + 63) / 64;

    for_each_linear_extension(p, [&](const std::vector<Index>& order) {
      std::vector<Mask> mask(words_, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (int b = slot[order[i]][order[j]]; b >= 0) mask[b / 64] |= bit(b % 64);
      // Extensions realizing the same pairs are interchangeable.
      if (seen_.insert(mask).second) {
        masks_.push_back(std::move(mask));
        extensions_.emplace_back(p.base(), order);
      }
    });
  }

  std::optional<std::vector<std::size_t>> search(std::size_t k) {
    chosen_.clear();
    std::vector<Mask> covered(words_, 0);
    if (bits_ == 0) {
      if (k >= 1 && !extensions_.empty()) return std::vector<std::size_t>{0};
      return std::nullopt;
    }
    if (extend(covered, k)) return chosen_;
    return std::nullopt;
  }

  const Enumeration& extension(std::size_t i) const { return extensions_[i]; }

 private:
  int first_uncovered(const std::vector<Mask>& covered) const {
    for (std::size_t w = 0; w < words_; ++w) {
      Mask live = ~covered[w];
      if (w + 1 == words_ && bits_ % 64 != 0) live &= low_bits(bits_ % 64);
      if (live != 0) return static_cast<int>(w * 64 + std::countr_zero(live));
    }
    return -1;
  }

  // Branches only on extensions realizing the lowest unrealized pair, which
  // every completion must contain.
  bool extend(const std::vector<Mask>& covered, std::size_t remaining) {
    int b = first_uncovered(covered);
    if (b < 0) return true;
    if (remaining == 0) return false;
    for (std::size_t i = 0; i < masks_.size(); ++i) {
      if ((masks_[i][b / 64] & bit(b % 64)) == 0) continue;
      std::vector<Mask> next = covered;
      for (std::size_t w = 0; w < words_; ++w) next[w] |= masks_[i][w];
      chosen_.push_back(i);
      if (extend(next, remaining - 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  int bits_ = 0;
  std::size_t words_ = 0;
  std::vector<std::vector<Mask>> masks_;
  std::set<std::vector<Mask>> seen_;
  std::vector<Enumeration> extensions_;
  std::vector<std::size_t> chosen_;
};

}  // namespace

std::optional<std::vector<Enumeration>> find_realizer(const Poset& p, std::size_t max_k) {
  if (max_k < 1) throw PreconditionError("poset_dimension: max_k must be at least 1");
  RealizerSearch search(p);
  for (std::size_t k = 1; k <= max_k; ++k) {
    auto picked = search.search(k);
    if (!picked) continue;
    std::vector<Enumeration> realizer;
    for (std::size_t i : *picked) realizer.push_back(search.extension(i));
    if (!(upper_galois(EnumSet(p.base(), realizer)) == p.relation()))
      throw std::logic_error("realizer search produced a family that does not intersect to P");
    return realizer;
  }
  return std::nullopt;
}

std::optional<std::size_t> poset_dimension(const Poset& p, std::size_t max_k) {
  auto realizer = find_realizer(p, max_k);
  if (!realizer) return std::nullopt;
  return realizer->size();
}

Poset example_dim3() {
  Base base = make_base({"a", "b", "c", "d", "e", "f"});
  auto at = [&](const char* name) { return base->index_of(name); };
  Relation r = Relation::diagonal(base);
  for (auto [u, v] : {std::pair{"a", "e"}, {"a", "f"}, {"b", "d"}, {"b", "f"}, {"c", "d"}, {"c", "e"}})
    r.insert(at(u), at(v));
  return Poset::from_relation(r);
}

IntervalCode::IntervalCode(Enumeration reference, Relation lower, Relation upper)
    : reference_(std::move(reference)), lower_(std::move(lower)), upper_(std::move(upper)) {
  require_same_base(reference_.base(), lower_.base(), "interval code");
  require_same_base(reference_.base(), upper_.base(), "interval code");
  Relation strict_reference = toset_of(reference_).strict_part();
  if (!lower_.is_subset_of(upper_)) throw PreconditionError("interval code needs lower ⊆ upper");
  if (!upper_.is_subset_of(strict_reference))
    throw PreconditionError("interval code pairs must be strict pairs of the reference toset");
}

namespace {

// T_D∖T_γ restricted to strict pairs.
Relation flipped_pairs(const Relation& strict_reference, const Enumeration& gamma) {
  Relation out(strict_reference.base());
  for (auto [u, v] : strict_reference.pairs())
    if (gamma.before(v, u)) out.insert(u, v);
  return out;
}

}  // namespace

EnumSet interval_extensions(const IntervalCode& code) {
  Relation strict_reference = toset_of(code.reference()).strict_part();
  std::vector<Enumeration> members;
  for (Enumeration gamma : all_enumerations(code.reference().base())) {
    Relation flipped = flipped_pairs(strict_reference, gamma);
    if (code.lower().is_subset_of(flipped) && flipped.is_subset_of(code.upper()))
      members.push_back(std::move(gamma));
  }
  return EnumSet(code.reference().base(), std::move(members));
}

IntervalCode encode_interval(const Poset& p, const Enumeration& reference) {
  require_same_base(p.base(), reference.base(), "encode_interval");
  Relation t = toset_of(reference);
  Relation lower = (t & opposite(p.relation())).strict_part();
  Relation upper = t - p.relation();
  return IntervalCode(reference, std::move(lower), std::move(upper));
}

IntervalCode encode_interval_from_extensions(const EnumSet& s, const Enumeration& reference) {
  require_non_empty(s, "encode_interval_from_extensions");
  require_same_base(s.base(), reference.base(), "encode_interval_from_extensions");
  Relation strict_reference = toset_of(reference).strict_part();
  Relation lower = strict_reference;
  Relation upper(s.base());
  for (const Enumeration& gamma : s) {
    Relation flipped = flipped_pairs(strict_reference, gamma);
    lower &= flipped;
    upper |= flipped;
  }
  return IntervalCode(reference, std::move(lower), std::move(upper));
}

}  // namespace posetlab
