#include "posetlab/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <regex>

namespace posetlab {

RationalVector::RationalVector(Base base) : base_(std::move(base)) {
  if (!base_) throw PreconditionError("vector needs an element set");
  coords_.assign(base_->size(), mpq_class(0));
}

RationalVector::RationalVector(Base base, std::vector<mpq_class> coords)
    : base_(std::move(base)), coords_(std::move(coords)) {
  if (!base_) throw PreconditionError("vector needs an element set");
  if (coords_.size() != base_->size()) throw PreconditionError("vector needs one coordinate per element");
  for (auto& c : coords_) c.canonicalize();
}

RationalVector RationalVector::incidence(Base base, Mask subset) {
  RationalVector x(std::move(base));
  for_each_bit(subset, [&](Index u) { x.coords_.at(u) = 1; });
  return x;
}

RationalVector RationalVector::rank_vector(const Enumeration& pi) {
  RationalVector x(pi.base());
  for (std::size_t u = 0; u < pi.size(); ++u)
    x.coords_[u] = static_cast<unsigned long>(pi.position_of(static_cast<Index>(u)));
  return x;
}

bool RationalVector::has_distinct_coordinates() const {
  std::vector<mpq_class> sorted = coords_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

RationalVector& RationalVector::operator+=(const RationalVector& other) {
  require_same_base(base_, other.base_, "vector sum");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

RationalVector& RationalVector::operator-=(const RationalVector& other) {
  require_same_base(base_, other.base_, "vector difference");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

RationalVector& RationalVector::operator*=(const mpq_class& factor) {
  for (auto& c : coords_) c *= factor;
  return *this;
}

BraidCone cone_of(const Relation& t) { return BraidCone(Preposet::closure_of(t)); }

bool membership(const BraidCone& cone, const RationalVector& x) {
  require_same_base(cone.base(), x.base(), "membership");
  for (auto [u, v] : cone.constraints().relation().pairs())
    if (x[u] > x[v]) return false;
  return true;
}

bool cone_includes(const BraidCone& outer, const BraidCone& inner) {
  return outer.constraints().relation().is_subset_of(inner.constraints().relation());
}

EnumSet chamber_cover(const Poset& p) {
  Relation constraints = p.relation();
  std::vector<Enumeration> members;
  for (Enumeration pi : all_enumerations(p.base()))
    if (constraints.is_subset_of(toset_of(pi))) members.push_back(std::move(pi));
  return EnumSet(p.base(), std::move(members));
}

Enumeration chamber_of(const RationalVector& x) {
  if (!x.has_distinct_coordinates()) throw PreconditionError("chamber_of requires distinct coordinates");
  std::vector<Index> order(x.size());
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(), [&](Index a, Index b) { return x[a] < x[b]; });
  return Enumeration(x.base(), std::move(order));
}

bool is_full_dimensional(const Preposet& t) {
  if (!t.is_poset()) return false;
  // Any linear extension's rank vector is an interior witness.
  Poset p = Poset::from_relation(t.relation());
  Enumeration witness = [&] {
    std::optional<Enumeration> first;
    for_each_linear_extension(p, [&](const std::vector<Index>& order) {
      if (!first) first.emplace(p.base(), order);
    });
    return *first;
  }();
  RationalVector r = RationalVector::rank_vector(witness);
  return membership(BraidCone(t), r) && r.has_distinct_coordinates();
}

SetFamily cone_to_topology(const BraidCone& cone) {
  const std::size_t n = cone.base()->size();
  if (n > 24) throw PreconditionError("cone_to_topology scans all subsets; refused above 24 elements");
  std::vector<Mask> sets;
  const Mask all = cone.base()->all();
  for (Mask d = 0;; ++d) {
    RationalVector minus = RationalVector::incidence(cone.base(), d);
    minus *= mpq_class(-1);
    if (membership(cone, minus)) sets.push_back(d);
    if (d == all) break;
  }
  return SetFamily(cone.base(), std::move(sets));
}

RationalVector ConicTerm::vector(const Base& base) const {
  RationalVector g = RationalVector::incidence(base, set);
  if (generator == Generator::negated_down_set) g *= mpq_class(-1);
  return g;
}

namespace {

// Classes of T ∩ T^op listed consonantly with T, lexicographically least
// such listing.
std::vector<Mask> consonant_classes(const Preposet& t) {
  PreposetQuotient q = preposet_quotient(t);
  std::vector<Mask> class_sets;
  for (const auto& members : q.classes) {
    Mask m = 0;
    for (Index u : members) m |= bit(u);
    class_sets.push_back(m);
  }
  std::vector<Mask> ordered;
  const Relation& rel = t.relation();
  Mask placed = 0;
  while (ordered.size() < class_sets.size()) {
    for (Mask cls : class_sets) {
      if ((cls & placed) != 0) continue;
      Index rep = static_cast<Index>(std::countr_zero(cls));
      if ((rel.predecessors(rep) & ~placed & ~cls) != 0) continue;
      ordered.push_back(cls);
      placed |= cls;
      break;
    }
  }
  return ordered;
}

}  // namespace

std::vector<ConicTerm> conic_decomposition(const RationalVector& x, const Preposet& t) {
  require_same_base(x.base(), t.base(), "conic_decomposition");
  if (!membership(BraidCone(t), x)) throw PreconditionError("conic_decomposition: vector outside the cone");

  std::vector<Mask> classes = consonant_classes(t);
  // Stable sort keeps the consonant order among classes sharing a value.
  std::stable_sort(classes.begin(), classes.end(), [&](Mask a, Mask b) {
    return x[static_cast<Index>(std::countr_zero(a))] < x[static_cast<Index>(std::countr_zero(b))];
  });
  auto value = [&](std::size_t i) -> const mpq_class& {
    return x[static_cast<Index>(std::countr_zero(classes[i]))];
  };

  std::vector<ConicTerm> terms;
  const std::size_t m = classes.size();
  if (value(m - 1) != 0)
    terms.push_back({ConicTerm::Generator::all_ones, x.base()->all(), value(m - 1)});
  Mask prefix = 0;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    prefix |= classes[i];
    mpq_class gap = value(i + 1) - value(i);
    if (gap != 0) terms.push_back({ConicTerm::Generator::negated_down_set, prefix, gap});
  }
  return terms;
}

RationalVector evaluate(const Base& base, const std::vector<ConicTerm>& terms) {
  RationalVector x(base);
  for (const auto& term : terms) x += term.coefficient * term.vector(base);
  return x;
}

RationalVector sample_cone_member(const Preposet& t, std::mt19937_64& rng, const SampleOptions& options) {
  std::vector<Mask> classes;
  {
    PreposetQuotient q = preposet_quotient(t);
    for (const auto& members : q.classes) {
      Mask m = 0;
      for (Index u : members) m |= bit(u);
      classes.push_back(m);
    }
  }
  std::uniform_int_distribution<long> term(1, options.max_term);
  std::bernoulli_distribution tie(options.tie_probability);
  std::bernoulli_distribution negative(0.5);
  auto random_rational = [&] {
    long num = term(rng);
    long den = term(rng);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  };

  // Random consonant listing of the classes.
  const Relation& rel = t.relation();
  std::vector<Mask> order;
  Mask placed = 0;
  while (order.size() < classes.size()) {
    std::vector<Mask> ready;
    for (Mask cls : classes) {
      if ((cls & placed) != 0) continue;
      Index rep = static_cast<Index>(std::countr_zero(cls));
      if ((rel.predecessors(rep) & ~placed & ~cls) == 0) ready.push_back(cls);
    }
    std::uniform_int_distribution<std::size_t> pick(0, ready.size() - 1);
    Mask next = ready[pick(rng)];
    order.push_back(next);
    placed |= next;
  }

  mpq_class shift = random_rational();
  if (negative(rng)) shift = -shift;
  std::vector<ConicTerm> terms{{ConicTerm::Generator::all_ones, t.base()->all(), shift}};
  Mask prefix = 0;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    prefix |= order[i];
    if (tie(rng)) continue;
    terms.push_back({ConicTerm::Generator::negated_down_set, prefix, random_rational()});
  }
  return evaluate(t.base(), terms);
}

mpq_class extension_fraction(const Poset& p) {
  mpz_class total = 1;
  for (unsigned long k = 2; k <= p.n(); ++k) total *= k;
  mpq_class fraction(count_extensions(p), total);
  fraction.canonicalize();
  return fraction;
}

std::string to_string(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

mpq_class parse_rational(const std::string& text) {
  static const std::regex pattern(R"(^\s*([+-]?)(\d+)(?:\s*/\s*(\d+))?\s*$)");
  std::smatch match;
  if (!std::regex_match(text, match, pattern)) throw PreconditionError("malformed rational '" + text + "'");
  mpz_class num(match[2].str());
  if (match[1].str() == "-") num = -num;
  mpz_class den = match[3].matched ? mpz_class(match[3].str()) : mpz_class(1);
  if (den == 0) throw PreconditionError("rational with zero denominator '" + text + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace posetlab
