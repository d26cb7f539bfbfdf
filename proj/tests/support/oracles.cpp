#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace oracle {

Base letters(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return make_base(names);
}

Relation rel(const Base& base, std::initializer_list<std::pair<const char*, const char*>> pairs,
             bool reflexive) {
  Relation r = reflexive ? Relation::diagonal(base) : Relation(base);
  for (auto [u, v] : pairs) r.insert(base->index_of(u), base->index_of(v));
  return r;
}

Enumeration enu(const Base& base, const std::string& letters_in_order) {
  std::vector<std::string> names;
  for (char c : letters_in_order) names.push_back(std::string(1, c));
  return Enumeration::from_names(base, names);
}

Relation relation_from_code(const Base& base, std::uint64_t code) {
  const std::size_t n = base->size();
  Relation r(base);
  for (std::size_t cell = 0; cell < n * n; ++cell)
    if ((code >> cell) & 1U) r.insert(static_cast<Index>(cell / n), static_cast<Index>(cell % n));
  return r;
}

namespace {

std::vector<std::vector<bool>> matrix(const Relation& r) {
  const std::size_t n = r.n();
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) m[u][v] = r.contains(static_cast<Index>(u), static_cast<Index>(v));
  return m;
}

Relation from_matrix(const Base& base, const std::vector<std::vector<bool>>& m) {
  Relation r(base);
  for (std::size_t u = 0; u < m.size(); ++u)
    for (std::size_t v = 0; v < m.size(); ++v)
      if (m[u][v]) r.insert(static_cast<Index>(u), static_cast<Index>(v));
  return r;
}

}  // namespace

Relation closure_by_squaring(const Relation& r) {
  auto m = matrix(r);
  const std::size_t n = m.size();
  for (;;) {
    auto next = m;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w = 0; w < n; ++w)
          if (m[u][v] && m[v][w]) next[u][w] = true;
    if (next == m) break;
    m = std::move(next);
  }
  return from_matrix(r.base(), m);
}

bool has_cycle_by_walks(const Relation& r) {
  auto m = matrix(r);
  const std::size_t n = m.size();
  // A walk of length n must revisit some vertex; search walks of length
  // 1..n starting at each vertex and returning to it.
  for (std::size_t start = 0; start < n; ++start) {
    std::vector<bool> frontier(n, false);
    for (std::size_t v = 0; v < n; ++v) frontier[v] = m[start][v];
    for (std::size_t step = 0; step < n; ++step) {
      if (frontier[start]) return true;
      std::vector<bool> next(n, false);
      for (std::size_t u = 0; u < n; ++u)
        if (frontier[u])
          for (std::size_t v = 0; v < n; ++v)
            if (m[u][v]) next[v] = true;
      frontier = std::move(next);
    }
  }
  return false;
}

bool is_reflexive(const Relation& r) {
  for (std::size_t u = 0; u < r.n(); ++u)
    if (!r.contains(static_cast<Index>(u), static_cast<Index>(u))) return false;
  return true;
}

bool is_transitive(const Relation& r) {
  auto m = matrix(r);
  const std::size_t n = m.size();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w)
        if (m[u][v] && m[v][w] && !m[u][w]) return false;
  return true;
}

bool is_antisymmetric(const Relation& r) {
  for (std::size_t u = 0; u < r.n(); ++u)
    for (std::size_t v = 0; v < r.n(); ++v)
      if (u != v && r.contains(static_cast<Index>(u), static_cast<Index>(v)) &&
          r.contains(static_cast<Index>(v), static_cast<Index>(u)))
        return false;
  return true;
}

namespace {

template <typename Keep>
std::vector<Relation> filter_reflexive_relations(const Base& base, Keep keep) {
  const std::size_t n = base->size();
  std::vector<std::pair<Index, Index>> cells;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v) cells.emplace_back(static_cast<Index>(u), static_cast<Index>(v));
  std::vector<Relation> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << cells.size()); ++code) {
    Relation r(base);
    for (std::size_t u = 0; u < n; ++u) r.insert(static_cast<Index>(u), static_cast<Index>(u));
    for (std::size_t k = 0; k < cells.size(); ++k)
      if ((code >> k) & 1U) r.insert(cells[k].first, cells[k].second);
    if (keep(r)) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::vector<Relation> all_posets(const Base& base) {
  return filter_reflexive_relations(base, [](const Relation& r) { return is_transitive(r) && is_antisymmetric(r); });
}

std::vector<Relation> all_preposets(const Base& base) {
  return filter_reflexive_relations(base, [](const Relation& r) { return is_transitive(r); });
}

std::vector<std::vector<Index>> extensions_by_filter(const Relation& t) {
  std::vector<Index> order(t.n());
  std::iota(order.begin(), order.end(), Index{0});
  std::vector<std::vector<Index>> out;
  do {
    std::vector<std::size_t> pos(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    bool ok = true;
    for (std::size_t u = 0; u < t.n() && ok; ++u)
      for (std::size_t v = 0; v < t.n() && ok; ++v)
        if (t.contains(static_cast<Index>(u), static_cast<Index>(v)) && pos[u] > pos[v]) ok = false;
    if (ok) out.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

EnumSet extensions_filter_set(const Relation& t) {
  std::vector<Enumeration> members;
  for (auto& order : extensions_by_filter(t)) members.emplace_back(t.base(), std::move(order));
  return EnumSet(t.base(), std::move(members));
}

PermutohedralGraph::PermutohedralGraph(const Base& base) {
  std::vector<Index> order(base->size());
  std::iota(order.begin(), order.end(), Index{0});
  do {
    index_.emplace(order, nodes_.size());
    nodes_.emplace_back(base, order);
  } while (std::next_permutation(order.begin(), order.end()));

  adjacency_.resize(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    std::vector<Index> o(nodes_[i].order().begin(), nodes_[i].order().end());
    for (std::size_t k = 0; k + 1 < o.size(); ++k) {
      std::swap(o[k], o[k + 1]);
      adjacency_[i].push_back(index_.at(o));
      std::swap(o[k], o[k + 1]);
    }
  }

  dist_.assign(nodes_.size(), std::vector<int>(nodes_.size(), -1));
  for (std::size_t s = 0; s < nodes_.size(); ++s) {
    std::deque<std::size_t> queue{s};
    dist_[s][s] = 0;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v : adjacency_[u])
        if (dist_[s][v] < 0) {
          dist_[s][v] = dist_[s][u] + 1;
          queue.push_back(v);
        }
    }
  }
}

std::size_t PermutohedralGraph::index_of(const Enumeration& pi) const {
  return index_.at(std::vector<Index>(pi.order().begin(), pi.order().end()));
}

std::vector<EdgeLabel> PermutohedralGraph::shortest_path_labels(std::size_t a, std::size_t b) const {
  std::vector<EdgeLabel> labels;
  std::size_t current = a;
  while (current != b) {
    for (std::size_t next : adjacency_[current]) {
      if (dist_[next][b] != dist_[current][b] - 1) continue;
      // The two orders differ in exactly one adjacent pair.
      auto x = nodes_[current].order();
      auto y = nodes_[next].order();
      std::size_t k = 0;
      while (x[k] == y[k]) ++k;
      labels.emplace_back(x[k], x[k + 1]);
      current = next;
      break;
    }
  }
  std::sort(labels.begin(), labels.end());
  return labels;
}

bool PermutohedralGraph::convex(const std::vector<bool>& member) const {
  for (std::size_t a = 0; a < nodes_.size(); ++a) {
    if (!member[a]) continue;
    for (std::size_t b = 0; b < nodes_.size(); ++b) {
      if (!member[b]) continue;
      for (std::size_t g = 0; g < nodes_.size(); ++g)
        if (!member[g] && between(a, g, b)) return false;
    }
  }
  return true;
}

Relation random_poset(const Base& base, std::mt19937_64& rng, double density) {
  const std::size_t n = base->size();
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution keep(density);
  Relation r = Relation::diagonal(base);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (keep(rng)) r.insert(order[i], order[j]);
  return closure_by_squaring(r);
}

Relation random_preposet(const Base& base, std::mt19937_64& rng, double density) {
  std::bernoulli_distribution keep(density);
  Relation r = Relation::diagonal(base);
  for (std::size_t u = 0; u < base->size(); ++u)
    for (std::size_t v = 0; v < base->size(); ++v)
      if (u != v && keep(rng)) r.insert(static_cast<Index>(u), static_cast<Index>(v));
  return closure_by_squaring(r);
}

Relation random_relation(const Base& base, std::mt19937_64& rng, double density) {
  std::bernoulli_distribution keep(density);
  Relation r(base);
  for (std::size_t u = 0; u < base->size(); ++u)
    for (std::size_t v = 0; v < base->size(); ++v)
      if (keep(rng)) r.insert(static_cast<Index>(u), static_cast<Index>(v));
  return r;
}

std::vector<Mask> down_sets_by_subsets(const Relation& t) {
  std::vector<Mask> out;
  const Mask all = t.base()->all();
  for (Mask d = 0;; ++d) {
    bool ok = true;
    for (auto [u, v] : t.pairs())
      if ((d & bit(v)) && !(d & bit(u))) ok = false;
    if (ok) out.push_back(d);
    if (d == all) break;
  }
  return out;
}

std::vector<std::vector<Mask>> all_topologies(const Base& base) {
  const std::size_t n = base->size();
  if (n > 3) throw std::invalid_argument("all_topologies enumerates 2^(2^n) families");
  const std::size_t subsets = std::size_t{1} << n;
  const Mask all = base->all();
  std::vector<std::vector<Mask>> out;
  for (std::uint64_t family = 0; family < (std::uint64_t{1} << subsets); ++family) {
    auto has = [&](Mask d) { return (family >> d) & 1U; };
    if (!has(0) || !has(all)) continue;
    bool ok = true;
    for (Mask a = 0; a < subsets && ok; ++a)
      for (Mask b = 0; b < subsets && ok; ++b)
        if (has(a) && has(b) && (!has(a & b) || !has(a | b))) ok = false;
    if (!ok) continue;
    std::vector<Mask> sets;
    for (Mask d = 0; d < subsets; ++d)
      if (has(d)) sets.push_back(d);
    out.push_back(std::move(sets));
  }
  return out;
}

std::size_t width_by_subsets(const Relation& poset) {
  const std::size_t n = poset.n();
  std::size_t best = 0;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    bool antichain = true;
    for (std::size_t u = 0; u < n && antichain; ++u)
      for (std::size_t v = 0; v < n && antichain; ++v)
        if (u != v && (s & bit(u)) && (s & bit(v)) && poset.contains(static_cast<Index>(u), static_cast<Index>(v)))
          antichain = false;
    if (antichain) best = std::max(best, posetlab::popcount(s));
  }
  return best;
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace oracle
