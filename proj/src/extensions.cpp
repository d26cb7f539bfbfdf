#include "posetlab/extensions.hpp"

#include <algorithm>
#include <functional>

namespace posetlab {

EnumSet linear_extensions(const Poset& p) {
  std::vector<Enumeration> members;
  for_each_linear_extension(p, [&](const std::vector<Index>& order) {
    members.emplace_back(p.base(), order);
  });
  // Minimal-element recursion in index order already yields sorted output.
  return EnumSet(p.base(), std::move(members));
}

EnumSet linear_extensions(const Relation& t) {
  if (auto checked = validate_poset(t); std::holds_alternative<Poset>(checked))
    return linear_extensions(std::get<Poset>(checked));

  const auto pairs = t.strict_part().pairs();
  std::vector<Enumeration> members;
  for (Enumeration pi : all_enumerations(t.base())) {
    bool ok = std::all_of(pairs.begin(), pairs.end(),
                          [&](const Pair& uv) { return pi.before(uv.first, uv.second); });
    if (ok) members.push_back(std::move(pi));
  }
  return EnumSet(t.base(), std::move(members));
}

Relation upper_galois(const EnumSet& s) {
  Relation out = Relation::full(s.base());
  for (const Enumeration& pi : s) out &= toset_of(pi);
  return out;
}

Relation relation_closure(const Relation& t) {
  if (!is_acyclic(t.strict_part())) return Relation::full(t.base());
  return transitive_closure(t.with_diagonal());
}

EnumSet enumset_closure(const EnumSet& s) { return linear_extensions(upper_galois(s)); }

EnumSet coatom(const Base& base, Index u, Index v) {
  if (u == v) throw PreconditionError("coatom needs distinct elements");
  if (u >= base->size() || v >= base->size()) throw PreconditionError("coatom: element outside the base");
  Relation r = Relation::diagonal(base);
  r.insert(u, v);
  return linear_extensions(Poset::from_relation(r));
}

OrderedPartition::OrderedPartition(Base base, std::vector<Mask> blocks)
    : base_(std::move(base)), blocks_(std::move(blocks)) {
  if (!base_) throw PreconditionError("ordered partition needs an element set");
  Mask seen = 0;
  for (Mask block : blocks_) {
    if (block == 0) throw PreconditionError("ordered partition blocks must be non-empty");
    if ((block & ~base_->all()) != 0) throw PreconditionError("ordered partition block outside the base");
    if ((block & seen) != 0) throw PreconditionError("ordered partition blocks must be disjoint");
    seen |= block;
  }
  if (seen != base_->all()) throw PreconditionError("ordered partition blocks must cover the base");
}

OrderedPartition OrderedPartition::from_names(Base base,
                                              const std::vector<std::vector<std::string>>& blocks) {
  std::vector<Mask> masks;
  for (const auto& block : blocks) {
    Mask m = 0;
    for (const auto& name : block) {
      Index u = base->index_of(name);
      if (m & bit(u)) throw PreconditionError("ordered partition lists '" + name + "' twice");
      m |= bit(u);
    }
    masks.push_back(m);
  }
  return OrderedPartition(std::move(base), std::move(masks));
}

std::string OrderedPartition::to_string() const {
  std::string out = "|";
  for (Mask block : blocks_) {
    for_each_bit(block, [&](Index u) { out += base_->name(u); });
    out += "|";
  }
  return out;
}

std::vector<OrderedPartition> all_ordered_partitions(const Base& base) {
  std::vector<OrderedPartition> out;
  std::vector<Mask> blocks;
  const Mask all = base->all();
  std::function<void(Mask)> grow = [&](Mask used) {
    if (used == all) {
      out.emplace_back(base, blocks);
      return;
    }
    Mask rest = all & ~used;
    // Every non-empty subset of the unused elements may come next.
    for (Mask block = rest; block != 0; block = (block - 1) & rest) {
      blocks.push_back(block);
      grow(used | block);
      blocks.pop_back();
    }
  };
  grow(0);
  return out;
}

EnumSet face_enum_set(const OrderedPartition& p) {
  std::vector<Enumeration> members;
  std::vector<Index> order;
  const auto& blocks = p.blocks();
  std::function<void(std::size_t)> emit = [&](std::size_t b) {
    if (b == blocks.size()) {
      members.emplace_back(p.base(), order);
      return;
    }
    std::vector<Index> block;
    for_each_bit(blocks[b], [&](Index u) { block.push_back(u); });
    do {
      order.insert(order.end(), block.begin(), block.end());
      emit(b + 1);
      order.resize(order.size() - block.size());
    } while (std::next_permutation(block.begin(), block.end()));
  };
  emit(0);
  return EnumSet(p.base(), std::move(members));
}

Poset face_poset(const OrderedPartition& p) {
  Relation r = Relation::diagonal(p.base());
  Mask earlier = 0;
  for (Mask block : p.blocks()) {
    for_each_bit(earlier, [&](Index u) { for_each_bit(block, [&](Index v) { r.insert(u, v); }); });
    earlier |= block;
  }
  return Poset::from_relation(r);
}

std::size_t face_dimension(const OrderedPartition& p) {
  return p.base()->size() - p.block_count();
}

Poset sandwich_step(const Poset& sub, const Poset& super) {
  require_same_base(sub.base(), super.base(), "sandwich_step");
  if (!sub.strict().is_subset_of(super.strict()) || sub.strict() == super.strict())
    throw PreconditionError("sandwich_step: first poset must be strictly contained in the second");
  Relation covers = cover_relation(super);
  for (auto [u, v] : covers.pairs()) {
    if (sub.less(u, v)) continue;
    Relation reduced = super.relation();
    reduced.erase(u, v);
    // Dropping a covering pair keeps transitivity: no u < w < v exists.
    return Poset::from_relation(reduced);
  }
  // Unreachable: a cover of super outside sub always exists when sub ⊂ super,
  // since sub transitive and containing every cover would contain tr(covers).
  throw PreconditionError("sandwich_step: no removable covering pair");
}

}  // namespace posetlab
