#include "posetlab/element_set.hpp"

#include <algorithm>

namespace posetlab {

ElementSet::ElementSet(std::vector<std::string> identifiers) : names_(std::move(identifiers)) {
  if (names_.empty()) throw PreconditionError("element set must be non-empty");
  if (names_.size() > kMaxElements)
    throw PreconditionError("element set exceeds " + std::to_string(kMaxElements) + " elements");
  std::sort(names_.begin(), names_.end());
  auto dup = std::adjacent_find(names_.begin(), names_.end());
  if (dup != names_.end()) throw PreconditionError("duplicate element identifier '" + *dup + "'");
}

std::optional<Index> ElementSet::find(std::string_view identifier) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), identifier);
  if (it == names_.end() || *it != identifier) return std::nullopt;
  return static_cast<Index>(it - names_.begin());
}

Index ElementSet::index_of(std::string_view identifier) const {
  if (auto i = find(identifier)) return *i;
  throw PreconditionError("unknown element '" + std::string(identifier) + "'");
}

Base make_base(std::vector<std::string> identifiers) {
  return std::make_shared<const ElementSet>(std::move(identifiers));
}

bool same_base(const Base& a, const Base& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_base(const Base& a, const Base& b, const char* what) {
  if (!same_base(a, b)) throw PreconditionError(std::string(what) + ": element sets differ");
}

}  // namespace posetlab
