#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace posetlab {

/// Raised when an argument violates an operation's precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Index of an element inside its ElementSet. Index order is the
/// lexicographic order of identifiers.
using Index = std::uint8_t;

/// Subset of an ElementSet, one bit per index.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxElements = 64;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

constexpr Mask low_bits(std::size_t n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr std::size_t popcount(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }

/// Calls f(i) for every set bit i of m, lowest first.
template <typename F>
void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    f(static_cast<Index>(std::countr_zero(m)));
    m &= m - 1;
  }
}

/// Strict lexicographic comparison of two subsets viewed as sorted index
/// lists.
constexpr bool lex_less(Mask a, Mask b) {
  if (a == b) return false;
  Mask diff = a ^ b;
  Mask lowest = diff & (~diff + 1);
  Mask tail = ~(lowest - 1);
  // Below `lowest` both lists agree; a proper prefix sorts first.
  if ((a & lowest) != 0) return (b & tail) != 0;
  return (a & tail) == 0;
}

/// The basic set N: a non-empty finite set of distinct identifiers.
/// Identifiers are kept sorted; that order is used only for canonical
/// output and tie-breaking.
class ElementSet {
 public:
  explicit ElementSet(std::vector<std::string> identifiers);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Index i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<Index> find(std::string_view identifier) const;
  /// Throws PreconditionError for an unknown identifier.
  Index index_of(std::string_view identifier) const;

  Mask all() const { return low_bits(names_.size()); }

  bool operator==(const ElementSet&) const = default;

 private:
  std::vector<std::string> names_;
};

using Base = std::shared_ptr<const ElementSet>;

Base make_base(std::vector<std::string> identifiers);

/// True when both handles describe the same identifiers.
bool same_base(const Base& a, const Base& b);

/// Throws PreconditionError unless same_base(a, b).
void require_same_base(const Base& a, const Base& b, const char* what);

}  // namespace posetlab
