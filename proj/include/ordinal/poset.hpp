#pragma once

#include <string>
#include <utility>
#include <vector>

#include "relation.hpp"

namespace ordinal {

/// An irreflexive, transitively closed relation: the strict order (M <).
class Poset {
 public:
  Poset() = default;

  /// Validates irreflexivity and transitivity.
  explicit Poset(RelationStructure rel) : rel_(std::move(rel)) {
    for (Index i = 0; i < rel_.size(); ++i)
      if (rel_.has(i, i)) throw NotAnOrder("element '" + rel_.name(i) + "' is reflexive");
    require_transitive(rel_);
  }

  Poset(std::vector<std::string> names, const std::vector<NamePair>& pairs)
      : Poset(RelationStructure(std::move(names), pairs)) {}

  /// Skips validation; callers guarantee the invariants.
  static Poset assume_valid(RelationStructure rel) {
    Poset p;
    p.rel_ = std::move(rel);
    return p;
  }

  const RelationStructure& relation() const noexcept { return rel_; }
  std::size_t size() const noexcept { return rel_.size(); }
  bool empty() const noexcept { return rel_.empty(); }
  const std::vector<std::string>& names() const noexcept { return rel_.names(); }
  const std::string& name(Index i) const { return rel_.name(i); }
  Index index(const std::string& n) const { return rel_.index(n); }

  bool less(Index a, Index b) const { return rel_.has(a, b); }
  bool less(const std::string& a, const std::string& b) const { return rel_.has(a, b); }
  bool comparable(Index a, Index b) const { return rel_.has(a, b) || rel_.has(b, a); }

  /// Strict successors a*.
  const ElementSet& above(Index a) const { return rel_.successors(a); }
  /// Strict predecessors *a.
  const ElementSet& below(Index a) const { return rel_.predecessors(a); }

  ElementSet set_of(const std::vector<std::string>& n) const { return rel_.set_of(n); }
  std::vector<std::string> names_of(const ElementSet& s) const { return rel_.names_of(s); }
  ElementSet none() const { return rel_.none(); }
  ElementSet all() const { return rel_.all(); }

  Poset induced(const ElementSet& keep) const { return assume_valid(rel_.induced(keep)); }

  friend bool operator==(const Poset& a, const Poset& b) { return a.rel_ == b.rel_; }

 private:
  RelationStructure rel_;
};

/// Convenience builder for a chain given in ascending order.
inline Poset chain(const std::vector<std::string>& ascending) {
  std::vector<NamePair> pairs;
  for (std::size_t i = 0; i < ascending.size(); ++i)
    for (std::size_t j = i + 1; j < ascending.size(); ++j) pairs.emplace_back(ascending[i], ascending[j]);
  return Poset(ascending, pairs);
}

inline Poset antichain(const std::vector<std::string>& names) { return Poset(names, {}); }

}  // namespace ordinal
