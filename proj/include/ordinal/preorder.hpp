#pragma once

#include <string>
#include <utility>
#include <vector>

#include "poset.hpp"
#include "relation.hpp"

namespace ordinal {

/// A reflexive, transitively closed structure (M ≤).
class Preorder {
 public:
  explicit Preorder(RelationStructure rel) : rel_(std::move(rel)) {
    for (Index i = 0; i < rel_.size(); ++i)
      if (!rel_.has(i, i)) throw NotReflexive("element '" + rel_.name(i) + "' is not reflexive");
    require_transitive(rel_);
  }

  /// Accepts any transitive structure, adding the missing loops. `normalized()` reports
  /// whether a loop had to be added.
  static Preorder reflexivize(const RelationStructure& s) {
    require_transitive(s);
    auto rows = s.rows();
    bool added = false;
    for (Index i = 0; i < rows.size(); ++i) {
      added = added || !rows[i].test(i);
      rows[i].set(i);
    }
    Preorder p(RelationStructure::from_rows(s.names(), std::move(rows)));
    p.normalized_ = added;
    return p;
  }

  const RelationStructure& relation() const noexcept { return rel_; }
  bool normalized() const noexcept { return normalized_; }
  std::size_t size() const noexcept { return rel_.size(); }

 private:
  RelationStructure rel_;
  bool normalized_ = false;
};

/// (a, b) with a ≤ b and not b ≤ a.
inline Poset strict_part(const Preorder& p) {
  const auto& r = p.relation();
  std::vector<ElementSet> rows(r.size());
  for (Index a = 0; a < r.size(); ++a) rows[a] = r.successors(a) - r.predecessors(a);
  return Poset(RelationStructure::from_rows(r.names(), std::move(rows)));
}

struct QuotientResult {
  std::vector<ElementSet> classes;       // ordered by representative
  std::vector<Index> representatives;    // least member of each class
  Poset class_order;                     // over representative names
  std::vector<std::size_t> projection;   // element -> class position
};

inline QuotientResult quotient(const Preorder& p) {
  const auto& r = p.relation();
  const std::size_t n = r.size();
  QuotientResult q;
  q.projection.assign(n, 0);
  ElementSet assigned(n);
  for (Index a = 0; a < n; ++a) {
    if (assigned.test(a)) continue;
    ElementSet cls = r.successors(a) & r.predecessors(a);
    assigned |= cls;
    for_each_member(cls, [&](Index x) { q.projection[x] = q.classes.size(); });
    q.classes.push_back(std::move(cls));
    q.representatives.push_back(a);
  }
  const auto strict = strict_part(p);
  const std::size_t k = q.classes.size();
  std::vector<std::string> names;
  std::vector<ElementSet> rows(k, ElementSet(k));
  for (std::size_t i = 0; i < k; ++i) {
    names.push_back(r.name(q.representatives[i]));
    for (std::size_t j = 0; j < k; ++j)
      if (strict.less(q.representatives[i], q.representatives[j])) rows[i].set(j);
  }
  q.class_order = Poset(RelationStructure::from_rows(std::move(names), std::move(rows)));
  return q;
}

}  // namespace ordinal
