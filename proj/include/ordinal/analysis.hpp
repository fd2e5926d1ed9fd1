#pragma once

#include <optional>
#include <string>
#include <vector>

#include "poset.hpp"

namespace ordinal {

struct Extremes {
  ElementSet maxima;
  ElementSet minima;
  std::optional<Index> supremum;
  std::optional<Index> infimum;
};

inline Extremes extremes(const Poset& p) {
  const std::size_t n = p.size();
  Extremes e{ElementSet(n), ElementSet(n), std::nullopt, std::nullopt};
  for (Index a = 0; a < n; ++a) {
    if (p.above(a).none()) e.maxima.set(a);
    if (p.below(a).none()) e.minima.set(a);
    if (p.below(a).count() + 1 == n) e.supremum = a;
    if (p.above(a).count() + 1 == n) e.infimum = a;
  }
  return e;
}

/// Lexicographic product; the element (m, n) is named "m_n".
inline Poset lex_product(const Poset& p, const Poset& q) {
  const std::size_t n = p.size() * q.size();
  std::vector<std::string> names;
  std::vector<ElementSet> rows(n, ElementSet(n));
  for (Index a = 0; a < p.size(); ++a)
    for (Index b = 0; b < q.size(); ++b) {
      names.push_back(p.name(a) + "_" + q.name(b));
      for (Index c = 0; c < p.size(); ++c)
        for (Index d = 0; d < q.size(); ++d)
          if (p.less(a, c) || (a == c && q.less(b, d))) rows[a * q.size() + b].set(c * q.size() + d);
    }
  return Poset::assume_valid(RelationStructure::from_rows(std::move(names), std::move(rows)));
}

enum class Bound { Upper, Lower };

/// Strict common upper (A*) or lower (*A) bounds. The empty set is bounded by the
/// whole universe.
inline ElementSet bounds(const Poset& p, const ElementSet& a, Bound side) {
  ElementSet out = p.all();
  for_each_member(a, [&](Index i) { out &= side == Bound::Upper ? p.above(i) : p.below(i); });
  return out;
}

inline ElementSet upper(const Poset& p, const ElementSet& a) { return bounds(p, a, Bound::Upper); }
inline ElementSet lower(const Poset& p, const ElementSet& a) { return bounds(p, a, Bound::Lower); }

enum class Closure { Initial, Final, Segmental };

inline ElementSet closure(const Poset& p, const ElementSet& a, Closure side) {
  if (side == Closure::Segmental) return closure(p, a, Closure::Initial) & closure(p, a, Closure::Final);
  ElementSet out = a;
  for_each_member(a, [&](Index i) { out |= side == Closure::Initial ? p.below(i) : p.above(i); });
  return out;
}

inline ElementSet down(const Poset& p, const ElementSet& a) { return closure(p, a, Closure::Initial); }
inline ElementSet up(const Poset& p, const ElementSet& a) { return closure(p, a, Closure::Final); }

/// Pointwise a < b for every a in A, b in B (vacuous when either is empty).
inline bool pointwise_less(const Poset& p, const ElementSet& a, const ElementSet& b) {
  bool ok = true;
  for_each_member(a, [&](Index i) { ok = ok && b.is_subset_of(p.above(i)); });
  return ok;
}

inline bool is_initial_section(const Poset& p, const ElementSet& s) { return down(p, s) == s; }
inline bool is_final_section(const Poset& p, const ElementSet& s) { return up(p, s) == s; }

inline bool is_interval(const Poset& p, const ElementSet& s) {
  bool ok = true;
  for_each_member(s, [&](Index a) {
    for_each_member(s & p.above(a), [&](Index b) {
      ok = ok && (p.above(a) & p.below(b)).is_subset_of(s);
    });
  });
  return ok;
}

struct SectionPredicates {
  bool is_initial = false;
  bool is_final = false;
  bool is_interval = false;
};

inline SectionPredicates section_predicates(const Poset& p, const ElementSet& s) {
  return {is_initial_section(p, s), is_final_section(p, s), is_interval(p, s)};
}

inline bool is_total(const Poset& p) {
  for (Index a = 0; a < p.size(); ++a)
    for (Index b = a + 1; b < p.size(); ++b)
      if (!p.comparable(a, b)) return false;
  return true;
}

/// Pairwise comparability of the members of `s`.
inline bool is_chain(const Poset& p, const ElementSet& s) {
  bool ok = true;
  for_each_member(s, [&](Index a) {
    ElementSet others = s;
    others.reset(a);
    ok = ok && others.is_subset_of(p.above(a) | p.below(a));
  });
  return ok;
}

inline bool is_antichain(const Poset& p, const ElementSet& s) {
  bool ok = true;
  for_each_member(s, [&](Index a) { ok = ok && !(s & (p.above(a) | p.below(a))).any(); });
  return ok;
}

/// Every principal down-set is totally ordered.
inline bool is_ramified(const Poset& p) {
  for (Index m = 0; m < p.size(); ++m)
    if (!is_chain(p, p.below(m))) return false;
  return true;
}

enum class Cofinality { Final, Initial };

struct CofinalResult {
  bool by_closure = false;    // ↓A = ↓B (or ↑A = ↑B)
  bool by_domination = false; // every a ≤ some b and every b ≤ some a (or ≥)
};

inline CofinalResult cofinal_detail(const Poset& p, const ElementSet& a, const ElementSet& b, Cofinality side) {
  CofinalResult r;
  const bool fin = side == Cofinality::Final;
  r.by_closure = fin ? down(p, a) == down(p, b) : up(p, a) == up(p, b);
  auto dominated = [&](const ElementSet& x, const ElementSet& y) {
    bool ok = true;
    for_each_member(x, [&](Index i) {
      ElementSet reach = fin ? p.above(i) : p.below(i);
      reach.set(i);
      ok = ok && (reach & y).any();
    });
    return ok;
  };
  r.by_domination = dominated(a, b) && dominated(b, a);
  return r;
}

/// Cofinal (Final) or coinitial (Initial). Both characterizations are computed and
/// must agree.
inline bool cofinal(const Poset& p, const ElementSet& a, const ElementSet& b, Cofinality side) {
  auto r = cofinal_detail(p, a, b, side);
  if (r.by_closure != r.by_domination) throw Error("cofinality characterizations disagree");
  return r.by_closure;
}

struct SubsetRelations {
  bool finally_superior = false;     // A <₁ B : B ∩ A* ≠ ∅
  bool same_majorant = false;        // A =₁ B : A* = B*
  bool envelops_superiorly = false;  // A ≤₃ B : every ↑a meets B
};

inline SubsetRelations subset_relations(const Poset& p, const ElementSet& a, const ElementSet& b) {
  SubsetRelations r;
  const ElementSet ua = upper(p, a);
  r.finally_superior = (b & ua).any();
  r.same_majorant = ua == upper(p, b);
  bool env = true;
  for_each_member(a, [&](Index i) {
    ElementSet reach = p.above(i);
    reach.set(i);
    env = env && (reach & b).any();
  });
  r.envelops_superiorly = env;
  return r;
}

}  // namespace ordinal
