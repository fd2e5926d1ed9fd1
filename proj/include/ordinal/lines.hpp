#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "gaps.hpp"
#include "poset.hpp"

namespace ordinal {

/// Maximal chain, ascending.
struct CompleteLine {
  std::vector<Index> chain;
  ElementSet members;

  friend bool operator==(const CompleteLine& x, const CompleteLine& y) { return x.chain == y.chain; }
};

/// Maximal antichain.
struct CompleteTransversal {
  ElementSet members;

  friend bool operator==(const CompleteTransversal& x, const CompleteTransversal& y) {
    return x.members == y.members;
  }
};

/// Immediate successors of a.
inline ElementSet covers_of(const Poset& p, Index a) {
  ElementSet out = p.above(a);
  for_each_member(p.above(a), [&](Index b) { out -= p.above(b); });
  return out;
}

/// Sorts a chain's members ascending.
inline std::vector<Index> ascending(const Poset& p, const ElementSet& chain) {
  auto v = members(chain);
  std::sort(v.begin(), v.end(), [&](Index a, Index b) { return p.less(a, b); });
  return v;
}

inline CompleteLine make_line(const Poset& p, const ElementSet& chain) {
  if (!is_chain(p, chain)) throw InvalidChain("set is not a chain");
  return CompleteLine{ascending(p, chain), chain};
}

inline bool is_complete_line(const Poset& p, const ElementSet& chain) {
  if (!is_chain(p, chain)) return false;
  for (Index x = 0; x < p.size(); ++x)
    if (!chain.test(x) && chain.is_subset_of(p.above(x) | p.below(x))) return false;
  return true;
}

namespace detail {

template <typename F>
void walk_covers(const Poset& p, std::vector<Index>& path, F& emit) {
  const ElementSet next = covers_of(p, path.back());
  if (next.none()) {
    emit(path);
    return;
  }
  for_each_member(next, [&](Index b) {
    path.push_back(b);
    walk_covers(p, path, emit);
    path.pop_back();
  });
}

}  // namespace detail

/// All maximal chains, lexicographic by ascending index sequence.
inline std::vector<CompleteLine> complete_lines(const Poset& p) {
  std::vector<CompleteLine> out;
  auto emit = [&](const std::vector<Index>& path) {
    ElementSet s(p.size());
    for (auto i : path) s.set(i);
    out.push_back(CompleteLine{path, s});
  };
  std::vector<Index> path;
  for (Index m = 0; m < p.size(); ++m) {
    if (p.below(m).any()) continue;
    path.assign(1, m);
    detail::walk_covers(p, path, emit);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.chain < y.chain; });
  return out;
}

enum class RaySide { Initial, Final };

/// I is an initial half-ray when everything comparable to all of I lies above it
/// (final: below it).
inline bool half_ray(const Poset& p, const ElementSet& chain, RaySide side) {
  if (!is_chain(p, chain)) throw InvalidChain("half-ray candidate is not a chain");
  ElementSet comparable_to_all = p.all() - chain;
  for_each_member(chain, [&](Index a) { comparable_to_all &= p.above(a) | p.below(a); });
  const ElementSet beyond = side == RaySide::Initial ? upper(p, chain) : lower(p, chain);
  return comparable_to_all.is_subset_of(beyond);
}

/// Longest common prefix of two lines that is itself an initial half-ray of `q`.
inline std::size_t common_half_ray(const Poset& q, const CompleteLine& x, const CompleteLine& y) {
  std::size_t len = 0;
  while (len < x.chain.size() && len < y.chain.size() && x.chain[len] == y.chain[len]) ++len;
  ElementSet prefix(q.size());
  std::size_t best = 0;
  for (std::size_t k = 0; k < len; ++k) {
    prefix.set(x.chain[k]);
    if (half_ray(q, prefix, RaySide::Initial)) best = k + 1;
  }
  return best;
}

/// Number of initially distinct complete lines of the order induced on upper(I).
inline std::size_t crossing_index(const Poset& p, const ElementSet& chain) {
  if (!half_ray(p, chain, RaySide::Initial)) throw InvalidChain("chain is not an initial half-ray");
  const Poset q = p.induced(upper(p, chain));
  const auto lines = complete_lines(q);
  std::vector<std::size_t> parent(lines.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if (common_half_ray(q, lines[i], lines[j]) > 0) parent[find(j)] = find(i);
  std::size_t classes = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) classes += find(i) == i;
  return classes;
}

struct LineGapCrossing {
  bool passes = false;
  bool criterion_agrees = false;
};

/// Passes when the line avoids the neutral interval; the bound criterion
/// upper(L∩A) ∩ lower(L∩B) = ∅ is computed alongside.
inline LineGapCrossing line_passes_gap(const Poset& p, const CompleteLine& line, const Gap& g) {
  require_gap(p, g);
  const ElementSet neutral = p.all() - g.initial - g.final;
  LineGapCrossing r;
  r.passes = !line.members.intersects(neutral);
  const bool criterion = !upper(p, line.members & g.initial).intersects(lower(p, line.members & g.final));
  r.criterion_agrees = r.passes == criterion;
  return r;
}

namespace detail {

/// Bron–Kerbosch with pivoting over the incomparability graph.
template <typename F>
void maximal_antichains(const std::vector<ElementSet>& nbr, ElementSet r, ElementSet cand, ElementSet excl, F& emit) {
  if (cand.none() && excl.none()) {
    emit(r);
    return;
  }
  const ElementSet pool = cand | excl;
  Index pivot = pool.find_first();
  std::size_t best = 0;
  for_each_member(pool, [&](Index u) {
    const std::size_t c = (cand & nbr[u]).count();
    if (c > best) best = c, pivot = u;
  });
  for_each_member(cand - nbr[pivot], [&](Index v) {
    ElementSet r2 = r;
    r2.set(v);
    maximal_antichains(nbr, r2, cand & nbr[v], excl & nbr[v], emit);
    cand.reset(v);
    excl.set(v);
  });
}

}  // namespace detail

/// All maximal antichains, canonical order.
inline std::vector<CompleteTransversal> complete_transversals(const Poset& p) {
  const std::size_t n = p.size();
  if (n == 0) return {CompleteTransversal{ElementSet(0)}};
  std::vector<ElementSet> nbr(n);
  for (Index a = 0; a < n; ++a) {
    nbr[a] = p.all() - p.above(a) - p.below(a);
    nbr[a].reset(a);
  }
  std::vector<CompleteTransversal> out;
  auto emit = [&](const ElementSet& s) { out.push_back(CompleteTransversal{s}); };
  detail::maximal_antichains(nbr, ElementSet(n), p.all(), ElementSet(n), emit);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return canonical_less(x.members, y.members); });
  return out;
}

inline bool is_complete_transversal(const Poset& p, const ElementSet& t) {
  if (!is_antichain(p, t)) return false;
  return (down(p, t) | up(p, t)) == p.all();
}

struct TransversalPartition {
  ElementSet class0;  // T
  ElementSet class1;  // strictly below T
  ElementSet class2;  // strictly above T
};

inline TransversalPartition transversal_partition(const Poset& p, const CompleteTransversal& t) {
  if (!is_complete_transversal(p, t.members)) throw InvalidTransversal("not a complete transversal");
  TransversalPartition r{t.members, down(p, t.members) - t.members, up(p, t.members) - t.members};
  if (r.class1.intersects(r.class2)) throw InvalidTransversal("element both below and above the transversal");
  if ((r.class0 | r.class1 | r.class2) != p.all()) throw InvalidTransversal("transversal classes do not cover");
  if (!is_initial_section(p, r.class1) || !is_final_section(p, r.class2))
    throw InvalidTransversal("transversal classes are not sections");
  return r;
}

struct TransversalLineCrossing {
  enum class Kind { Point, DisjunctiveGapOfLine };
  Kind kind = Kind::Point;
  Index point = 0;
  ElementSet prefix;
  ElementSet suffix;
};

inline TransversalLineCrossing transversal_crosses_line(const Poset& p, const CompleteTransversal& t,
                                                        const CompleteLine& line) {
  const ElementSet meet = t.members & line.members;
  if (meet.count() > 1) throw InvalidTransversal("transversal meets a line in more than one element");
  TransversalLineCrossing r;
  if (meet.count() == 1) {
    r.point = meet.find_first();
    return r;
  }
  const auto part = transversal_partition(p, t);
  r.kind = TransversalLineCrossing::Kind::DisjunctiveGapOfLine;
  r.prefix = part.class1 & line.members;
  r.suffix = part.class2 & line.members;
  if ((r.prefix | r.suffix) != line.members || !pointwise_less(p, r.prefix, r.suffix))
    throw InvalidTransversal("cut of the line is not a disjunctive gap");
  return r;
}

/// True iff every complete line meets every complete transversal in exactly one point.
inline bool problem13_search(const Poset& p) {
  const auto lines = complete_lines(p);
  const auto ts = complete_transversals(p);
  for (const auto& l : lines)
    for (const auto& t : ts)
      if ((l.members & t.members).count() != 1) return false;
  return true;
}

}  // namespace ordinal
