#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "analysis.hpp"
#include "deduction.hpp"
#include "poset.hpp"

namespace ordinal {

/// A cut of a poset: an initial section below a final section, pointwise.
struct Gap {
  ElementSet initial;  // A
  ElementSet final;    // B

  friend bool operator==(const Gap& x, const Gap& y) { return x.initial == y.initial && x.final == y.final; }
};

/// Canonical gap order: initial part first, then final part, each by CanonicalLess.
inline bool canonical_less(const Gap& x, const Gap& y) {
  if (x.initial != y.initial) return canonical_less(x.initial, y.initial);
  return canonical_less(x.final, y.final);
}

struct GapLess {
  bool operator()(const Gap& x, const Gap& y) const { return canonical_less(x, y); }
};

/// "a,b|c": sorted initial names, a bar, sorted final names.
inline std::string gap_token(const Poset& p, const Gap& g) {
  std::string out;
  auto append = [&](const ElementSet& s) {
    bool first = true;
    for_each_member(s, [&](Index i) {
      out += (first ? "" : ",") + p.name(i);
      first = false;
    });
  };
  append(g.initial);
  out += '|';
  append(g.final);
  return out;
}

inline Gap parse_gap_token(const Poset& p, const std::string& token) {
  const auto bar = token.find('|');
  if (bar == std::string::npos || token.find('|', bar + 1) != std::string::npos)
    throw InvalidGap("gap token must contain exactly one '|': " + token);
  auto side = [&](const std::string& part) {
    ElementSet s = p.none();
    std::size_t start = 0;
    while (start <= part.size() && !part.empty()) {
      auto comma = part.find(',', start);
      auto name = part.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      s.set(p.index(name));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return s;
  };
  return {side(token.substr(0, bar)), side(token.substr(bar + 1))};
}

inline bool is_gap(const Poset& p, const Gap& g) {
  return g.initial.size() == p.size() && g.final.size() == p.size() && is_initial_section(p, g.initial) &&
         is_final_section(p, g.final) && pointwise_less(p, g.initial, g.final);
}

inline void require_gap(const Poset& p, const Gap& g) {
  if (!is_gap(p, g)) throw InvalidGap("not a gap of this order: " + gap_token(p, g));
}

inline constexpr std::size_t kDefaultGapBudget = 1'000'000;

namespace detail {

/// Down-sets of the order induced on `rem`, each reported once. Returns false when the
/// visitor asks to stop.
template <typename F>
bool for_each_down_set(const Poset& p, ElementSet rem, ElementSet cur, F& visit) {
  auto m = rem.find_first();
  while (m != ElementSet::npos && (p.below(m) & rem).any()) m = rem.find_next(m);
  if (m == ElementSet::npos) return visit(cur);
  // Without m: nothing above m either.
  ElementSet without = rem - p.above(m);
  without.reset(m);
  if (!for_each_down_set(p, std::move(without), cur, visit)) return false;
  rem.reset(m);
  cur.set(m);
  return for_each_down_set(p, std::move(rem), std::move(cur), visit);
}

}  // namespace detail

/// Visits every down-set of `p` restricted to `within` (which must itself be a final or
/// initial section for the result to be a section of p).
template <typename F>
void for_each_down_set(const Poset& p, const ElementSet& within, F&& visit) {
  auto wrapped = [&](const ElementSet& s) { return visit(s); };
  detail::for_each_down_set(p, within, p.none(), wrapped);
}

/// All initial sections, canonically ordered.
inline std::vector<ElementSet> initial_sections(const Poset& p) {
  std::vector<ElementSet> out;
  for_each_down_set(p, p.all(), [&](const ElementSet& s) {
    out.push_back(s);
    return true;
  });
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

/// Every gap (A, B), canonically ordered. Throws BudgetExceeded once more than
/// `budget` gaps have been seen.
inline std::vector<Gap> enumerate_gaps(const Poset& p, std::size_t budget = kDefaultGapBudget) {
  std::vector<Gap> out;
  bool over = false;
  for_each_down_set(p, p.all(), [&](const ElementSet& a) {
    const ElementSet room = upper(p, a);
    for_each_down_set(p, room, [&](const ElementSet& d) {
      if (out.size() == budget) {
        over = true;
        return false;
      }
      out.push_back({a, room - d});
      return true;
    });
    return !over;
  });
  if (over) throw BudgetExceeded("gap count", budget, budget + 1);
  std::sort(out.begin(), out.end(), GapLess{});
  return out;
}

enum class GapKind { Exterior, Covered, Supported, Interior };

inline const char* to_string(GapKind k) {
  switch (k) {
    case GapKind::Exterior: return "exterior";
    case GapKind::Covered: return "covered";
    case GapKind::Supported: return "supported";
    case GapKind::Interior: return "interior";
  }
  return "?";
}

struct GapClass {
  GapKind kind = GapKind::Exterior;
  bool initial_tight = false;  // A = *B
  bool final_tight = false;    // B = A*
  bool narrow = false;
  bool disjunctive = false;
  ElementSet neutral;  // M - (A ∪ B)
};

inline GapClass classify_gap(const Poset& p, const Gap& g) {
  require_gap(p, g);
  GapClass c;
  const bool a = g.initial.any(), b = g.final.any();
  c.kind = !a && !b ? GapKind::Exterior : !a ? GapKind::Covered : !b ? GapKind::Supported : GapKind::Interior;
  c.initial_tight = g.initial == lower(p, g.final);
  c.final_tight = g.final == upper(p, g.initial);
  c.narrow = c.initial_tight && c.final_tight;
  c.neutral = ~(g.initial | g.final);
  c.disjunctive = c.narrow && c.neutral.none();
  if (!is_interval(p, c.neutral)) throw Error("neutral interval of " + gap_token(p, g) + " is not an interval");
  return c;
}

/// (A, B) <₁ (A', B') iff B ∩ A' ≠ ∅.
inline bool natural_less(const Gap& g, const Gap& h) { return g.final.intersects(h.initial); }

namespace detail {

inline void require_fresh(const Poset& p, const std::vector<std::string>& names) {
  std::vector<std::string> sorted = names;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (p.relation().find(sorted[i])) throw NameCollision(sorted[i]);
    if (i > 0 && sorted[i] == sorted[i - 1]) throw NameCollision(sorted[i]);
  }
}

/// Rows of p extended by one new element per gap, with only the generating relations
/// A < new < B (no closure).
inline std::vector<ElementSet> generator_rows(const Poset& p, const std::vector<Gap>& gaps) {
  const std::size_t n = p.size(), total = n + gaps.size();
  std::vector<ElementSet> rows(total, ElementSet(total));
  for (Index a = 0; a < n; ++a)
    for_each_member(p.above(a), [&](Index b) { rows[a].set(b); });
  for (std::size_t k = 0; k < gaps.size(); ++k) {
    const Index q = n + k;
    for_each_member(gaps[k].initial, [&](Index a) { rows[a].set(q); });
    for_each_member(gaps[k].final, [&](Index b) { rows[q].set(b); });
  }
  return rows;
}

/// The closed extension written down directly: old pairs kept, A < new < B, and
/// new_g < new_h iff B_g ∩ A_h ≠ ∅.
inline std::vector<ElementSet> natural_rows(const Poset& p, const std::vector<Gap>& gaps) {
  auto rows = generator_rows(p, gaps);
  const std::size_t n = p.size();
  for (std::size_t g = 0; g < gaps.size(); ++g)
    for (std::size_t h = 0; h < gaps.size(); ++h)
      if (natural_less(gaps[g], gaps[h])) rows[n + g].set(n + h);
  return rows;
}

inline std::vector<std::string> extended_names(const Poset& p, const std::vector<std::string>& fresh) {
  std::vector<std::string> names = p.names();
  names.insert(names.end(), fresh.begin(), fresh.end());
  return names;
}

}  // namespace detail

/// Adds one element occupying `g`: A < name < B, incomparable to the neutral interval.
inline Poset fill_gap(const Poset& p, const Gap& g, const std::string& name) {
  require_gap(p, g);
  detail::require_fresh(p, {name});
  auto rows = detail::generator_rows(p, {g});
  return Poset(RelationStructure::from_rows(detail::extended_names(p, {name}), std::move(rows)));
}

/// Occupies every listed gap with its own new element, then closes transitively. The
/// relations derived among the new elements are checked against the natural gap order.
inline Poset fill_simultaneous(const Poset& p, const std::vector<Gap>& gaps, const std::vector<std::string>& names) {
  if (gaps.size() != names.size()) throw Error("fill_simultaneous needs one name per gap");
  for (const auto& g : gaps) require_gap(p, g);
  detail::require_fresh(p, names);
  const std::size_t n = p.size();
  auto rows = closed_rows(detail::generator_rows(p, gaps));
  for (Index i = 0; i < rows.size(); ++i)
    if (rows[i].test(i)) throw Error("simultaneous filling produced a reflexive element");
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (rows[a].test(b) != p.less(a, b)) throw Error("simultaneous filling changed an old relation");
  for (std::size_t g = 0; g < gaps.size(); ++g)
    for (std::size_t h = 0; h < gaps.size(); ++h)
      if (rows[n + g].test(n + h) != natural_less(gaps[g], gaps[h]))
        throw Error("derived order between new elements differs from the natural gap order");
  return Poset::assume_valid(RelationStructure::from_rows(detail::extended_names(p, names), std::move(rows)));
}

/// The natural order on the given gaps, as a poset over their tokens.
inline Poset gap_order(const Poset& p, const std::vector<Gap>& gaps) {
  const std::size_t k = gaps.size();
  std::vector<std::string> names;
  std::vector<ElementSet> rows(k, ElementSet(k));
  for (std::size_t g = 0; g < k; ++g) {
    names.push_back(gap_token(p, gaps[g]));
    for (std::size_t h = 0; h < k; ++h)
      if (natural_less(gaps[g], gaps[h])) rows[g].set(h);
  }
  return Poset(RelationStructure::from_rows(std::move(names), std::move(rows)));
}

inline Poset gap_order(const Poset& p, std::size_t budget = kDefaultGapBudget) {
  return gap_order(p, enumerate_gaps(p, budget));
}

/// The disjunctive gaps, ascending in the natural order (which is total on them).
///
/// A disjunctive initial part A puts every member below every non-member, so it
/// consists exactly of the elements with |↓x| ≤ |A|; only n + 1 candidates exist.
inline std::vector<Gap> disjunctive_chain(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<Gap> out;
  for (std::size_t k = 0; k <= n; ++k) {
    ElementSet a = p.none();
    for (Index x = 0; x < n; ++x)
      if (p.below(x).count() + 1 <= k) a.set(x);
    if (a.count() != k) continue;
    const ElementSet b = ~a;
    if (is_initial_section(p, a) && pointwise_less(p, a, b)) out.push_back({a, b});
  }
  for (std::size_t i = 0; i + 1 < out.size(); ++i)
    if (!natural_less(out[i], out[i + 1]) || natural_less(out[i + 1], out[i]))
      throw Error("disjunctive gaps are not totally ordered");
  return out;
}

/// Unique partition into blocks totally ordered by <₁, each block free of non-extreme
/// disjunctive gaps. The block of m is the intersection of the final parts of the
/// disjunctive gaps it lies above and the initial parts of those it lies below.
inline std::vector<ElementSet> block_decomposition(const Poset& p) {
  const auto cuts = disjunctive_chain(p);
  std::vector<ElementSet> blocks;
  ElementSet seen = p.none();
  for (Index m = 0; m < p.size(); ++m) {
    if (seen.test(m)) continue;
    ElementSet block = p.all();
    for (const auto& g : cuts) {
      if (g.final.test(m)) block &= g.final;
      if (g.initial.test(m)) block &= g.initial;
    }
    seen |= block;
    blocks.push_back(std::move(block));
  }
  // A block X precedes Y under <₁ iff Y meets X*.
  std::sort(blocks.begin(), blocks.end(),
            [&](const ElementSet& x, const ElementSet& y) { return (y & upper(p, x)).any(); });
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i)
    if (!(blocks[i + 1] & upper(p, blocks[i])).any()) throw Error("blocks are not totally ordered");
  for (const auto& b : blocks)
    if (disjunctive_chain(p.induced(b)).size() != 2) throw Error("block has a non-extreme disjunctive gap");
  return blocks;
}

}  // namespace ordinal
