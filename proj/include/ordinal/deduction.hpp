#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "poset.hpp"
#include "relation.hpp"

namespace ordinal {

/// P ⊆ Pφ₁ ⊆ Pφ₂ ⊆ … up to and including the repeated fixed point.
struct ClosureTrace {
  std::vector<RelationStructure> stages;
  std::size_t stage_count = 0;  // strict growth rounds
};

struct ClosureResult {
  RelationStructure closure;
  ClosureTrace trace;
};

/// One synchronous round of the transitive law over every current pair.
inline std::vector<ElementSet> deduction_round(const std::vector<ElementSet>& rows) {
  std::vector<ElementSet> next = rows;
  for (Index a = 0; a < rows.size(); ++a) for_each_member(rows[a], [&](Index b) { next[a] |= rows[b]; });
  return next;
}

inline ClosureResult deductive_closure(const RelationStructure& p) {
  ClosureResult out;
  out.trace.stages.push_back(p);
  std::vector<ElementSet> rows = p.rows();
  for (;;) {
    auto next = deduction_round(rows);
    out.trace.stages.push_back(RelationStructure::from_rows(p.names(), next));
    if (next == rows) break;
    ++out.trace.stage_count;
    rows = std::move(next);
  }
  out.closure = out.trace.stages.back();
  return out;
}

/// Least transitively closed superset of the rows (Warshall); same result as the
/// round-based closure without recording stages.
inline std::vector<ElementSet> closed_rows(std::vector<ElementSet> rows) {
  for (Index k = 0; k < rows.size(); ++k)
    for (Index i = 0; i < rows.size(); ++i)
      if (rows[i].test(k)) rows[i] |= rows[k];
  return rows;
}

inline RelationStructure transitive_closure(const RelationStructure& p) {
  return RelationStructure::from_rows(p.names(), closed_rows(p.rows()));
}

enum class StructureTaxon {
  TotalOrder,                  // 11
  PartialOrder,                // 12
  Classification,              // 21
  ReflexiveAsymmetricNoSym,    // 221
  ReflexiveAsymmetricWithSym,  // 222
  Mixed                        // 3
};

inline const char* to_string(StructureTaxon t) {
  switch (t) {
    case StructureTaxon::TotalOrder: return "total-order";
    case StructureTaxon::PartialOrder: return "partial-order";
    case StructureTaxon::Classification: return "classification";
    case StructureTaxon::ReflexiveAsymmetricNoSym: return "reflexive-asymmetric-no-symmetric";
    case StructureTaxon::ReflexiveAsymmetricWithSym: return "reflexive-asymmetric-with-symmetric";
    case StructureTaxon::Mixed: return "mixed";
  }
  return "?";
}

inline StructureTaxon classify(const RelationStructure& s) {
  require_transitive(s);
  const std::size_t n = s.size();
  if (is_irreflexive(s)) {
    for (Index a = 0; a < n; ++a)
      for (Index b = a + 1; b < n; ++b)
        if (!s.has(a, b) && !s.has(b, a)) return StructureTaxon::PartialOrder;
    return StructureTaxon::TotalOrder;
  }
  if (!is_reflexive(s)) return StructureTaxon::Mixed;
  bool asymmetric = false, symmetric_distinct = false;
  for (Index a = 0; a < n; ++a)
    for (Index b = a + 1; b < n; ++b) {
      const bool ab = s.has(a, b), ba = s.has(b, a);
      asymmetric = asymmetric || (ab != ba);
      symmetric_distinct = symmetric_distinct || (ab && ba);
    }
  if (!asymmetric) return StructureTaxon::Classification;
  return symmetric_distinct ? StructureTaxon::ReflexiveAsymmetricWithSym : StructureTaxon::ReflexiveAsymmetricNoSym;
}

/// True iff the deductive closure of `p` is exactly the relation of `s`.
inline bool is_base(const RelationStructure& p, const RelationStructure& s) {
  if (p.names() != s.names()) return false;
  return closed_rows(p.rows()) == s.rows();
}

enum class BaseMode { Irreducible, Absolute, All };

inline constexpr std::size_t kDefaultBaseCap = 20;

namespace detail {

/// Subsets of a fixed pair list, encoded as bit masks over that list.
struct PairSubsets {
  std::vector<std::string> names;
  std::vector<std::pair<Index, Index>> pairs;
  std::vector<ElementSet> target;

  std::vector<ElementSet> rows_of(std::uint64_t mask) const {
    std::vector<ElementSet> rows(names.size(), ElementSet(names.size()));
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1U) rows[pairs[k].first].set(pairs[k].second);
    return rows;
  }
  bool generates(std::uint64_t mask) const { return closed_rows(rows_of(mask)) == target; }
  RelationStructure structure(std::uint64_t mask) const { return RelationStructure::from_rows(names, rows_of(mask)); }
};

/// Visits every subset of `bits` with exactly k members, in increasing numeric order.
template <typename F>
void for_each_k_subset(const std::vector<std::size_t>& bits, std::size_t k, F&& f) {
  const std::size_t m = bits.size();
  if (k > m) return;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  for (;;) {
    std::uint64_t mask = 0;
    for (auto p : pick) mask |= std::uint64_t{1} << bits[p];
    f(mask);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

/// Members that cannot be dropped from the full set: every generating subset contains
/// them.
template <typename Generates>
std::uint64_t essential_members(std::size_t m, Generates&& generates) {
  const std::uint64_t full = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  std::uint64_t essential = 0;
  for (std::size_t k = 0; k < m; ++k)
    if (!generates(full & ~(std::uint64_t{1} << k))) essential |= std::uint64_t{1} << k;
  return essential;
}

/// Generating subsets of an m-member family whose generating sets are upward closed.
/// Returns masks in (cardinality, lexicographic) order.
template <typename Generates>
std::vector<std::uint64_t> generating_family(std::size_t m, BaseMode mode, std::size_t cap, Generates&& generates,
                                             const std::string& what) {
  const std::uint64_t essential = essential_members(m, generates);
  if (mode == BaseMode::Absolute) {
    if (generates(essential)) return {essential};
    return {};
  }
  if (m > cap || m >= 63) throw CapExceeded(what, cap, m);
  std::vector<std::size_t> optional;
  for (std::size_t k = 0; k < m; ++k)
    if (!(essential >> k & 1U)) optional.push_back(k);

  std::vector<std::uint64_t> found;
  for (std::size_t k = 0; k <= optional.size(); ++k) {
    std::vector<std::uint64_t> level;
    for_each_k_subset(optional, k, [&](std::uint64_t extra) {
      const std::uint64_t mask = essential | extra;
      if (mode == BaseMode::Irreducible) {
        for (auto f : found)
          if ((f & mask) == f) return;
      }
      if (generates(mask)) level.push_back(mask);
    });
    found.insert(found.end(), level.begin(), level.end());
  }
  auto key = [](std::uint64_t mask) {
    std::vector<int> bits;
    for (int b = 0; b < 64; ++b)
      if (mask >> b & 1U) bits.push_back(b);
    return std::make_pair(bits.size(), bits);
  };
  std::sort(found.begin(), found.end(), [&](auto a, auto b) { return key(a) < key(b); });
  return found;
}

}  // namespace detail

/// Bases of a transitively closed structure. Absolute mode needs no cap: a pair that
/// cannot be derived from all the others lies in every base, and an absolute base
/// exists iff those pairs already form a base.
inline std::vector<RelationStructure> bases(const RelationStructure& s, BaseMode mode,
                                            std::size_t cap = kDefaultBaseCap) {
  require_transitive(s);
  detail::PairSubsets family{s.names(), s.pairs(), s.rows()};
  if (family.pairs.size() >= 64) {
    if (mode != BaseMode::Absolute) throw CapExceeded("base search pair count", cap, family.pairs.size());
    // Absolute base without masks.
    std::vector<ElementSet> essential(s.size(), ElementSet(s.size()));
    for (auto [a, b] : family.pairs) {
      auto rows = s.rows();
      rows[a].reset(b);
      if (closed_rows(rows) != s.rows()) essential[a].set(b);
    }
    if (closed_rows(essential) != s.rows()) return {};
    return {RelationStructure::from_rows(s.names(), essential)};
  }
  auto masks = detail::generating_family(
      family.pairs.size(), mode, cap, [&](std::uint64_t m) { return family.generates(m); }, "base search pair count");
  std::vector<RelationStructure> out;
  for (auto m : masks) out.push_back(family.structure(m));
  return out;
}

/// Union of universes and pairs, then deductive closure.
inline RelationStructure confuse(const std::vector<RelationStructure>& structures) {
  std::set<std::string> names;
  for (const auto& s : structures) names.insert(s.names().begin(), s.names().end());
  std::vector<NamePair> pairs;
  for (const auto& s : structures) {
    auto p = s.named_pairs();
    pairs.insert(pairs.end(), p.begin(), p.end());
  }
  return transitive_closure(RelationStructure({names.begin(), names.end()}, pairs));
}

/// Shortest directed cycle a -> ... -> a of the relation's digraph (loops count as
/// length-1 cycles). Ties go to the canonically least start element.
inline std::optional<std::vector<Index>> shortest_cycle(const RelationStructure& g) {
  const std::size_t n = g.size();
  std::optional<std::vector<Index>> best;
  for (Index s = 0; s < n; ++s) {
    std::vector<std::size_t> dist(n, SIZE_MAX);
    std::vector<Index> parent(n, s);
    std::queue<Index> q;
    dist[s] = 0;
    q.push(s);
    std::optional<Index> closing;
    while (!q.empty() && !closing) {
      Index v = q.front();
      q.pop();
      if (g.has(v, s)) {
        closing = v;
        break;
      }
      for_each_member(g.successors(v), [&](Index w) {
        if (dist[w] == SIZE_MAX) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          q.push(w);
        }
      });
    }
    if (!closing) continue;
    std::vector<Index> path;
    for (Index v = *closing; v != s; v = parent[v]) path.push_back(v);
    path.push_back(s);
    std::reverse(path.begin(), path.end());
    path.push_back(s);
    if (!best || path.size() < best->size()) best = std::move(path);
  }
  return best;
}

struct ConfusionCheck {
  bool is_order = true;
  std::vector<std::string> cycle;  // empty when is_order
};

inline bool is_order(const RelationStructure& s) { return is_irreflexive(s) && is_transitive(s); }

/// Con-fusion of orders is an order iff the union digraph of their pairs has no cycle.
inline ConfusionCheck confusion_is_order(const std::vector<RelationStructure>& orders) {
  std::set<std::string> names;
  std::vector<NamePair> pairs;
  for (const auto& s : orders) {
    if (!is_irreflexive(s)) throw NotAnOrder("con-fusion input contains a reflexive element");
    require_transitive(s);
    names.insert(s.names().begin(), s.names().end());
    auto p = s.named_pairs();
    pairs.insert(pairs.end(), p.begin(), p.end());
  }
  RelationStructure u({names.begin(), names.end()}, pairs);
  ConfusionCheck out;
  if (auto c = shortest_cycle(u)) {
    out.is_order = false;
    for (Index i : *c) out.cycle.push_back(u.name(i));
  }
  return out;
}

}  // namespace ordinal
