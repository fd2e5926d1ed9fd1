#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "element_set.hpp"
#include "error.hpp"

namespace ordinal {

using NamePair = std::pair<std::string, std::string>;

/// A finite universe with an arbitrary set of ordered pairs.
///
/// Elements are kept in canonical order (sorted by name) and the relation is a dense
/// adjacency matrix stored both by rows (successors) and by columns (predecessors).
/// Values are immutable once built.
class RelationStructure {
 public:
  RelationStructure() = default;

  RelationStructure(std::vector<std::string> names, const std::vector<NamePair>& pairs) {
    std::sort(names.begin(), names.end());
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i].empty()) throw Error("element names must be nonempty");
      if (i > 0 && names[i] == names[i - 1]) throw NameCollision(names[i]);
    }
    names_ = std::move(names);
    succ_.assign(names_.size(), ElementSet(names_.size()));
    for (const auto& [a, b] : pairs) succ_[index(a)].set(index(b));
    rebuild_columns();
  }

  /// Builds from rows indexed consistently with `names`, which need not be sorted.
  static RelationStructure from_rows(std::vector<std::string> names, std::vector<ElementSet> rows) {
    const std::size_t n = names.size();
    if (rows.size() != n) throw Error("row count does not match universe size");
    std::vector<Index> perm(n);
    std::iota(perm.begin(), perm.end(), Index{0});
    std::sort(perm.begin(), perm.end(), [&](Index a, Index b) { return names[a] < names[b]; });
    bool identity = true;
    for (std::size_t i = 0; i < n; ++i) identity = identity && perm[i] == i;

    RelationStructure s;
    if (identity) {
      s.names_ = std::move(names);
      s.succ_ = std::move(rows);
    } else {
      std::vector<Index> where(n);
      for (std::size_t i = 0; i < n; ++i) where[perm[i]] = i;
      s.names_.resize(n);
      s.succ_.assign(n, ElementSet(n));
      for (std::size_t i = 0; i < n; ++i) {
        s.names_[where[i]] = std::move(names[i]);
        for_each_member(rows[i], [&](Index j) { s.succ_[where[i]].set(where[j]); });
      }
    }
    for (std::size_t i = 1; i < n; ++i)
      if (s.names_[i] == s.names_[i - 1]) throw NameCollision(s.names_[i]);
    for (std::size_t i = 0; i < n; ++i)
      if (s.names_[i].empty()) throw Error("element names must be nonempty");
    s.rebuild_columns();
    return s;
  }

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Index i) const { return names_.at(i); }

  std::optional<Index> find(const std::string& name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return std::nullopt;
    return static_cast<Index>(it - names_.begin());
  }

  Index index(const std::string& name) const {
    if (auto i = find(name)) return *i;
    throw UnknownElement(name);
  }

  bool has(Index a, Index b) const { return succ_[a].test(b); }
  bool has(const std::string& a, const std::string& b) const { return has(index(a), index(b)); }

  /// {x : (a, x) present}
  const ElementSet& successors(Index a) const { return succ_[a]; }
  /// {x : (x, a) present}
  const ElementSet& predecessors(Index a) const { return pred_[a]; }
  const std::vector<ElementSet>& rows() const noexcept { return succ_; }

  std::size_t pair_count() const {
    std::size_t c = 0;
    for (const auto& r : succ_) c += r.count();
    return c;
  }

  std::vector<std::pair<Index, Index>> pairs() const {
    std::vector<std::pair<Index, Index>> out;
    for (Index a = 0; a < size(); ++a) for_each_member(succ_[a], [&](Index b) { out.emplace_back(a, b); });
    return out;
  }

  std::vector<NamePair> named_pairs() const {
    std::vector<NamePair> out;
    for (auto [a, b] : pairs()) out.emplace_back(names_[a], names_[b]);
    return out;
  }

  ElementSet set_of(const std::vector<std::string>& names) const {
    ElementSet s(size());
    for (const auto& n : names) s.set(index(n));
    return s;
  }

  std::vector<std::string> names_of(const ElementSet& s) const {
    std::vector<std::string> out;
    for_each_member(s, [&](Index i) { out.push_back(names_[i]); });
    return out;
  }

  ElementSet none() const { return ElementSet(size()); }
  ElementSet all() const { return full_set(size()); }

  /// Induced substructure on `keep`; indices are renumbered canonically.
  RelationStructure induced(const ElementSet& keep) const {
    const auto idx = members(keep);
    std::vector<std::string> names;
    std::vector<ElementSet> rows(idx.size(), ElementSet(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i) {
      names.push_back(names_[idx[i]]);
      for (std::size_t j = 0; j < idx.size(); ++j)
        if (succ_[idx[i]].test(idx[j])) rows[i].set(j);
    }
    return from_rows(std::move(names), std::move(rows));
  }

  friend bool operator==(const RelationStructure& a, const RelationStructure& b) {
    return a.names_ == b.names_ && a.succ_ == b.succ_;
  }

 private:
  void rebuild_columns() {
    pred_.assign(size(), ElementSet(size()));
    for (Index a = 0; a < size(); ++a) for_each_member(succ_[a], [&](Index b) { pred_[b].set(a); });
  }

  std::vector<std::string> names_;
  std::vector<ElementSet> succ_;
  std::vector<ElementSet> pred_;
};

enum class ComparabilityKind { SymmetricPair, AsymmetricForward, AsymmetricBackward, Incomparable };

inline const char* to_string(ComparabilityKind k) {
  switch (k) {
    case ComparabilityKind::SymmetricPair: return "symmetric";
    case ComparabilityKind::AsymmetricForward: return "asymmetric-forward";
    case ComparabilityKind::AsymmetricBackward: return "asymmetric-backward";
    case ComparabilityKind::Incomparable: return "incomparable";
  }
  return "?";
}

inline ComparabilityKind comparability(const RelationStructure& s, Index a, Index b) {
  const bool ab = s.has(a, b), ba = s.has(b, a);
  if (ab && ba) return ComparabilityKind::SymmetricPair;
  if (ab) return ComparabilityKind::AsymmetricForward;
  if (ba) return ComparabilityKind::AsymmetricBackward;
  return ComparabilityKind::Incomparable;
}

inline ComparabilityKind comparability(const RelationStructure& s, const std::string& a, const std::string& b) {
  return comparability(s, s.index(a), s.index(b));
}

/// Elements comparable to some member of `x`, plus `x` itself (one φ step).
inline ElementSet adjoin_comparable(const RelationStructure& s, const ElementSet& x) {
  ElementSet out = x;
  for_each_member(x, [&](Index i) {
    out |= s.successors(i);
    out |= s.predecessors(i);
  });
  return out;
}

/// Universes of the connected pieces, ordered by least element.
inline std::vector<ElementSet> component_sets(const RelationStructure& s) {
  std::vector<ElementSet> out;
  ElementSet assigned(s.size());
  for (Index a = 0; a < s.size(); ++a) {
    if (assigned.test(a)) continue;
    ElementSet piece = singleton(s.size(), a);
    for (;;) {
      ElementSet next = adjoin_comparable(s, piece);
      if (next == piece) break;
      piece = std::move(next);
    }
    assigned |= piece;
    out.push_back(std::move(piece));
  }
  return out;
}

inline std::vector<RelationStructure> connected_components(const RelationStructure& s) {
  std::vector<RelationStructure> out;
  for (const auto& piece : component_sets(s)) out.push_back(s.induced(piece));
  return out;
}

enum class Side { Left, Right };

/// One-step left (predecessor) or right (successor) closure; not iterated.
inline ElementSet close_side(const RelationStructure& s, const ElementSet& a, Side side) {
  ElementSet out = a;
  for_each_member(a, [&](Index i) { out |= side == Side::Left ? s.predecessors(i) : s.successors(i); });
  return out;
}

inline RelationStructure invert(const RelationStructure& s) {
  std::vector<ElementSet> rows;
  rows.reserve(s.size());
  for (Index i = 0; i < s.size(); ++i) rows.push_back(s.predecessors(i));
  return RelationStructure::from_rows(s.names(), std::move(rows));
}

struct Kernel {
  RelationStructure kernel;
  ElementSet residue;  // over the original universe
};

inline Kernel kernel(const RelationStructure& s) {
  ElementSet touched(s.size());
  for (Index i = 0; i < s.size(); ++i)
    if (s.successors(i).any() || s.predecessors(i).any()) touched.set(i);
  return {s.induced(touched), ~touched};
}

namespace detail {

struct IsoSearch {
  const RelationStructure& a;
  const RelationStructure& b;
  std::vector<Index> map;     // a-index -> b-index
  std::vector<bool> used;

  bool compatible(Index x, Index y) const {
    if (a.has(x, x) != b.has(y, y)) return false;
    if (a.successors(x).count() != b.successors(y).count()) return false;
    if (a.predecessors(x).count() != b.predecessors(y).count()) return false;
    for (Index p = 0; p < x; ++p) {
      if (a.has(p, x) != b.has(map[p], y)) return false;
      if (a.has(x, p) != b.has(y, map[p])) return false;
    }
    return true;
  }

  bool extend(Index x) {
    if (x == a.size()) return true;
    for (Index y = 0; y < b.size(); ++y) {
      if (used[y] || !compatible(x, y)) continue;
      used[y] = true;
      map[x] = y;
      if (extend(x + 1)) return true;
      used[y] = false;
    }
    return false;
  }
};

}  // namespace detail

/// Pair-preserving and pair-reflecting bijection between the two kernels, if any.
inline std::optional<std::vector<NamePair>> wide_isomorphic(const RelationStructure& s1, const RelationStructure& s2) {
  const auto k1 = kernel(s1).kernel;
  const auto k2 = kernel(s2).kernel;
  if (k1.size() != k2.size() || k1.pair_count() != k2.pair_count()) return std::nullopt;
  detail::IsoSearch search{k1, k2, std::vector<Index>(k1.size()), std::vector<bool>(k2.size(), false)};
  if (!search.extend(0)) return std::nullopt;
  std::vector<NamePair> out;
  for (Index i = 0; i < k1.size(); ++i) out.emplace_back(k1.name(i), k2.name(search.map[i]));
  return out;
}

inline constexpr std::size_t kDefaultSubjoinCap = 12;

/// Display name of a subset, e.g. "{a,b}".
inline std::string subset_name(const RelationStructure& s, const ElementSet& a) {
  std::string out = "{";
  bool first = true;
  for_each_member(a, [&](Index i) {
    out += (first ? "" : ",") + s.name(i);
    first = false;
  });
  return out + "}";
}

/// One level of the subset structure: (A, B) related iff both are nonempty and every
/// a in A is related to every b in B.
inline RelationStructure subjoin(const RelationStructure& s, std::size_t size_cap = kDefaultSubjoinCap) {
  const std::size_t n = s.size();
  if (n > size_cap || n >= 31) throw CapExceeded("subjoin universe size", size_cap, n);
  const std::size_t count = std::size_t{1} << n;
  std::vector<std::uint32_t> row_mask(n, 0);
  for (Index a = 0; a < n; ++a)
    for_each_member(s.successors(a), [&](Index b) { row_mask[a] |= std::uint32_t{1} << b; });

  std::vector<std::string> names(count);
  std::vector<ElementSet> rows(count, ElementSet(count));
  for (std::size_t mask = 0; mask < count; ++mask) {
    ElementSet sub(n);
    std::uint32_t common = static_cast<std::uint32_t>(count - 1);
    for (Index a = 0; a < n; ++a)
      if (mask >> a & 1U) {
        sub.set(a);
        common &= row_mask[a];
      }
    names[mask] = subset_name(s, sub);
    if (mask == 0 || common == 0) continue;
    // every nonempty subset of `common`
    for (std::uint32_t b = common; b != 0; b = (b - 1) & common) rows[mask].set(b);
  }
  return RelationStructure::from_rows(std::move(names), std::move(rows));
}

/// First (a, b, c) in canonical order with (a,b), (b,c) present and (a,c) absent.
inline std::optional<std::array<Index, 3>> transitivity_violation(const RelationStructure& s) {
  for (Index a = 0; a < s.size(); ++a) {
    for (auto b = s.successors(a).find_first(); b != ElementSet::npos; b = s.successors(a).find_next(b)) {
      ElementSet missing = s.successors(b) - s.successors(a);
      if (missing.any()) return std::array<Index, 3>{a, b, missing.find_first()};
    }
  }
  return std::nullopt;
}

inline bool is_transitive(const RelationStructure& s) { return !transitivity_violation(s).has_value(); }

inline void require_transitive(const RelationStructure& s) {
  if (auto w = transitivity_violation(s)) throw NotTransitive({s.name((*w)[0]), s.name((*w)[1]), s.name((*w)[2])});
}

inline bool is_irreflexive(const RelationStructure& s) {
  for (Index i = 0; i < s.size(); ++i)
    if (s.has(i, i)) return false;
  return true;
}

inline bool is_reflexive(const RelationStructure& s) {
  for (Index i = 0; i < s.size(); ++i)
    if (!s.has(i, i)) return false;
  return true;
}

}  // namespace ordinal
