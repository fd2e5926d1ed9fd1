#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace ordinal {

/// Position of an element in a structure's canonical (sorted-by-name) order.
using Index = std::size_t;

/// Subset of a structure's universe, one bit per canonical index.
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

inline ElementSet empty_set(std::size_t n) { return ElementSet(n); }

inline ElementSet full_set(std::size_t n) {
  ElementSet s(n);
  s.set();
  return s;
}

inline ElementSet singleton(std::size_t n, Index i) {
  ElementSet s(n);
  s.set(i);
  return s;
}

inline ElementSet make_set(std::size_t n, std::initializer_list<Index> members) {
  ElementSet s(n);
  for (Index i : members) s.set(i);
  return s;
}

inline std::vector<Index> members(const ElementSet& s) {
  std::vector<Index> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) out.push_back(i);
  return out;
}

template <typename F>
void for_each_member(const ElementSet& s, F&& f) {
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) f(static_cast<Index>(i));
}

/// Subset order used for every listing: by cardinality, then lexicographically by
/// ascending member indices.
inline bool canonical_less(const ElementSet& a, const ElementSet& b) {
  const auto ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  auto i = a.find_first(), j = b.find_first();
  while (i != ElementSet::npos && j != ElementSet::npos) {
    if (i != j) return i < j;
    i = a.find_next(i);
    j = b.find_next(j);
  }
  return false;
}

struct CanonicalLess {
  bool operator()(const ElementSet& a, const ElementSet& b) const { return canonical_less(a, b); }
};

inline std::size_t hash_set(const ElementSet& s) {
  std::size_t h = s.size() * 0x9e3779b97f4a7c15ULL;
  for_each_member(s, [&](Index i) { h ^= std::hash<std::size_t>{}(i) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); });
  return h;
}

}  // namespace ordinal
