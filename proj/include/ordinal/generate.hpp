#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "deduction.hpp"
#include "poset.hpp"

namespace ordinal {

/// "a", "b", ... for small universes, "x26", "x27", ... beyond the alphabet.
inline std::string element_label(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "x" + std::to_string(i);
}

inline std::vector<std::string> element_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(element_label(i));
  return out;
}

inline constexpr std::size_t kMaxLabeledPosetSize = 6;

/// Every strict partial order on the labels a, b, ... (brute force over the three
/// states of each unordered pair, keeping the transitive ones).
inline std::vector<Poset> labeled_posets(std::size_t n) {
  if (n > kMaxLabeledPosetSize) throw CapExceeded("labeled poset universe size", kMaxLabeledPosetSize, n);
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < slots.size(); ++k) total *= 3;

  const auto names = element_labels(n);
  std::vector<Poset> out;
  std::vector<std::uint32_t> succ(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::fill(succ.begin(), succ.end(), 0U);
    std::uint64_t c = code;
    for (auto [i, j] : slots) {
      const auto state = c % 3;
      c /= 3;
      if (state == 1) succ[i] |= 1U << j;
      if (state == 2) succ[j] |= 1U << i;
    }
    bool transitive = true;
    for (std::size_t a = 0; a < n && transitive; ++a)
      for (std::size_t b = 0; b < n && transitive; ++b)
        if ((succ[a] >> b & 1U) && (succ[b] & ~succ[a])) transitive = false;
    if (!transitive) continue;
    std::vector<ElementSet> rows(n, ElementSet(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (succ[a] >> b & 1U) rows[a].set(b);
    out.push_back(Poset::assume_valid(RelationStructure::from_rows(names, std::move(rows))));
  }
  return out;
}

/// Random order on n labeled elements: a random DAG over a shuffled ranking, closed
/// transitively. `density` is the probability of each generating edge.
template <typename Rng>
Poset random_poset(std::size_t n, Rng& rng, double density = 0.3) {
  std::vector<std::size_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[i] = i;
  std::shuffle(rank.begin(), rank.end(), rng);
  std::bernoulli_distribution edge(density);
  std::vector<ElementSet> rows(n, ElementSet(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) rows[rank[i]].set(rank[j]);
  return Poset::assume_valid(RelationStructure::from_rows(element_labels(n), closed_rows(std::move(rows))));
}

/// Random transitively closed structure (loops allowed), for the symmetric-pair laws.
template <typename Rng>
RelationStructure random_closed_structure(std::size_t n, Rng& rng, double density = 0.2) {
  std::bernoulli_distribution edge(density);
  std::vector<ElementSet> rows(n, ElementSet(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (edge(rng)) rows[i].set(j);
  return RelationStructure::from_rows(element_labels(n), closed_rows(std::move(rows)));
}

}  // namespace ordinal
