#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "deduction.hpp"
#include "lines.hpp"
#include "poset.hpp"

namespace ordinal {

inline constexpr std::size_t kDefaultLineCap = 20;

struct LinearBasis {
  std::vector<std::size_t> line_indices;  // into complete_lines(p), ascending

  friend bool operator==(const LinearBasis& x, const LinearBasis& y) { return x.line_indices == y.line_indices; }
};

namespace detail {

/// Rows of the total order a line induces.
inline void add_line_rows(const CompleteLine& line, std::vector<ElementSet>& rows) {
  for (std::size_t i = 0; i < line.chain.size(); ++i)
    for (std::size_t j = i + 1; j < line.chain.size(); ++j) rows[line.chain[i]].set(line.chain[j]);
}

struct LineFamily {
  const Poset& p;
  std::vector<CompleteLine> lines;

  bool generates(std::uint64_t mask) const {
    std::vector<ElementSet> rows(p.size(), ElementSet(p.size()));
    for (std::size_t k = 0; k < lines.size(); ++k)
      if (mask >> k & 1U) add_line_rows(lines[k], rows);
    return closed_rows(std::move(rows)) == p.relation().rows();
  }
};

inline LinearBasis basis_of(std::uint64_t mask) {
  LinearBasis b;
  for (std::size_t k = 0; k < 64; ++k)
    if (mask >> k & 1U) b.line_indices.push_back(k);
  return b;
}

}  // namespace detail

inline bool is_linear_basis(const Poset& p, const std::vector<CompleteLine>& lines,
                            const std::vector<std::size_t>& selected) {
  std::vector<ElementSet> rows(p.size(), ElementSet(p.size()));
  for (auto k : selected) {
    if (k >= lines.size()) throw BadIndex("line index " + std::to_string(k) + " out of range");
    detail::add_line_rows(lines[k], rows);
  }
  return closed_rows(std::move(rows)) == p.relation().rows();
}

inline bool is_linear_basis(const Poset& p, const std::vector<std::size_t>& selected) {
  return is_linear_basis(p, complete_lines(p), selected);
}

/// Irreducible, absolute, or all linear bases, by (size, lexicographic) order.
inline std::vector<LinearBasis> basis_family(const Poset& p, BaseMode mode, std::size_t cap = kDefaultLineCap) {
  detail::LineFamily fam{p, complete_lines(p)};
  if (fam.lines.size() >= 64) throw CapExceeded("complete line count", cap, fam.lines.size());
  auto masks = detail::generating_family(
      fam.lines.size(), mode, cap, [&](std::uint64_t m) { return fam.generates(m); }, "complete line count");
  std::vector<LinearBasis> out;
  for (auto m : masks) out.push_back(detail::basis_of(m));
  return out;
}

/// Checks by exhaustion that every superset of a basis is a basis.
inline bool basis_final_section_check(const Poset& p, std::size_t cap = kDefaultLineCap) {
  detail::LineFamily fam{p, complete_lines(p)};
  const std::size_t m = fam.lines.size();
  if (m > cap || m >= 32) throw CapExceeded("complete line count", cap, m);
  const std::uint64_t total = std::uint64_t{1} << m;
  std::vector<bool> basis(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) basis[mask] = fam.generates(mask);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (!basis[mask]) continue;
    for (std::size_t k = 0; k < m; ++k)
      if (!basis[mask | std::uint64_t{1} << k]) return false;
  }
  return true;
}

/// A selected line is redundant when each of its adjacent pairs lies on another
/// selected line.
inline bool line_redundant(const std::vector<CompleteLine>& lines, const std::vector<std::size_t>& selected,
                           std::size_t which) {
  for (std::size_t i = 0; i + 1 < lines.at(which).chain.size(); ++i) {
    const Index a = lines[which].chain[i], b = lines[which].chain[i + 1];
    bool covered = false;
    for (auto k : selected)
      if (k != which && lines.at(k).members.test(a) && lines[k].members.test(b)) covered = true;
    if (!covered) return false;
  }
  return true;
}

struct LinearBasisReport {
  std::size_t line_count = 0;
  std::vector<LinearBasis> irreducible;
  std::optional<LinearBasis> absolute;
  /// Irreducible bases form a complete transversal of the basis family under inclusion
  /// (case a) or not (case b).
  char irreducible_case = 'a';
};

inline LinearBasisReport linear_basis_report(const Poset& p, std::size_t cap = kDefaultLineCap) {
  LinearBasisReport r;
  r.line_count = complete_lines(p).size();
  r.irreducible = basis_family(p, BaseMode::Irreducible, cap);
  auto abs = basis_family(p, BaseMode::Absolute, cap);
  if (!abs.empty()) r.absolute = abs.front();
  const auto all = basis_family(p, BaseMode::All, cap);
  auto subset = [](const LinearBasis& x, const LinearBasis& y) {
    return std::includes(y.line_indices.begin(), y.line_indices.end(), x.line_indices.begin(), x.line_indices.end());
  };
  bool complete = true;
  for (const auto& b : all) {
    bool comparable = false;
    for (const auto& i : r.irreducible) comparable = comparable || subset(i, b) || subset(b, i);
    complete = complete && comparable;
  }
  r.irreducible_case = complete ? 'a' : 'b';
  return r;
}

/// Class token: sorted members joined by '+'.
inline std::string class_token(std::vector<std::string> members) {
  std::sort(members.begin(), members.end());
  std::string s;
  for (std::size_t i = 0; i < members.size(); ++i) s += (i ? "+" : "") + members[i];
  return s;
}

/// Identifies the elements of each class across disjoint chains, then con-fuses.
inline Poset glue_orders(const std::vector<std::vector<std::string>>& chains,
                         const std::vector<std::vector<std::string>>& classes) {
  std::map<std::string, std::pair<std::size_t, std::size_t>> where;  // element -> (chain, position)
  for (std::size_t c = 0; c < chains.size(); ++c)
    for (std::size_t i = 0; i < chains[c].size(); ++i)
      if (!where.emplace(chains[c][i], std::make_pair(c, i)).second) throw NameCollision(chains[c][i]);

  std::map<std::string, std::size_t> cls;
  std::vector<std::string> tokens;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (classes[k].empty()) throw Error("empty class");
    for (const auto& e : classes[k]) {
      if (!where.count(e)) throw UnknownElement(e);
      if (!cls.emplace(e, k).second) throw Error("element '" + e + "' appears in two classes");
    }
    tokens.push_back(class_token(classes[k]));
  }
  for (const auto& [e, _] : where)
    if (!cls.count(e)) throw Error("element '" + e + "' belongs to no class");

  // Condition 1: a class meets a chain at most once.
  std::vector<std::map<std::size_t, std::size_t>> at(classes.size());  // class -> chain -> position
  for (std::size_t k = 0; k < classes.size(); ++k)
    for (const auto& e : classes[k]) {
      auto [c, i] = where[e];
      if (!at[k].emplace(c, i).second)
        throw Condition1Violation("class " + tokens[k] + " has two elements of chain " + std::to_string(c + 1));
    }

  // Condition 2: classes meeting several chains are ordered alike in each.
  for (std::size_t p = 0; p < classes.size(); ++p)
    for (std::size_t q = p + 1; q < classes.size(); ++q) {
      std::optional<bool> p_first;
      for (const auto& [c, i] : at[p]) {
        auto it = at[q].find(c);
        if (it == at[q].end()) continue;
        const bool before = i < it->second;
        if (p_first && *p_first != before)
          throw Condition2Violation("classes " + tokens[p] + " and " + tokens[q] + " are ordered differently");
        p_first = before;
      }
    }

  std::vector<RelationStructure> images;
  for (const auto& ch : chains) {
    std::vector<std::string> names;
    for (const auto& e : ch) names.push_back(tokens[cls[e]]);
    images.push_back(chain(names).relation());
  }
  images.push_back(RelationStructure(tokens, {}));
  auto check = confusion_is_order(images);
  if (!check.is_order) throw CycleError(check.cycle);
  return Poset(confuse(images));
}

}  // namespace ordinal
