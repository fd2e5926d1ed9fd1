#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gaps.hpp"
#include "generate.hpp"
#include "poset.hpp"

namespace ordinal {

inline constexpr std::size_t kDefaultElementBudget = 50'000;

/// Where a stage element came from: the seed, or a gap of the previous stage.
struct Provenance {
  std::size_t level = 0;        // stage at which the element first appears
  std::optional<Gap> gap;       // over the poset of stage level - 1
  std::string gap_token;        // empty for the seed
};

/// One level of the tower obtained by repeatedly filling every gap at once.
struct PhiStage {
  std::size_t level = 0;
  Poset poset;
  std::vector<Provenance> provenance;  // by element index of `poset`
  /// Previous-stage index -> index in this stage (identity names, re-sorted).
  std::vector<Index> carried;
  /// Gap of the previous stage -> the element that occupies it here.
  std::map<Gap, Index, GapLess> spawned;
};

inline std::string stage_element_name(const std::string& prefix, std::size_t level, std::size_t k) {
  return prefix + std::to_string(level) + "_" + std::to_string(k);
}

inline PhiStage seed_stage(const std::string& prefix = "p") {
  PhiStage s;
  s.poset = Poset({prefix + "0"}, {});
  s.provenance = {Provenance{}};
  return s;
}

/// Fills every gap of `prev` simultaneously. New elements are named
/// <prefix><level>_<k> with k the position of the gap in canonical order.
inline PhiStage phi_step(const PhiStage& prev, std::size_t element_budget = kDefaultElementBudget,
                         const std::string& prefix = "p") {
  const Poset& p = prev.poset;
  if (p.size() >= element_budget) throw BudgetExceeded("stage size", element_budget, p.size());
  std::vector<Gap> gaps;
  try {
    gaps = enumerate_gaps(p, element_budget - p.size());
  } catch (const BudgetExceeded& e) {
    throw BudgetExceeded("stage " + std::to_string(prev.level + 1) + " size", element_budget,
                         p.size() + e.measured());
  }
  PhiStage next;
  next.level = prev.level + 1;
  std::vector<std::string> fresh;
  for (std::size_t k = 0; k < gaps.size(); ++k) fresh.push_back(stage_element_name(prefix, next.level, k));
  detail::require_fresh(p, fresh);

  auto names = detail::extended_names(p, fresh);
  // Closed form of the simultaneous filling (fill_simultaneous checks the same rule).
  auto rows = detail::natural_rows(p, gaps);
  next.poset = Poset::assume_valid(RelationStructure::from_rows(names, std::move(rows)));

  next.provenance.resize(next.poset.size());
  next.carried.resize(p.size());
  for (Index i = 0; i < p.size(); ++i) {
    const Index j = next.poset.index(p.name(i));
    next.carried[i] = j;
    next.provenance[j] = prev.provenance[i];
  }
  for (std::size_t k = 0; k < gaps.size(); ++k) {
    const Index j = next.poset.index(fresh[k]);
    next.provenance[j] = Provenance{next.level, gaps[k], gap_token(p, gaps[k])};
    next.spawned.emplace(gaps[k], j);
  }
  return next;
}

/// Overload for an arbitrary starting order (every element counts as level 0).
inline PhiStage phi_step(const Poset& p, std::size_t element_budget = kDefaultElementBudget,
                         const std::string& prefix = "p") {
  PhiStage s;
  s.poset = p;
  s.provenance.assign(p.size(), Provenance{});
  return phi_step(s, element_budget, prefix);
}

struct PhiTower {
  std::vector<PhiStage> stages;
  std::size_t requested = 0;
  bool complete = true;
  std::string budget_report;  // why the tower stopped early, if it did
};

/// Stages 0..k from the one-element seed; stops early (complete = false) when the next
/// stage would exceed the element budget.
inline PhiTower phi_tower(std::size_t k, std::size_t element_budget = kDefaultElementBudget,
                          const std::string& prefix = "p") {
  PhiTower t;
  t.requested = k;
  t.stages.push_back(seed_stage(prefix));
  while (t.stages.size() <= k) {
    try {
      t.stages.push_back(phi_step(t.stages.back(), element_budget, prefix));
    } catch (const BudgetExceeded& e) {
      t.complete = false;
      t.budget_report = e.what();
      break;
    }
  }
  return t;
}

struct Embedding {
  std::vector<Index> image;  // target index -> host index
};

inline bool is_embedding(const Poset& target, const Poset& host, const std::vector<Index>& image) {
  if (image.size() != target.size()) return false;
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] >= host.size()) return false;
    for (std::size_t j = 0; j < image.size(); ++j) {
      if (i != j && image[i] == image[j]) return false;
      if (target.less(i, j) != host.less(image[i], image[j])) return false;
    }
  }
  return true;
}

namespace detail {

struct EmbeddingSearch {
  const Poset& target;
  const Poset& host;
  std::vector<Index> order;  // target indices in search order
  std::vector<Index> image;
  std::vector<bool> used;

  bool fits(std::size_t depth, Index y) const {
    const Index x = order[depth];
    if (host.above(y).count() < target.above(x).count()) return false;
    if (host.below(y).count() < target.below(x).count()) return false;
    for (std::size_t d = 0; d < depth; ++d) {
      const Index w = order[d];
      if (target.less(w, x) != host.less(image[w], y)) return false;
      if (target.less(x, w) != host.less(y, image[w])) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    for (Index y = 0; y < host.size(); ++y) {
      if (used[y] || !fits(depth, y)) continue;
      used[y] = true;
      image[order[depth]] = y;
      if (extend(depth + 1)) return true;
      used[y] = false;
    }
    return false;
  }
};

}  // namespace detail

/// Order-preserving and order-reflecting injection of `target` into `host`; the first
/// one in canonical search order.
inline std::optional<Embedding> find_embedding(const Poset& target, const Poset& host) {
  if (target.size() > host.size()) return std::nullopt;
  detail::EmbeddingSearch s{target, host, {}, std::vector<Index>(target.size()), std::vector<bool>(host.size())};
  for (Index i = 0; i < target.size(); ++i) s.order.push_back(i);
  if (!s.extend(0)) return std::nullopt;
  return Embedding{s.image};
}

/// Canonical linear extension: repeatedly take the least-index minimal element.
inline std::vector<Index> linear_extension(const Poset& p) {
  std::vector<Index> out;
  ElementSet left = p.all();
  while (left.any()) {
    auto m = left.find_first();
    while ((p.below(m) & left).any()) m = left.find_next(m);
    out.push_back(m);
    left.reset(m);
  }
  return out;
}

/// An element of the host tower: either materialized in the last materialized stage,
/// or a symbolic element of the following stage, identified by the gap it fills.
struct HostElement {
  std::size_t stage = 0;
  std::optional<Index> index;  // in the last materialized stage
  std::optional<Gap> gap;      // over the last materialized stage
  std::string label;

  bool symbolic() const { return gap.has_value(); }
  friend bool operator==(const HostElement& x, const HostElement& y) {
    return x.index == y.index && x.gap == y.gap;
  }
};

struct PsiEmbedding {
  std::vector<HostElement> image;  // by target index
  std::vector<Index> well_order;
  std::size_t materialized_stage = 0;
  std::size_t max_stage = 0;
};

/// Order among host elements: materialized pairs use the stage order, symbolic ones the
/// natural gap rule.
inline bool host_less(const Poset& last, const HostElement& x, const HostElement& y) {
  if (!x.symbolic() && !y.symbolic()) return last.less(*x.index, *y.index);
  if (!x.symbolic()) return y.gap->initial.test(*x.index);
  if (!y.symbolic()) return x.gap->final.test(*y.index);
  return natural_less(*x.gap, *y.gap);
}

inline bool verify_psi_embedding(const Poset& target, const Poset& last, const PsiEmbedding& e) {
  const auto& img = e.image;
  if (img.size() != target.size()) return false;
  for (std::size_t i = 0; i < img.size(); ++i)
    for (std::size_t j = 0; j < img.size(); ++j) {
      if (i != j && img[i] == img[j]) return false;
      if (target.less(i, j) != host_less(last, img[i], img[j])) return false;
    }
  return true;
}

namespace detail {

/// Index bookkeeping across the materialized stages.
struct TowerIndex {
  const std::vector<PhiStage>& stages;
  std::vector<std::vector<Index>> to_last;    // stage t index -> last stage index
  std::vector<std::vector<Index>> from_last;  // last index -> stage t index (or npos)
  std::vector<std::size_t> birth;             // last index -> stage of first appearance

  explicit TowerIndex(const std::vector<PhiStage>& s) : stages(s) {
    const std::size_t k = s.size() - 1;
    const std::size_t n = s[k].poset.size();
    to_last.resize(s.size());
    from_last.assign(s.size(), std::vector<Index>(n, static_cast<Index>(-1)));
    for (std::size_t t = 0; t <= k; ++t) {
      const auto& names = s[t].poset.names();
      to_last[t].resize(names.size());
      for (Index i = 0; i < names.size(); ++i) {
        const Index j = s[k].poset.index(names[i]);
        to_last[t][i] = j;
        from_last[t][j] = i;
      }
    }
    birth.resize(n);
    for (Index j = 0; j < n; ++j) birth[j] = s[k].provenance[j].level;
  }

  std::size_t last_level() const { return stages.size() - 1; }

  ElementSet restrict_to_stage(const ElementSet& in_last, std::size_t t) const {
    ElementSet out(stages[t].poset.size());
    for_each_member(in_last, [&](Index j) {
      if (birth[j] <= t) out.set(from_last[t][j]);
    });
    return out;
  }
};

}  // namespace detail

/// Embeds `target` into the tower one element at a time following `well_order`. A new
/// element r looks at the images below it (D) and above it (U), closes them in the
/// last materialized stage, and restricts to stage t: the element spawned in stage
/// t + 1 by (↓D, ↑U) is a candidate. The lowest t whose candidate is new and relates
/// correctly to every image so far wins; t = (highest stage used so far) always does.
/// Elements one stage past the materialized tower are symbolic.
inline PsiEmbedding embed_via_psi(const Poset& target, const std::vector<Index>& well_order,
                                  const std::vector<PhiStage>& tower) {
  const std::size_t n = target.size();
  {
    std::vector<Index> sorted = well_order;
    std::sort(sorted.begin(), sorted.end());
    bool perm = sorted.size() == n;
    for (std::size_t i = 0; perm && i < sorted.size(); ++i) perm = sorted[i] == i;
    if (!perm) throw Error("well order is not a permutation of the target universe");
  }
  if (tower.empty()) throw Error("embedding needs at least the seed stage");
  const detail::TowerIndex tix(tower);
  const std::size_t last_level = tix.last_level();
  const Poset& last = tower.back().poset;

  PsiEmbedding out;
  out.well_order = well_order;
  out.materialized_stage = last_level;
  out.image.resize(n);
  if (n == 0) return out;

  const Index seed = tix.to_last[0][0];
  out.image[well_order[0]] = HostElement{0, seed, std::nullopt, last.name(seed)};
  std::size_t highest = 0;

  for (std::size_t step = 1; step < n; ++step) {
    const Index r = well_order[step];
    ElementSet below_imgs = last.none(), above_imgs = last.none();
    for (std::size_t prior = 0; prior < step; ++prior) {
      const Index x = well_order[prior];
      if (out.image[x].symbolic()) continue;
      if (target.less(x, r)) below_imgs.set(*out.image[x].index);
      if (target.less(r, x)) above_imgs.set(*out.image[x].index);
    }
    const ElementSet a_last = down(last, below_imgs);
    const ElementSet b_last = up(last, above_imgs);

    auto fits = [&](const HostElement& cand) {
      for (std::size_t prior = 0; prior < step; ++prior) {
        const Index x = well_order[prior];
        if (out.image[x] == cand) return false;
        if (target.less(x, r) != host_less(last, out.image[x], cand)) return false;
        if (target.less(r, x) != host_less(last, cand, out.image[x])) return false;
      }
      return true;
    };

    bool placed = false;
    for (std::size_t t = 0; t <= std::min(highest, last_level) && !placed; ++t) {
      HostElement cand;
      if (t == last_level) {
        Gap g{a_last, b_last};
        cand = HostElement{t + 1, std::nullopt, g, "gap " + gap_token(last, g) + " of stage " + std::to_string(t)};
      } else {
        Gap g{tix.restrict_to_stage(a_last, t), tix.restrict_to_stage(b_last, t)};
        const Index born = tower[t + 1].spawned.at(g);
        const Index j = tix.to_last[t + 1][born];
        cand = HostElement{t + 1, j, std::nullopt, last.name(j)};
      }
      if (t < highest && !fits(cand)) continue;
      out.image[r] = std::move(cand);
      highest = std::max(highest, t + 1);
      placed = true;
    }
    if (!placed) throw BudgetExceeded("materialized tower depth for embedding", last_level, highest + 1);
  }
  out.max_stage = highest;
  if (!verify_psi_embedding(target, last, out)) throw Error("psi construction produced an invalid embedding");
  return out;
}

/// Materializes the smallest tower that suffices (stage n - 2 for n ≥ 2) and embeds
/// along the canonical linear extension.
inline PsiEmbedding embed_via_psi(const Poset& target, std::size_t element_budget = kDefaultElementBudget,
                                  const std::string& prefix = "p") {
  const std::size_t depth = target.size() >= 2 ? target.size() - 2 : 0;
  auto tower = phi_tower(depth, element_budget, prefix);
  if (!tower.complete) throw BudgetExceeded("tower for psi embedding", element_budget, 0);
  return embed_via_psi(target, linear_extension(target), tower.stages);
}

struct UniversalityRow {
  std::size_t size = 0;
  std::size_t posets = 0;
  std::size_t embedded = 0;
  std::size_t failures = 0;
  std::size_t max_stage_used = 0;
  std::size_t target_stage = 0;           // the stage the theorem names (n)
  std::optional<std::size_t> direct_checked;  // posets found by direct search in stage n
  std::string note;
};

struct UniversalityReport {
  std::vector<UniversalityRow> rows;
  std::vector<std::size_t> stage_sizes;   // materialized tower sizes
  std::vector<double> conjectured;        // 2^n, reported beside the measurements
  std::string budget_report;
};

/// Embeds every labeled poset on n ≤ max_size elements through the tower and reports
/// counts, stage sizes, and the unasserted 2^n comparison column.
inline UniversalityReport universality_report(std::size_t max_size, std::size_t element_budget = kDefaultElementBudget) {
  UniversalityReport rep;
  const std::size_t want = max_size;  // stage n is where the theorem places n-element orders
  auto tower = phi_tower(want, element_budget);
  for (const auto& s : tower.stages) rep.stage_sizes.push_back(s.poset.size());
  for (std::size_t k = 0; k < rep.stage_sizes.size(); ++k) rep.conjectured.push_back(std::pow(2.0, double(k)));
  rep.budget_report = tower.budget_report;

  for (std::size_t n = 1; n <= max_size; ++n) {
    UniversalityRow row;
    row.size = n;
    row.target_stage = n;
    const std::size_t depth = n >= 2 ? n - 2 : 0;
    if (n > kMaxLabeledPosetSize) {
      row.note = "labeled poset generation capped at " + std::to_string(kMaxLabeledPosetSize);
      rep.rows.push_back(row);
      continue;
    }
    if (depth >= tower.stages.size()) {
      row.note = "tower stage " + std::to_string(depth) + " not materializable within budget";
      rep.rows.push_back(row);
      continue;
    }
    std::vector<PhiStage> prefix(tower.stages.begin(), tower.stages.begin() + static_cast<long>(depth) + 1);
    const auto posets = labeled_posets(n);
    row.posets = posets.size();
    for (const auto& t : posets) {
      try {
        auto e = embed_via_psi(t, linear_extension(t), prefix);
        ++row.embedded;
        row.max_stage_used = std::max(row.max_stage_used, e.max_stage);
      } catch (const Error&) {
        ++row.failures;
      }
    }
    if (n < tower.stages.size() && tower.stages[n].poset.size() <= 64) {
      std::size_t direct = 0;
      for (const auto& t : posets)
        if (find_embedding(t, tower.stages[n].poset)) ++direct;
      row.direct_checked = direct;
    }
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace ordinal
