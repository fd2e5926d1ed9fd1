// Acceptance run: one line per criterion, exact checks, wall-clock limits.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "ordinal/ordinal.hpp"
#include "oracle.hpp"

using namespace ordinal;
using oracle::Mask;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

Mask full_mask(std::size_t n) { return n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1); }

std::string pname(const Poset& p) {
  std::ostringstream s;
  s << p.size() << " elements, " << p.relation().pair_count() << " pairs";
  for (const auto& [a, b] : p.relation().named_pairs()) s << " " << a << "<" << b;
  return s.str();
}

std::vector<Poset> posets_upto(std::size_t n) {
  std::vector<Poset> out;
  for (std::size_t k = 0; k <= n; ++k)
    for (auto& p : labeled_posets(k)) out.push_back(std::move(p));
  return out;
}

// ---- 1 ---------------------------------------------------------------------

Outcome gap_counts() {
  Outcome o;
  const std::vector<std::pair<Poset, std::size_t>> cases{
      {antichain({"a"}), 3}, {chain({"a", "b"}), 6}, {antichain({"x", "y"}), 7}};
  std::ostringstream d;
  for (const auto& [p, want] : cases) {
    const auto got = enumerate_gaps(p).size();
    const auto brute = oracle::gaps(oracle::matrix_of(p)).size();
    d << got << "/" << brute << " ";
    o.require(got == want && brute == want, "gap count " + std::to_string(got) + " vs oracle " +
                                                std::to_string(brute) + " vs expected " + std::to_string(want));
  }
  if (o.ok) o.detail = "counts " + d.str() + "(library/oracle)";
  return o;
}

// ---- 2 ---------------------------------------------------------------------

Outcome phi_sizes() {
  Outcome o;
  auto t = phi_tower(2);
  o.require(t.complete && t.stages.size() == 3, "tower incomplete");
  if (!o.ok) return o;
  std::vector<std::size_t> sizes, recomputed{1};
  for (const auto& s : t.stages) sizes.push_back(s.poset.size());
  for (std::size_t k = 0; k + 1 < t.stages.size(); ++k) {
    const auto m = oracle::matrix_of(t.stages[k].poset);
    recomputed.push_back(m.size() + oracle::gaps(m).size());
  }
  o.require(sizes == std::vector<std::size_t>{1, 4, 22}, "sizes differ from [1, 4, 22]");
  o.require(recomputed == sizes, "oracle recount differs");
  if (o.ok) o.detail = "sizes [1, 4, 22], oracle recount [1, 4, 22]";
  return o;
}

// ---- 3 ---------------------------------------------------------------------

Outcome extension_completeness() {
  Outcome o;
  std::size_t checked = 0;
  const std::vector<std::size_t> counts{1, 1, 3, 19, 219};
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto ps = labeled_posets(n);
    o.require(ps.size() == counts[n] && oracle::count_labeled_posets(n) == counts[n],
              "labeled poset count mismatch at n=" + std::to_string(n));
    for (const auto& p : ps) {
      std::set<std::pair<Mask, Mask>> got;
      const auto gaps = enumerate_gaps(p);
      for (const auto& g : gaps) {
        const auto q = fill_gap(p, g, "new");
        const Index z = q.index("new");
        Mask below = 0, above = 0;
        for (Index i = 0; i < p.size(); ++i) {
          const Index j = q.index(p.name(i));
          if (q.less(j, z)) below |= Mask{1} << i;
          if (q.less(z, j)) above |= Mask{1} << i;
        }
        got.emplace(below, above);
        o.require(oracle::strict_order(oracle::matrix_of(q)), "filled structure is not an order: " + pname(p));
      }
      o.require(got.size() == gaps.size(), "two gaps give the same extension: " + pname(p));
      o.require(got == oracle::one_point_extensions(oracle::matrix_of(p)), "extension sets differ: " + pname(p));
      ++checked;
    }
  }
  if (o.ok) o.detail = std::to_string(checked) + " posets (n<=4; 219 at n=4), extensions == fills";
  return o;
}

// ---- 4 ---------------------------------------------------------------------

Outcome natural_gap_order() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& p : posets_upto(4)) {
    const auto gaps = enumerate_gaps(p);
    const auto order = gap_order(p, gaps);
    const auto m = oracle::matrix_of(order);
    o.require(oracle::strict_order(m), "gap order not irreflexive+transitive: " + pname(p));
    std::vector<std::string> fresh;
    for (std::size_t k = 0; k < gaps.size(); ++k) fresh.push_back("n" + std::to_string(k));
    const auto filled = fill_simultaneous(p, gaps, fresh);
    ElementSet fresh_set(filled.size());
    for (const auto& f : fresh) fresh_set.set(filled.index(f));
    const auto restricted = filled.induced(fresh_set);
    for (std::size_t g = 0; g < gaps.size(); ++g) {
      const std::string tg = gap_token(p, gaps[g]);
      for (std::size_t h = 0; h < gaps.size(); ++h) {
        const bool lt = order.less(tg, gap_token(p, gaps[h]));
        if (lt) o.require(gaps[g].initial.is_subset_of(gaps[h].initial), "g <1 g' without A within A': " + pname(p));
        o.require(lt == filled.less(fresh[g], fresh[h]), "filled new elements disagree with gap order: " + pname(p));
        // independent rule: something of B lies in A'
        o.require(lt == ((oracle::mask_of(gaps[g].final) & oracle::mask_of(gaps[h].initial)) != 0),
                  "gap order differs from the B-meets-A' rule: " + pname(p));
      }
    }
    // the pairwise check above is the isomorphism n_k -> gap k
    o.require(restricted.size() == order.size() &&
                  restricted.relation().pair_count() == order.relation().pair_count(),
              "restriction not isomorphic to gap order: " + pname(p));
    ++checked;
  }
  if (o.ok) o.detail = std::to_string(checked) + " posets (n<=4)";
  return o;
}

// ---- 5 ---------------------------------------------------------------------

// cuts (D, rest) with D down-closed and D < rest, on the order restricted to `within`
std::size_t oracle_cut_count(const oracle::Matrix& m, Mask within) {
  std::size_t cuts = 0;
  for (Mask d = 0; d <= full_mask(m.size()); ++d) {
    if ((d & ~within) != 0) continue;
    bool closed = true;
    for (std::size_t a = 0; a < m.size(); ++a)
      for (std::size_t b = 0; b < m.size(); ++b)
        if (oracle::in(within, a) && oracle::in(d, b) && m[a][b] && !oracle::in(d, a)) closed = false;
    if (closed && oracle::all_less(m, d, within & ~d)) ++cuts;
  }
  return cuts;
}

Outcome block_decomposition_check() {
  Outcome o;
  std::mt19937 rng(5);
  const auto ps = labeled_posets(5);
  o.require(ps.size() == 4231 && oracle::count_labeled_posets(5) == 4231, "five-element count is not 4231");
  for (const auto& p : ps) {
    const auto m = oracle::matrix_of(p);
    const auto blocks = block_decomposition(p);
    Mask seen = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      const Mask bi = oracle::mask_of(blocks[i]);
      o.require(bi != 0 && (bi & seen) == 0, "blocks overlap or are empty: " + pname(p));
      seen |= bi;
      // the only cuts inside a block are the two trivial ones
      o.require(oracle_cut_count(m, bi) == 2, "block has an interior disjunctive gap: " + pname(p));
      for (std::size_t j = 0; j < blocks.size(); ++j) {
        if (i == j) continue;
        const Mask bj = oracle::mask_of(blocks[j]);
        const bool ij = (oracle::upper(m, bi) & bj) != 0;  // B_i <1 B_j
        o.require(ij == (i < j), "blocks not totally ordered under <1: " + pname(p));
        if (i < j) o.require(oracle::all_less(m, bi, bj), "earlier block not below later block: " + pname(p));
      }
    }
    o.require(seen == full_mask(5), "blocks do not cover: " + pname(p));
    // relabel and compare
    std::vector<std::size_t> perm(5);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::string> names(5);
    for (std::size_t i = 0; i < 5; ++i) names[i] = "r" + std::to_string(perm[i]);
    const auto q = Poset::assume_valid(RelationStructure::from_rows(names, p.relation().rows()));
    std::vector<std::vector<std::string>> mapped, again;
    for (const auto& b : blocks) {
      std::vector<std::string> v;
      for_each_member(b, [&](Index x) { v.push_back(names[x]); });
      std::sort(v.begin(), v.end());
      mapped.push_back(v);
    }
    for (const auto& b : block_decomposition(q)) again.push_back(q.names_of(b));
    o.require(mapped == again, "decomposition changes under relabeling: " + pname(p));
  }
  if (o.ok) o.detail = "4231 posets (n=5), oracle count 4231";
  return o;
}

// ---- 6 ---------------------------------------------------------------------

bool oracle_gap(const oracle::Matrix& m, Mask a, Mask b) {
  return oracle::down_closed(m, a) && oracle::up_closed(m, b) && oracle::all_less(m, a, b) && (a & b) == 0;
}

// order among tower elements over a materialized stage, from first principles
bool oracle_host_less(const oracle::Matrix& m, const HostElement& x, const HostElement& y) {
  if (!x.symbolic() && !y.symbolic()) return m[*x.index][*y.index];
  if (!x.symbolic()) return oracle::in(oracle::mask_of(y.gap->initial), *x.index);
  if (!y.symbolic()) return oracle::in(oracle::mask_of(x.gap->final), *y.index);
  return (oracle::mask_of(x.gap->final) & oracle::mask_of(y.gap->initial)) != 0;
}

Outcome universality() {
  Outcome o;
  auto tower = phi_tower(2);
  o.require(tower.complete, "tower to stage 2 incomplete");
  if (!o.ok) return o;
  std::size_t direct = 0;
  for (std::size_t n = 0; n <= 2; ++n) {
    const auto& host = tower.stages[n].poset;
    const auto hm = oracle::matrix_of(host);
    for (const auto& p : labeled_posets(n)) {
      const auto e = find_embedding(p, host);
      o.require(e.has_value(), "no embedding into stage " + std::to_string(n) + ": " + pname(p));
      if (!e) continue;
      std::set<Index> used(e->image.begin(), e->image.end());
      o.require(used.size() == p.size(), "embedding not injective");
      for (Index a = 0; a < p.size(); ++a)
        for (Index b = 0; b < p.size(); ++b)
          o.require(p.less(a, b) == hm[e->image[a]][e->image[b]], "embedding does not preserve order: " + pname(p));
      ++direct;
    }
  }
  const auto threes = labeled_posets(3);
  o.require(threes.size() == 19 && oracle::count_labeled_posets(3) == 19, "three-element count is not 19");
  std::size_t psi = 0, symbolic = 0, runs = 0;
  auto check = [&](const Poset& p, const std::vector<Index>& order, const std::vector<PhiStage>& stages) {
    const std::size_t top = stages.size() - 1;
    const auto lm = oracle::matrix_of(stages.back().poset);
    PsiEmbedding e;
    try {
      e = embed_via_psi(p, order, stages);
    } catch (const Error& err) {
      o.require(false, std::string("psi failed: ") + err.what() + " on " + pname(p));
      return false;
    }
    bool ok = e.materialized_stage == top;
    for (Index a = 0; a < p.size(); ++a) {
      const auto& h = e.image[a];
      if (h.symbolic()) {
        ++symbolic;
        ok = ok && h.stage == top + 1 && oracle_gap(lm, oracle::mask_of(h.gap->initial), oracle::mask_of(h.gap->final));
      } else {
        ok = ok && *h.index < lm.size();
      }
      for (Index b = 0; b < p.size(); ++b) {
        if (a != b) ok = ok && !(e.image[a] == e.image[b]);
        ok = ok && p.less(a, b) == oracle_host_less(lm, e.image[a], e.image[b]);
      }
    }
    o.require(ok, "psi image is not an embedding: " + pname(p));
    return ok;
  };
  const std::vector<PhiStage> upto1(tower.stages.begin(), tower.stages.begin() + 2);
  std::size_t symbolic2 = 0;
  for (const auto& p : threes) {
    std::vector<Index> order{0, 1, 2};
    bool every = true;
    do {
      ++runs;
      every = check(p, order, tower.stages) && every;
    } while (std::next_permutation(order.begin(), order.end()));
    psi += every;
  }
  // same posets with only stage 1 materialized: stage-2 images are symbolic
  const std::size_t before = symbolic;
  for (const auto& p : threes) {
    std::vector<Index> order{0, 1, 2};
    do check(p, order, upto1);
    while (std::next_permutation(order.begin(), order.end()));
  }
  symbolic2 = symbolic - before;
  symbolic = before;
  if (o.ok)
    o.detail = std::to_string(direct) + " direct (n<=2), " + std::to_string(psi) + "/19 via psi over stage 2 (" +
               std::to_string(runs) + " well-orders, " + std::to_string(symbolic) + " symbolic); over stage 1 " +
               std::to_string(symbolic2) + " symbolic stage-2 images";
  return o;
}

// ---- 7 ---------------------------------------------------------------------

Outcome identities() {
  Outcome o;
  std::mt19937 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const auto p = random_poset(n, rng, 0.1 + 0.05 * (trial % 9));
    const auto m = oracle::matrix_of(p);
    const Mask all = full_mask(n);
    const Mask a = static_cast<Mask>(rng()) & all;
    const Mask b = a | (static_cast<Mask>(rng()) & all);
    auto set = [&](Mask x) { return oracle::set_of(x, n); };
    auto U = [&](Mask x) { return oracle::mask_of(upper(p, set(x))); };
    auto L = [&](Mask x) { return oracle::mask_of(lower(p, set(x))); };
    auto D = [&](Mask x) { return oracle::mask_of(down(p, set(x))); };
    auto Up = [&](Mask x) { return oracle::mask_of(up(p, set(x))); };
    const std::string where = " (trial " + std::to_string(trial) + ")";

    o.require(U(a) == oracle::upper(m, a) && L(a) == oracle::lower(m, a), "bounds differ from oracle" + where);
    // [1]
    Mask inter = all;
    for (std::size_t x = 0; x < n; ++x)
      if (oracle::in(a, x)) inter &= U(Mask{1} << x);
    o.require(U(a) == inter, "[1] fails" + where);
    // [2]
    o.require(oracle::all_less(m, L(a), a) && oracle::all_less(m, a, U(a)), "[2] fails" + where);
    // [3]
    o.require((U(b) & ~U(a)) == 0 && (L(b) & ~L(a)) == 0, "[3] fails" + where);
    // [4]
    Mask uni = 0;
    for (Mask h = 0; h <= all; ++h)
      if (oracle::all_less(m, a, h)) uni |= h;
    o.require(U(a) == uni, "[4] fails" + where);
    // [5]
    o.require(U(L(U(a))) == U(a) && L(U(L(a))) == L(a), "[5] fails" + where);
    // [7]
    o.require((D(a) & ~D(b)) == 0 && (Up(a) & ~Up(b)) == 0, "[7] fails" + where);
    o.require(D(a) == oracle::down(m, a) && Up(a) == oracle::up(m, a), "closures differ from oracle" + where);
    // [8]
    o.require(oracle::up_closed(m, U(a)), "[8] fails" + where);
    // [9]
    o.require(U(a) == U(D(a)), "[9] fails" + where);
    // [10]: any c between a and down(a) has the same down-closure
    const Mask c = a | (static_cast<Mask>(rng()) & D(a));
    o.require(D(c) == D(a), "bad [10] instance" + where);
    o.require(U(c) == U(a), "[10] fails" + where);
  }
  if (o.ok) o.detail = "1000 instances, n in 1..8";
  return o;
}

// ---- 8 ---------------------------------------------------------------------

Outcome chain_antichain_laws() {
  Outcome o;
  std::size_t pairs = 0, gap_checks = 0;
  const auto ps = posets_upto(5);
  for (const auto& p : ps) {
    const auto m = oracle::matrix_of(p);
    const auto lines = complete_lines(p);
    const auto ts = complete_transversals(p);
    std::set<Mask> lm, tm;
    for (const auto& l : lines) lm.insert(oracle::mask_of(l.members));
    for (const auto& t : ts) tm.insert(oracle::mask_of(t.members));
    if (p.size() > 0) {
      auto wl = oracle::maximal_chains(m), wt = oracle::maximal_antichains(m);
      o.require(lm == std::set<Mask>(wl.begin(), wl.end()), "complete lines differ from oracle: " + pname(p));
      o.require(tm == std::set<Mask>(wt.begin(), wt.end()), "transversals differ from oracle: " + pname(p));
    }
    for (auto l : lm)
      for (auto t : tm) {
        o.require(__builtin_popcount(l & t) <= 1, "|L meet T| > 1: " + pname(p));
        ++pairs;
      }
    for (auto t : tm)
      for (std::size_t z = 0; z < p.size(); ++z) {
        if (oracle::in(t, z)) continue;
        bool below = false, above = false;
        for (std::size_t x = 0; x < p.size(); ++x)
          if (oracle::in(t, x)) below |= m[x][z], above |= m[z][x];
        o.require(below != above, "trichotomy fails: " + pname(p));
      }
    const auto gaps = enumerate_gaps(p);
    for (const auto& l : lines) {
      const Mask lmask = oracle::mask_of(l.members);
      for (const auto& g : gaps) {
        const Mask ga = oracle::mask_of(g.initial), gb = oracle::mask_of(g.final);
        const Mask neutral = full_mask(p.size()) & ~ga & ~gb;
        const bool passes = (lmask & neutral) == 0;
        const bool criterion = (oracle::upper(m, lmask & ga) & oracle::lower(m, lmask & gb)) == 0;
        const auto r = line_passes_gap(p, l, g);
        o.require(r.passes == passes, "passes differs from oracle: " + pname(p));
        o.require(r.criterion_agrees && passes == criterion, "criterion disagrees: " + pname(p));
        if (neutral == 0) o.require(passes, "line misses a disjunctive gap: " + pname(p));
        ++gap_checks;
      }
    }
  }
  if (o.ok)
    o.detail = std::to_string(ps.size()) + " posets (n<=5), " + std::to_string(pairs) + " line/transversal pairs, " +
               std::to_string(gap_checks) + " line/gap checks";
  return o;
}

// ---- 9 ---------------------------------------------------------------------

Outcome deduction_properties() {
  Outcome o;
  std::mt19937 rng(9);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const auto s = random_closed_structure(n, rng, 0.1 + 0.05 * (trial % 8));
    const auto m = oracle::matrix_of(s);
    o.require(oracle::transitive(m), "generated structure is not closed");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (!(m[a][b] && m[b][a])) continue;
        o.require(m[a][a] && m[b][b], "(a) symmetric pair without loops");
        for (std::size_t c = 0; c < n; ++c)
          if (m[a][c] && m[c][a] && b != c) o.require(m[b][c] && m[c][b], "(b) symmetric to a third, not to each other");
      }
  }
  std::size_t checked = 0;
  for (const auto& p : posets_upto(5)) {
    const auto m = oracle::matrix_of(p);
    const auto found = bases(p.relation(), BaseMode::Absolute);
    o.require(found.size() == 1, "no absolute base: " + pname(p));
    if (found.size() != 1) continue;
    const auto got = oracle::matrix_of(found[0]);
    o.require(got == oracle::stripped_essentials(m), "absolute base differs from stripping oracle: " + pname(p));
    o.require(got == oracle::covers(m), "absolute base differs from covers: " + pname(p));
    ++checked;
  }
  if (o.ok) o.detail = "1000 closed structures; absolute base == covers on " + std::to_string(checked) + " posets";
  return o;
}

// ---- 10 --------------------------------------------------------------------

bool oracle_line_basis(const Poset& p, const std::vector<CompleteLine>& lines, std::uint32_t mask) {
  oracle::Matrix m(p.size(), std::vector<bool>(p.size()));
  for (std::size_t k = 0; k < lines.size(); ++k)
    if (mask >> k & 1U)
      for (std::size_t i = 0; i < lines[k].chain.size(); ++i)
        for (std::size_t j = i + 1; j < lines[k].chain.size(); ++j) m[lines[k].chain[i]][lines[k].chain[j]] = true;
  return oracle::closure(m) == oracle::matrix_of(p);
}

Outcome linear_bases_check() {
  Outcome o;
  const Poset diamond({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}, {"a", "d"}});
  const Poset npos({"a", "b", "c", "d"}, {{"a", "c"}, {"b", "c"}, {"b", "d"}});
  auto dr = linear_basis_report(diamond);
  o.require(dr.line_count == 2 && dr.irreducible.size() == 1 &&
                dr.irreducible[0].line_indices == std::vector<std::size_t>{0, 1},
            "diamond irreducible bases wrong");
  o.require(dr.absolute && dr.absolute->line_indices == std::vector<std::size_t>{0, 1}, "diamond basis not absolute");
  o.require(!oracle_line_basis(diamond, complete_lines(diamond), 1) &&
                !oracle_line_basis(diamond, complete_lines(diamond), 2) &&
                oracle_line_basis(diamond, complete_lines(diamond), 3),
            "diamond oracle disagrees");
  auto nr = linear_basis_report(npos);
  o.require(nr.line_count == 3 && nr.irreducible.size() == 1 &&
                nr.irreducible[0].line_indices == std::vector<std::size_t>{0, 1, 2},
            "N-poset does not need all three lines");
  const auto nl = complete_lines(npos);
  for (std::uint32_t mask = 0; mask < 7; ++mask) o.require(!oracle_line_basis(npos, nl, mask), "N-poset oracle disagrees");

  std::size_t checked = 0;
  for (const auto& p : posets_upto(5)) {
    const auto lines = complete_lines(p);
    if (lines.size() > 12) continue;
    const std::uint32_t total = 1U << lines.size();
    std::vector<bool> is_basis(total);
    std::size_t count = 0;
    for (std::uint32_t mask = 0; mask < total; ++mask) count += is_basis[mask] = oracle_line_basis(p, lines, mask);
    for (std::uint32_t mask = 0; mask < total; ++mask)
      if (is_basis[mask])
        for (std::size_t k = 0; k < lines.size(); ++k)
          o.require(is_basis[mask | 1U << k], "basis family not upward closed (oracle): " + pname(p));
    o.require(basis_final_section_check(p, 12), "library final-section check fails: " + pname(p));
    o.require(basis_family(p, BaseMode::All, 12).size() == count, "basis count differs from oracle: " + pname(p));
    ++checked;
  }
  if (o.ok) o.detail = "diamond/N-poset exact; upward closed on " + std::to_string(checked) + " posets";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all{
      {1, "gap counts", 1, gap_counts},
      {2, "phi tower sizes", 5, phi_sizes},
      {3, "extension completeness", 120, extension_completeness},
      {4, "natural gap order", 120, natural_gap_order},
      {5, "block decomposition", 300, block_decomposition_check},
      {6, "universality", 60, universality},
      {7, "identity suite", 60, identities},
      {8, "chain/antichain laws", 300, chain_antichain_laws},
      {9, "transitive deduction", 120, deduction_properties},
      {10, "linear bases", 300, linear_bases_check},
  };
  int failed = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.limit_s;
    const bool pass = o.ok && in_time;
    if (!pass) ++failed;
    std::printf("criterion %2d %-24s %s  %.3fs (limit %.0fs)%s  %s\n", c.id, c.name, pass ? "PASS" : "FAIL", secs,
                c.limit_s, in_time ? "" : " TIMEOUT", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}
