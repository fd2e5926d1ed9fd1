#pragma once

#include <cstdlib>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordinal.hpp"

namespace ordinal::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kDomain = 1, kUsage = 2, kBudget = 3 };

/// Usage problems that are not syntax errors (kind hint mismatch, bad flag values).
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string format = "json";
  std::optional<std::size_t> budget;
  bool close = false;
  std::string seed_name = "p";
};

inline Json names_json(const Poset& p, const ElementSet& s) { return Json(p.names_of(s)); }
inline Json names_json(const RelationStructure& r, const ElementSet& s) { return Json(r.names_of(s)); }

inline Json structure_json(const RelationStructure& s) {
  Json pairs = Json::array();
  for (const auto& [a, b] : s.named_pairs()) pairs.push_back(Json::array({a, b}));
  return Json{{"elements", s.names()}, {"pairs", pairs}};
}

inline Json gap_json(const Poset& p, const Gap& g) {
  const auto c = classify_gap(p, g);
  return Json{{"token", gap_token(p, g)},
              {"initial", names_json(p, g.initial)},
              {"final", names_json(p, g.final)},
              {"kind", to_string(c.kind)},
              {"narrow", c.narrow},
              {"disjunctive", c.disjunctive}};
}

inline Json line_json(const Poset& p, const CompleteLine& l) {
  Json out = Json::array();
  for (auto i : l.chain) out.push_back(p.name(i));
  return out;
}

/// Human-readable rendering of a JSON report.
inline void render_text(const Json& j, std::ostream& out, const std::string& indent = "") {
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto flat = [&](const Json& v) {
    if (!v.is_array()) return false;
    for (const auto& x : v)
      if (x.is_object() || (x.is_array() && !x.empty() && (x[0].is_object() || x[0].is_array()))) return false;
    return true;
  };
  auto inline_array = [&](const Json& v) {
    std::string s;
    for (const auto& x : v) {
      if (!s.empty()) s += " ";
      if (x.is_array()) {
        std::string inner;
        for (const auto& y : x) inner += (inner.empty() ? "" : ",") + scalar(y);
        s += "(" + inner + ")";
      } else {
        s += scalar(x);
      }
    }
    return s;
  };
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const auto& v = it.value();
      if (v.is_object() || (v.is_array() && !flat(v))) {
        out << indent << it.key() << ":\n";
        render_text(v, out, indent + "  ");
      } else if (v.is_array()) {
        out << indent << it.key() << ": " << inline_array(v) << "\n";
      } else {
        out << indent << it.key() << ": " << scalar(v) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object() || (v.is_array() && !flat(v))) {
        out << indent << "-\n";
        render_text(v, out, indent + "  ");
      } else if (v.is_array()) {
        out << indent << "- " << inline_array(v) << "\n";
      } else {
        out << indent << "- " << scalar(v) << "\n";
      }
    }
  } else {
    out << indent << scalar(j) << "\n";
  }
}

class Session {
 public:
  Session(const Options& opt, std::string command) : opt_(opt), command_(std::move(command)) {}

  RelationFile load(const std::string& path) {
    inputs_.push_back(path);
    RelationFile f = parse(path);
    for (auto& w : f.warnings) warnings_.push_back(w);
    if (opt_.close) f.structure = transitive_closure(f.structure);
    if (f.kind) check_hint(f);
    return f;
  }

  Poset load_poset(const std::string& path) { return as_poset(load(path)); }

  Poset as_poset(const RelationFile& f) {
    if (!is_irreflexive(f.structure)) throw NotAnOrder(f.path + ": structure has reflexive elements");
    return Poset(f.structure);
  }

  std::size_t budget(std::size_t fallback) const {
    if (opt_.budget) return *opt_.budget;
    if (const char* env = std::getenv("ORDINAL_BUDGET")) {
      char* end = nullptr;
      const auto v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return fallback;
  }

  void warn(std::string w) { warnings_.push_back(std::move(w)); }
  const Options& options() const { return opt_; }

  Json report(Json result) const {
    Json input = inputs_.empty() ? Json(nullptr) : inputs_.size() == 1 ? Json(inputs_[0]) : Json(inputs_);
    return Json{{"command", command_}, {"input", input}, {"result", std::move(result)}, {"warnings", warnings_}};
  }

 private:
  void check_hint(const RelationFile& f) {
    const auto& s = f.structure;
    switch (*f.kind) {
      case KindHint::Raw:
        return;
      case KindHint::Preorder:
        if (!is_reflexive(s) || !is_transitive(s))
          throw UsageError(f.path + ": declared kind preorder but the structure is not reflexive and transitive");
        return;
      case KindHint::Poset:
        if (!is_irreflexive(s) || !is_transitive(s))
          throw UsageError(f.path + ": declared kind poset but the structure is not a strict order");
        return;
    }
  }

  Options opt_;
  std::string command_;
  std::vector<std::string> inputs_;
  std::vector<std::string> warnings_;
};

/// Thrown by handlers that produced a report but must still exit nonzero.
struct ReportedFailure {
  Json result;
  int code;
};

inline Json run_analyze(Session& s, const std::string& path) {
  const auto f = s.load(path);
  const auto& r = f.structure;
  Json out{{"size", r.size()}, {"pairs", r.pair_count()}};
  if (!is_transitive(r)) {
    const auto w = *transitivity_violation(r);
    out["transitive"] = false;
    out["witness"] = Json::array({r.name(w[0]), r.name(w[1]), r.name(w[2])});
    return out;
  }
  out["transitive"] = true;
  out["taxon"] = to_string(classify(r));
  out["components"] = component_sets(r).size();
  if (!is_irreflexive(r)) return out;
  const Poset p(r);
  const auto e = extremes(p);
  out["maxima"] = names_json(p, e.maxima);
  out["minima"] = names_json(p, e.minima);
  out["supremum"] = e.supremum ? Json(p.name(*e.supremum)) : Json(nullptr);
  out["infimum"] = e.infimum ? Json(p.name(*e.infimum)) : Json(nullptr);
  out["total"] = is_total(p);
  out["ramified"] = is_ramified(p);
  Json covers = Json::array();
  for (Index a = 0; a < p.size(); ++a)
    for_each_member(covers_of(p, a), [&](Index b) { covers.push_back(Json::array({p.name(a), p.name(b)})); });
  out["covers"] = covers;
  out["complete_lines"] = complete_lines(p).size();
  out["complete_transversals"] = complete_transversals(p).size();
  out["gaps"] = enumerate_gaps(p, s.budget(kDefaultGapBudget)).size();
  out["blocks"] = block_decomposition(p).size();
  return out;
}

inline Json run_closure(Session& s, const std::string& path) {
  const auto f = s.load(path);
  const auto c = deductive_closure(f.structure);
  Json stages = Json::array();
  for (const auto& st : c.trace.stages) stages.push_back(st.pair_count());
  return Json{{"rounds", c.trace.stage_count}, {"stage_pair_counts", stages}, {"closure", structure_json(c.closure)}};
}

inline Json run_classify(Session& s, const std::string& path) {
  const auto f = s.load(path);
  return Json{{"taxon", to_string(classify(f.structure))}};
}

inline Json run_quotient(Session& s, const std::string& path) {
  const auto f = s.load(path);
  const auto pre = Preorder::reflexivize(f.structure);
  if (pre.normalized()) s.warn("missing loops added before taking the quotient");
  const auto q = quotient(pre);
  Json classes = Json::array();
  for (std::size_t i = 0; i < q.classes.size(); ++i)
    classes.push_back(Json{{"representative", pre.relation().name(q.representatives[i])},
                           {"members", names_json(pre.relation(), q.classes[i])}});
  return Json{{"classes", classes}, {"order", structure_json(q.class_order.relation())}};
}

inline Json run_gaps(Session& s, const std::string& path) {
  const auto p = s.load_poset(path);
  const auto gaps = enumerate_gaps(p, s.budget(kDefaultGapBudget));
  Json list = Json::array();
  for (const auto& g : gaps) list.push_back(gap_json(p, g));
  return Json{{"count", gaps.size()}, {"gaps", list}};
}

inline Json run_gap_order(Session& s, const std::string& path) {
  const auto p = s.load_poset(path);
  return structure_json(gap_order(p, s.budget(kDefaultGapBudget)).relation());
}

inline Json run_fill(Session& s, const std::string& path, const std::vector<std::string>& gap_tokens,
                     const std::vector<std::string>& names, bool all) {
  const auto p = s.load_poset(path);
  std::vector<Gap> gaps;
  if (all) {
    if (!gap_tokens.empty()) throw UsageError("--all cannot be combined with --gap");
    gaps = enumerate_gaps(p, s.budget(kDefaultGapBudget));
  } else {
    if (gap_tokens.empty()) throw UsageError("fill needs --gap or --all");
    for (const auto& t : gap_tokens) gaps.push_back(parse_gap_token(p, t));
  }
  std::vector<std::string> fresh = names;
  if (fresh.empty()) {
    for (std::size_t k = 0; k < gaps.size(); ++k) fresh.push_back("g" + std::to_string(k));
  } else if (fresh.size() != gaps.size()) {
    throw UsageError("--name given " + std::to_string(fresh.size()) + " times for " + std::to_string(gaps.size()) +
                     " gaps");
  }
  const Poset out = gaps.size() == 1 ? fill_gap(p, gaps[0], fresh[0]) : fill_simultaneous(p, gaps, fresh);
  Json filled = Json::array();
  for (std::size_t k = 0; k < gaps.size(); ++k)
    filled.push_back(Json{{"name", fresh[k]}, {"gap", gap_token(p, gaps[k])}});
  return Json{{"filled", filled}, {"order", structure_json(out.relation())}};
}

inline Json run_phi(Session& s, const std::optional<std::string>& path, std::size_t steps) {
  const std::size_t budget = s.budget(kDefaultElementBudget);
  const auto& prefix = s.options().seed_name;
  std::vector<PhiStage> stages;
  if (path) {
    PhiStage start;
    start.poset = s.load_poset(*path);
    start.provenance.assign(start.poset.size(), Provenance{});
    stages.push_back(std::move(start));
  } else {
    stages.push_back(seed_stage(prefix));
  }
  std::string report;
  while (stages.size() <= steps) {
    try {
      stages.push_back(phi_step(stages.back(), budget, prefix));
    } catch (const BudgetExceeded& e) {
      report = e.what();
      break;
    }
  }
  Json sizes = Json::array();
  for (const auto& st : stages) sizes.push_back(st.poset.size());
  Json out{{"steps", steps}, {"sizes", sizes}, {"complete", report.empty()}};
  if (!report.empty()) {
    out["budget_report"] = report;
    throw ReportedFailure{out, kBudget};
  }
  const auto& last = stages.back().poset;
  if (last.size() <= 64) out["order"] = structure_json(last.relation());
  return out;
}

inline Json run_universal(Session& s, std::size_t max_size) {
  const auto rep = universality_report(max_size, s.budget(kDefaultElementBudget));
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    Json row{{"size", r.size},          {"posets", r.posets},           {"embedded", r.embedded},
             {"failures", r.failures},  {"max_stage_used", r.max_stage_used}};
    row["direct_embeddings"] = r.direct_checked ? Json(*r.direct_checked) : Json(nullptr);
    if (!r.note.empty()) row["note"] = r.note;
    rows.push_back(row);
  }
  Json out{{"rows", rows}, {"stage_sizes", rep.stage_sizes}, {"two_to_the_n", rep.conjectured}};
  if (!rep.budget_report.empty()) out["budget_report"] = rep.budget_report;
  return out;
}

inline Json run_chains(Session& s, const std::string& path) {
  const auto p = s.load_poset(path);
  const auto lines = complete_lines(p);
  Json list = Json::array();
  for (const auto& l : lines) list.push_back(line_json(p, l));
  return Json{{"count", lines.size()}, {"lines", list}, {"every_line_meets_every_transversal_once", problem13_search(p)}};
}

inline Json run_transversals(Session& s, const std::string& path) {
  const auto p = s.load_poset(path);
  Json list = Json::array();
  const auto ts = complete_transversals(p);
  for (const auto& t : ts) {
    const auto part = transversal_partition(p, t);
    list.push_back(Json{{"members", names_json(p, t.members)},
                        {"below", names_json(p, part.class1)},
                        {"above", names_json(p, part.class2)}});
  }
  return Json{{"count", ts.size()}, {"transversals", list}};
}

inline BaseMode parse_mode(const std::string& m) {
  if (m == "irreducible") return BaseMode::Irreducible;
  if (m == "absolute") return BaseMode::Absolute;
  if (m == "all") return BaseMode::All;
  throw UsageError("unknown mode '" + m + "'");
}

inline Json run_bases(Session& s, const std::string& path, const std::string& mode, std::size_t cap) {
  const auto f = s.load(path);
  const auto found = bases(f.structure, parse_mode(mode), cap);
  Json list = Json::array();
  for (const auto& b : found) list.push_back(structure_json(b)["pairs"]);
  return Json{{"mode", mode}, {"count", found.size()}, {"bases", list}};
}

inline Json run_linear_bases(Session& s, const std::string& path, std::size_t cap) {
  const auto p = s.load_poset(path);
  const auto lines = complete_lines(p);
  const auto rep = linear_basis_report(p, cap);
  Json ls = Json::array();
  for (const auto& l : lines) ls.push_back(line_json(p, l));
  Json irr = Json::array();
  for (const auto& b : rep.irreducible) irr.push_back(b.line_indices);
  return Json{{"lines", ls},
              {"irreducible", irr},
              {"absolute", rep.absolute ? Json(rep.absolute->line_indices) : Json(nullptr)},
              {"irreducible_case", std::string(1, rep.irreducible_case)},
              {"final_section", basis_final_section_check(p, cap)}};
}

inline Json run_decompose(Session& s, const std::string& path) {
  const auto p = s.load_poset(path);
  Json cuts = Json::array();
  for (const auto& g : disjunctive_chain(p)) cuts.push_back(gap_token(p, g));
  Json blocks = Json::array();
  for (const auto& b : block_decomposition(p)) blocks.push_back(names_json(p, b));
  return Json{{"disjunctive_gaps", cuts}, {"blocks", blocks}};
}

inline Json run_confuse(Session& s, const std::vector<std::string>& paths) {
  std::vector<RelationStructure> parts;
  bool all_orders = true;
  for (const auto& path : paths) {
    parts.push_back(s.load(path).structure);
    all_orders = all_orders && is_order(parts.back());
  }
  const auto out = confuse(parts);
  Json result{{"structure", structure_json(out)}, {"is_order", is_order(out)}};
  if (all_orders) {
    const auto check = confusion_is_order(parts);
    if (!check.is_order) {
      result["cycle"] = check.cycle;
      throw ReportedFailure{result, kDomain};
    }
  }
  return result;
}

inline Json run_embed(Session& s, const std::string& target_path, const std::optional<std::string>& host_path) {
  const auto target = s.load_poset(target_path);
  Json map = Json::object();
  if (host_path) {
    const auto host = s.load_poset(*host_path);
    const auto e = find_embedding(target, host);
    if (!e) throw ReportedFailure{Json{{"embeds", false}}, kDomain};
    for (Index i = 0; i < target.size(); ++i) map[target.name(i)] = host.name(e->image[i]);
    return Json{{"embeds", true}, {"method", "search"}, {"image", map}};
  }
  const auto e = embed_via_psi(target, s.budget(kDefaultElementBudget), s.options().seed_name);
  for (Index i = 0; i < target.size(); ++i)
    map[target.name(i)] = Json{{"stage", e.image[i].stage}, {"element", e.image[i].label},
                               {"symbolic", e.image[i].symbolic()}};
  Json order = Json::array();
  for (auto i : e.well_order) order.push_back(target.name(i));
  return Json{{"embeds", true},
              {"method", "tower"},
              {"materialized_stage", e.materialized_stage},
              {"well_order", order},
              {"image", map}};
}

inline Json run_glue(Session& s, const std::vector<std::string>& paths, const std::vector<std::string>& class_args) {
  std::vector<std::vector<std::string>> chains;
  std::set<std::string> all;
  for (const auto& path : paths) {
    const auto p = s.load_poset(path);
    if (!is_total(p)) throw Error(path + ": glue inputs must be chains");
    std::vector<std::string> names;
    for (auto i : ascending(p, p.all())) names.push_back(p.name(i));
    all.insert(names.begin(), names.end());
    chains.push_back(std::move(names));
  }
  std::vector<std::vector<std::string>> classes;
  std::set<std::string> covered;
  for (const auto& c : class_args) {
    std::vector<std::string> members;
    std::stringstream ss(c);
    std::string m;
    while (std::getline(ss, m, ','))
      if (!m.empty()) members.push_back(m);
    covered.insert(members.begin(), members.end());
    classes.push_back(std::move(members));
  }
  for (const auto& e : all)
    if (!covered.count(e)) classes.push_back({e});
  const auto out = glue_orders(chains, classes);
  return Json{{"order", structure_json(out.relation())}};
}

inline Json run_dot(Session& s, const std::string& path) {
  const auto p = s.load_poset(path);
  return Json{{"dot", export_dot(p)}};
}

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`; the return value is the process exit code.
inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite order toolkit", "ordinal"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.add_option("--budget", opt.budget, "Enumeration / element budget")
      ->check(CLI::PositiveNumber)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.add_flag("--close", opt.close, "Apply deductive closure to the input first");
  app.add_option("--seed-name", opt.seed_name, "Prefix for tower element names");

  std::string file;
  std::optional<std::string> opt_file;
  std::vector<std::string> files;
  std::vector<std::string> gap_tokens, names, class_args;
  bool all = false;
  std::size_t steps = 2, max_size = 3, cap = kDefaultBaseCap;
  std::string mode = "irreducible";

  auto one = [&](const char* name, const char* desc) {
    auto* c = app.add_subcommand(name, desc);
    c->add_option("file", file, "Input .ord file")->required();
    return c;
  };
  one("analyze", "Summary of a structure");
  one("closure", "Deductive closure with stage counts");
  one("classify", "Classify a transitive structure");
  one("quotient", "Quotient of a preorder by its symmetric classes");
  one("gaps", "Enumerate gaps");
  one("gap-order", "Natural order among the gaps");
  auto* fill = one("fill", "Fill gaps with new elements");
  fill->add_option("--gap", gap_tokens, "Gap as 'a,b|c'");
  fill->add_option("--name", names, "Name of the new element");
  fill->add_flag("--all", all, "Fill every gap at once");
  auto* phi = app.add_subcommand("phi", "Iterate the fill-all-gaps construction");
  phi->add_option("file", opt_file, "Starting order (default: one element)");
  phi->add_option("--steps", steps, "Number of steps");
  auto* uni = app.add_subcommand("universal", "Embed every small order into the tower");
  uni->add_option("--max-size", max_size, "Largest order size");
  one("chains", "Complete lines");
  one("transversals", "Complete transversals");
  auto* bas = one("bases", "Pair bases of a transitive structure");
  bas->add_option("--mode", mode, "irreducible, absolute or all");
  bas->add_option("--cap", cap, "Largest pair count searched");
  auto* lin = one("linear-bases", "Bases made of complete lines");
  lin->add_option("--cap", cap, "Largest line count searched");
  one("decompose", "Disjunctive gaps and blocks");
  auto* con = app.add_subcommand("confuse", "Union then deductive closure");
  con->add_option("files", files, "Input files")->required();
  auto* emb = app.add_subcommand("embed", "Embed TARGET into HOST, or into the tower");
  emb->add_option("target", file, "Order to embed")->required();
  emb->add_option("host", opt_file, "Host order");
  auto* glue = app.add_subcommand("glue", "Glue chains along classes");
  glue->add_option("files", files, "Chain files")->required();
  glue->add_option("--class", class_args, "Comma-separated class members");
  one("dot", "Graphviz export of the covering relation");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Session s(opt, command);
  auto emit = [&](const Json& result) {
    const Json rep = s.report(result);
    if (opt.format == "json") {
      out << rep.dump(2) << "\n";
    } else if (command == "dot" && result.contains("dot")) {
      out << result["dot"].get<std::string>();
    } else {
      render_text(rep, out);
    }
  };
  auto fail = [&](int code, const std::string& kind, const std::string& message, Json extra = Json::object()) {
    err << "error: " << message << "\n";
    if (opt.format == "json") {
      Json e{{"kind", kind}, {"message", message}};
      for (auto it = extra.begin(); it != extra.end(); ++it) e[it.key()] = it.value();
      Json rep = s.report(nullptr);
      rep["error"] = e;
      out << rep.dump(2) << "\n";
    }
    return code;
  };

  try {
    Json result;
    if (command == "analyze") result = run_analyze(s, file);
    else if (command == "closure") result = run_closure(s, file);
    else if (command == "classify") result = run_classify(s, file);
    else if (command == "quotient") result = run_quotient(s, file);
    else if (command == "gaps") result = run_gaps(s, file);
    else if (command == "gap-order") result = run_gap_order(s, file);
    else if (command == "fill") result = run_fill(s, file, gap_tokens, names, all);
    else if (command == "phi") result = run_phi(s, opt_file, steps);
    else if (command == "universal") result = run_universal(s, max_size);
    else if (command == "chains") result = run_chains(s, file);
    else if (command == "transversals") result = run_transversals(s, file);
    else if (command == "bases") result = run_bases(s, file, mode, cap);
    else if (command == "linear-bases") result = run_linear_bases(s, file, cap == kDefaultBaseCap ? kDefaultLineCap : cap);
    else if (command == "decompose") result = run_decompose(s, file);
    else if (command == "confuse") result = run_confuse(s, files);
    else if (command == "embed") result = run_embed(s, file, opt_file);
    else if (command == "glue") result = run_glue(s, files, class_args);
    else if (command == "dot") result = run_dot(s, file);
    emit(result);
    return kOk;
  } catch (const ReportedFailure& f) {
    emit(f.result);
    if (f.result.contains("cycle")) {
      std::string c;
      for (const auto& x : f.result["cycle"]) c += (c.empty() ? "" : " -> ") + x.get<std::string>();
      err << "error: con-fusion contains a cycle: " << c << "\n";
    }
    return f.code;
  } catch (const ParseError& e) {
    return fail(kUsage, "parse", e.what(), Json{{"line", e.line()}, {"column", e.column()}});
  } catch (const InputError& e) {
    return fail(kUsage, "input", e.what());
  } catch (const UsageError& e) {
    return fail(kUsage, "usage", e.what());
  } catch (const BudgetExceeded& e) {
    return fail(kBudget, "budget", e.what(), Json{{"limit", e.limit()}, {"measured", e.measured()}});
  } catch (const CapExceeded& e) {
    return fail(kBudget, "cap", e.what(), Json{{"limit", e.limit()}, {"measured", e.measured()}});
  } catch (const CycleError& e) {
    return fail(kDomain, "cycle", e.what(), Json{{"cycle", e.cycle()}});
  } catch (const NotTransitive& e) {
    return fail(kDomain, "not-transitive", e.what());
  } catch (const Error& e) {
    return fail(kDomain, "domain", e.what());
  }
}

}  // namespace ordinal::cli
