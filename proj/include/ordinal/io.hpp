#pragma once

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gaps.hpp"
#include "lines.hpp"
#include "poset.hpp"
#include "relation.hpp"

namespace ordinal {

enum class KindHint { Raw, Preorder, Poset };

inline const char* to_string(KindHint k) {
  switch (k) {
    case KindHint::Raw: return "raw";
    case KindHint::Preorder: return "preorder";
    case KindHint::Poset: return "poset";
  }
  return "?";
}

struct RelationFile {
  std::string path;
  RelationStructure structure;
  std::optional<KindHint> kind;
  std::vector<std::string> warnings;
};

/// Names are runs of printable non-space characters that do not start with '#'.
inline bool valid_name(const std::string& s) {
  if (s.empty() || s[0] == '#') return false;
  for (unsigned char c : s)
    if (c <= ' ' || c == 0x7f) return false;
  return true;
}

namespace detail {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && static_cast<unsigned char>(line[i]) <= ' ') ++i;
    if (i >= line.size() || line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && static_cast<unsigned char>(line[i]) > ' ') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

}  // namespace detail

/// Parses the line-oriented format:
///   # comment
///   kind raw|preorder|poset      (optional, at most once)
///   elements <name>+             (repeatable)
///   pair <a> <b>
inline RelationFile parse_text(const std::string& text, const std::string& path = "<input>") {
  RelationFile f;
  f.path = path;
  std::vector<std::string> names;
  std::set<std::string> declared;
  std::vector<NamePair> pairs;
  std::set<NamePair> seen;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto tok = detail::tokenize(line);
    if (tok.empty()) continue;
    const auto& head = tok[0].text;
    if (head == "elements") {
      if (tok.size() < 2) throw ParseError("'elements' needs at least one name", lineno, tok[0].column, path);
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (!declared.insert(tok[i].text).second)
          throw ParseError("element '" + tok[i].text + "' declared twice", lineno, tok[i].column, path);
        names.push_back(tok[i].text);
      }
    } else if (head == "pair") {
      if (tok.size() != 3) {
        const std::size_t col = tok.size() > 3 ? tok[3].column : line.size() + 1;
        throw ParseError("'pair' takes exactly two names", lineno, col, path);
      }
      for (std::size_t i = 1; i < 3; ++i)
        if (!declared.count(tok[i].text))
          throw ParseError("undeclared element '" + tok[i].text + "'", lineno, tok[i].column, path);
      NamePair p{tok[1].text, tok[2].text};
      if (!seen.insert(p).second) {
        f.warnings.push_back(path + ":" + std::to_string(lineno) + ": duplicate pair " + p.first + " " + p.second);
        continue;
      }
      pairs.push_back(std::move(p));
    } else if (head == "kind") {
      if (tok.size() != 2) throw ParseError("'kind' takes one value", lineno, tok[0].column, path);
      if (f.kind) throw ParseError("'kind' given twice", lineno, tok[0].column, path);
      const auto& v = tok[1].text;
      if (v == "raw") f.kind = KindHint::Raw;
      else if (v == "preorder") f.kind = KindHint::Preorder;
      else if (v == "poset") f.kind = KindHint::Poset;
      else throw ParseError("unknown kind '" + v + "'", lineno, tok[1].column, path);
    } else {
      throw ParseError("unknown directive '" + head + "'", lineno, tok[0].column, path);
    }
  }
  f.structure = RelationStructure(std::move(names), pairs);
  return f;
}

inline RelationFile parse(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), path);
}

/// Inverse of parse_text: one elements line, then pairs in canonical order.
inline std::string render(const RelationStructure& s, std::optional<KindHint> kind = std::nullopt) {
  std::string out;
  if (kind) out += std::string("kind ") + to_string(*kind) + "\n";
  for (const auto& n : s.names())
    if (!valid_name(n)) throw Error("element name '" + n + "' cannot be written");
  if (!s.empty()) {
    out += "elements";
    for (const auto& n : s.names()) out += " " + n;
    out += "\n";
  }
  for (const auto& [a, b] : s.named_pairs()) out += "pair " + a + " " + b + "\n";
  return out;
}

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

struct DotOptions {
  std::string graph_name = "order";
};

/// Hasse diagram: covering pairs only, drawn bottom to top.
inline std::string export_dot(const Poset& p, const DotOptions& opt = {}) {
  std::string out = "digraph " + dot_quote(opt.graph_name) + " {\n  rankdir=BT;\n";
  for (const auto& n : p.names()) out += "  " + dot_quote(n) + ";\n";
  for (Index a = 0; a < p.size(); ++a)
    for_each_member(covers_of(p, a), [&](Index b) {
      out += "  " + dot_quote(p.name(a)) + " -> " + dot_quote(p.name(b)) + ";\n";
    });
  return out + "}\n";
}

}  // namespace ordinal
