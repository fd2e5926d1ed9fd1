#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordinal {

/// Root of every failure raised by the library. Domain errors (a cycle, an invalid
/// gap, a violated gluing condition) are distinct from resource limits so callers
/// can map them to different exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownElement : public Error {
 public:
  explicit UnknownElement(const std::string& name)
      : Error("unknown element '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class NameCollision : public Error {
 public:
  explicit NameCollision(const std::string& name)
      : Error("element name '" + name + "' already in use"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// A size guard refused to materialize an exponential object.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t limit, std::size_t measured)
      : Error(what + " exceeds cap " + std::to_string(limit) + " (measured " + std::to_string(measured) + ")"),
        limit_(limit),
        measured_(measured) {}
  std::size_t limit() const noexcept { return limit_; }
  /// Lower bound when the enumeration was cut short.
  std::size_t measured() const noexcept { return measured_; }

 private:
  std::size_t limit_;
  std::size_t measured_;
};

class BudgetExceeded : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

class NotTransitive : public Error {
 public:
  explicit NotTransitive(std::array<std::string, 3> witness)
      : Error("structure is not transitive: (" + witness[0] + "," + witness[1] + "), (" + witness[1] + "," +
              witness[2] + ") present but (" + witness[0] + "," + witness[2] + ") absent"),
        witness_(std::move(witness)) {}
  const std::array<std::string, 3>& witness() const noexcept { return witness_; }

 private:
  std::array<std::string, 3> witness_;
};

class NotAnOrder : public Error {
 public:
  using Error::Error;
};

class NotReflexive : public Error {
 public:
  using Error::Error;
};

class InvalidGap : public Error {
 public:
  using Error::Error;
};

class InvalidChain : public Error {
 public:
  using Error::Error;
};

class InvalidTransversal : public Error {
 public:
  using Error::Error;
};

class BadIndex : public Error {
 public:
  using Error::Error;
};

class Condition1Violation : public Error {
 public:
  using Error::Error;
};

class Condition2Violation : public Error {
 public:
  using Error::Error;
};

/// Con-fusion produced reflexive elements; carries a cycle a -> ... -> a.
class CycleError : public Error {
 public:
  explicit CycleError(std::vector<std::string> cycle)
      : Error("con-fusion contains a cycle: " + join(cycle)), cycle_(std::move(cycle)) {}
  const std::vector<std::string>& cycle() const noexcept { return cycle_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " -> " : "") + v[i];
    return s;
  }
  std::vector<std::string> cycle_;
};

/// Unreadable input file.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column, const std::string& path = "")
      : Error((path.empty() ? "" : path + ": ") + "line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace ordinal
