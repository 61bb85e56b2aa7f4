#pragma once

#include <stdexcept>
#include <string>

namespace cyclo {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapExceeded : Error {
  explicit CapExceeded(const std::string& what) : Error("CapExceeded: " + what) {}
};

struct DegreeMismatch : Error {
  explicit DegreeMismatch(const std::string& what) : Error("DegreeMismatch: " + what) {}
};

struct NotASubgroup : Error {
  explicit NotASubgroup(const std::string& what) : Error("NotASubgroup: " + what) {}
};

struct NotNormal : Error {
  explicit NotNormal(const std::string& what) : Error("NotNormal: " + what) {}
};

struct BadParams : Error {
  explicit BadParams(const std::string& what) : Error("BadParams: " + what) {}
};

struct UnknownNamedGroup : Error {
  explicit UnknownNamedGroup(const std::string& what) : Error("UnknownNamedGroup: " + what) {}
};

struct NotAnAutomorphism : Error {
  explicit NotAnAutomorphism(const std::string& what) : Error("NotAnAutomorphism: " + what) {}
};

struct ActionIncompatible : Error {
  explicit ActionIncompatible(const std::string& what) : Error("ActionIncompatible: " + what) {}
};

struct NotPrime : Error {
  explicit NotPrime(const std::string& what) : Error("NotPrime: " + what) {}
};

struct TooLarge : Error {
  explicit TooLarge(const std::string& what) : Error("TooLarge: " + what) {}
};

struct PDoesNotDivide : Error {
  explicit PDoesNotDivide(const std::string& what) : Error("PDoesNotDivide: " + what) {}
};

struct TrivialGroup : Error {
  explicit TrivialGroup(const std::string& what) : Error("TrivialGroup: " + what) {}
};

/// Raised while parsing a GroupSpec string or a corpus file.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error("ParseError" + locate(line, column) + ": " + what), line(line), column(column) {}
  std::size_t line;
  std::size_t column;

 private:
  static std::string locate(std::size_t line, std::size_t column) {
    std::string s;
    if (line) s += " at line " + std::to_string(line);
    if (column) s += (line ? ", column " : " at column ") + std::to_string(column);
    return s;
  }
};

struct DuplicateLabel : Error {
  explicit DuplicateLabel(const std::string& what) : Error("DuplicateLabel: " + what) {}
};

/// Cooperative per-entry timeout inside verification campaigns.
struct Timeout : Error {
  explicit Timeout(const std::string& what) : Error("Timeout: " + what) {}
};

}  // namespace cyclo
