#pragma once

#include <stdexcept>
#include <string>

namespace ladders {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Segments on different supercuspidal lines were combined.
class MixedLines : public Error {
 public:
  using Error::Error;
};

/// A multisegment mixes exponents from distinct integral grids.
class MixedGrid : public Error {
 public:
  using Error::Error;
};

class NotALadder : public Error {
 public:
  using Error::Error;
};

class NotStandardOrder : public Error {
 public:
  using Error::Error;
};

/// Certificates over a line whose supercuspidal is itself distinguished are
/// not supported; that case stays open.
class DistinguishedLineUnsupported : public Error {
 public:
  using Error::Error;
};

class RankMismatch : public Error {
 public:
  using Error::Error;
};

/// A requested block size is not a multiple of the line's rank parameter, so
/// the corresponding restriction vanishes.
class Indivisible : public Error {
 public:
  using Error::Error;
};

class InvalidInvolution : public Error {
 public:
  using Error::Error;
};

class InvalidRange : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class InvalidFactor : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  [[nodiscard]] int line() const { return line_; }
  [[nodiscard]] int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A query referenced a line that was never declared.
class UnknownLine : public ParseError {
 public:
  UnknownLine(const std::string& name, int line, int column)
      : ParseError("unknown line '" + name + "'", line, column), name_(name) {}

  [[nodiscard]] const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// A declaration asked for the nu^2 twist convention, which is out of scope.
class S2LineRejected : public ParseError {
 public:
  S2LineRejected(const std::string& name, int line, int column)
      : ParseError("line '" + name +
                       "' declares nu=2; only nu-twist lines are supported",
                   line, column) {}
};

}  // namespace ladders
