#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ladders/classify.hpp"
#include "ladders/multisegment.hpp"
#include "ladders/symplectic.hpp"

namespace ladders {

/// One query of a document: an optional command name plus its payload, either
/// a multisegment or a list of unitary factors.
struct Query {
  std::string command;  // empty when the invoking tool supplies the command
  std::variant<Multisegment, std::vector<UnitaryFactor>> payload;

  friend bool operator==(const Query&, const Query&) = default;
};

/// A parsed document: line declarations followed by queries, every query
/// referencing a declared line.
struct Document {
  std::vector<Line> lines;
  std::vector<Query> queries;

  friend bool operator==(const Document& x, const Document& y) {
    if (x.lines.size() != y.lines.size() || x.queries != y.queries)
      return false;
    for (std::size_t i = 0; i < x.lines.size(); ++i)
      if (!identical(x.lines[i], y.lines[i])) return false;
    return true;
  }
};

/// Command names that may prefix a query inside a document.
bool is_document_command(const std::string& word);

/// Parses the text grammar:
///
///   line <name> r=<int> sc=<yes|no> [dim>1] [nu=<int>]
///   [a,b]+[c,d] @ <name>          (half-integer endpoints written p/2)
///   0 @ <name>                    (the empty multisegment)
///   classify-q [a,b] @ <name>     (optional command prefix)
///   speh([a,b] @ <name>, s=<int>) * cusp(<name>) * ...
///
/// Items are separated by newlines or ';'; '#' starts a comment.  Throws
/// ParseError with position, UnknownLine for undeclared references, and
/// S2LineRejected for nu=2 declarations.
///
/// When `default_line` names a declared line, multisegments and Speh bases
/// may omit their '@ <name>' anchor and land on that line.
Document parse(const std::string& text, const std::string& default_line = "");

/// Canonical text; parse(format(d)) == d, and formatting is idempotent over
/// whitespace and ordering variants.
std::string format(const Document& document);

std::string format(const Multisegment& m);
std::string format(const OrderedMultisegment& m);
std::string format(const Segment& s);
std::string format(const Verdict& v);
std::string format(const GoodDecomposition& g);
std::string format(const UnitaryFactor& factor);
std::string format(const std::vector<UnitaryFactor>& factors);

}  // namespace ladders
