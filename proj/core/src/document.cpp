#include "ladders/document.hpp"

#include <algorithm>
#include <cctype>

#include "ladders/errors.hpp"

namespace ladders {

bool is_document_command(const std::string& word) {
  static const char* kCommands[] = {
      "dual",          "is-ladder", "speh-halve", "classify-q", "classify-z",
      "good-decomps",  "kernel",    "is-symplectic"};
  for (const char* c : kCommands)
    if (word == c) return true;
  return false;
}

namespace {

bool word_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

class Parser {
 public:
  Parser(const std::string& text, std::string default_line)
      : text_(text), default_line_(std::move(default_line)) {}

  Document run() {
    Document doc;
    for (;;) {
      skip_blank();
      if (at_end()) break;
      if (peek() == ';' || peek() == '\n') {
        get();
        continue;
      }
      parse_item(doc);
      skip_blank();
      if (at_end()) break;
      if (peek() == ';' || peek() == '\n')
        get();
      else
        fail("expected end of item");
    }
    return doc;
  }

 private:
  [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
  [[nodiscard]] char peek() const { return at_end() ? '\0' : text_[pos_]; }

  char get() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  // Whitespace and comments, not crossing item separators.
  void skip_blank() {
    for (;;) {
      while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r'))
        get();
      if (!at_end() && peek() == '#') {
        while (!at_end() && peek() != '\n') get();
        continue;
      }
      break;
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, col_);
  }

  void expect(char c) {
    skip_blank();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    get();
  }

  bool accept(char c) {
    skip_blank();
    if (!at_end() && peek() == c) {
      get();
      return true;
    }
    return false;
  }

  std::string word() {
    skip_blank();
    if (at_end() || !word_start(peek())) fail("expected a name");
    std::string out;
    while (!at_end() && word_char(peek())) out.push_back(get());
    return out;
  }

  int integer() {
    skip_blank();
    bool negative = false;
    if (!at_end() && peek() == '-') {
      get();
      negative = true;
    }
    skip_blank();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected an integer");
    long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (get() - '0');
      if (value > 1000000) fail("integer out of range");
    }
    return static_cast<int>(negative ? -value : value);
  }

  Exponent exponent() {
    const int numerator = integer();
    if (accept('/')) {
      const int den = integer();
      if (den != 2) fail("exponent denominators must divide 2");
      return Exponent::half_integer(numerator);
    }
    return Exponent::integer(numerator);
  }

  Rational rational() {
    const int numerator = integer();
    if (accept('/')) {
      const int den = integer();
      if (den <= 0) fail("expected a positive denominator");
      return Rational(numerator, den);
    }
    return Rational(numerator, 1);
  }

  const Line& lookup(const Document& doc, const std::string& name) const {
    for (const Line& l : doc.lines)
      if (l.label == name) return l;
    throw UnknownLine(name, line_, col_);
  }

  // Consumes '@ <name>' when present; otherwise falls back to the session's
  // default line.
  const Line& anchor(const Document& doc) {
    if (accept('@')) return lookup(doc, word());
    if (default_line_.empty()) fail("expected '@ <line>'");
    return lookup(doc, default_line_);
  }

  // A segment literal followed by its line anchor; used inside factors where
  // the line is named after the segment.
  Segment anchored_segment(const Document& doc) {
    expect('[');
    const Exponent a = exponent();
    Exponent b = a;
    if (accept(',')) b = exponent();
    expect(']');
    const Line& line = anchor(doc);
    if (!integral_difference(a, b) || a > b)
      fail("segment endpoints must satisfy a <= b with integral length");
    return Segment(line, a, b);
  }

  Multisegment multisegment(const Document& doc) {
    skip_blank();
    if (peek() == '0') {
      const std::size_t save_pos = pos_;
      const int save_line = line_, save_col = col_;
      get();
      skip_blank();
      const bool anchored = !at_end() && peek() == '@';
      if (anchored || at_end() || peek() == ';' || peek() == '\n')
        return Multisegment(anchor(doc));
      pos_ = save_pos;  // "0" was the start of an exponent like 0/2
      line_ = save_line;
      col_ = save_col;
    }
    std::vector<std::pair<Exponent, Exponent>> spans;
    for (;;) {
      expect('[');
      const Exponent a = exponent();
      Exponent b = a;
      if (accept(',')) b = exponent();
      expect(']');
      if (!integral_difference(a, b) || a > b)
        fail("segment endpoints must satisfy a <= b with integral length");
      spans.emplace_back(a, b);
      if (!accept('+')) break;
    }
    const Line& line = anchor(doc);
    std::vector<Segment> segs;
    segs.reserve(spans.size());
    for (auto [a, b] : spans) segs.emplace_back(line, a, b);
    return Multisegment(line, std::move(segs));
  }

  SpehFactor speh_factor(const Document& doc) {
    expect('(');
    Segment base = anchored_segment(doc);
    expect(',');
    if (word() != "s") fail("expected 's=' in a Speh factor");
    expect('=');
    const int s = integer();
    expect(')');
    return SpehFactor{std::move(base), s};
  }

  UnitaryFactor factor(const Document& doc) {
    const std::string head = word();
    if (head == "speh") return speh_factor(doc);
    if (head == "cs") {
      expect('(');
      if (word() != "speh") fail("complementary factors wrap a Speh block");
      SpehFactor inner = speh_factor(doc);
      expect(',');
      if (word() != "alpha") fail("expected 'alpha=' in a complementary factor");
      expect('=');
      Rational alpha = rational();
      expect(')');
      return ComplementaryFactor{std::move(inner), alpha};
    }
    if (head == "cusp") {
      expect('(');
      const Line& line = lookup(doc, word());
      expect(')');
      return SupercuspidalFactor{line};
    }
    if (head == "ps3") {
      expect('(');
      const Line& line = lookup(doc, word());
      std::string notes;
      if (accept(',')) {
        expect('"');
        while (!at_end() && peek() != '"' && peek() != '\n')
          notes.push_back(get());
        expect('"');
      }
      expect(')');
      return PrincipalSeries3Factor{line, std::move(notes)};
    }
    fail("unknown factor '" + head + "'");
  }

  std::vector<UnitaryFactor> factors(const Document& doc) {
    std::vector<UnitaryFactor> out;
    out.push_back(factor(doc));
    while (accept('*')) out.push_back(factor(doc));
    return out;
  }

  void declaration(Document& doc) {
    Line decl;
    decl.label = word();
    for (const Line& l : doc.lines)
      if (l.label == decl.label) fail("duplicate line '" + decl.label + "'");
    if (word() != "r") fail("expected 'r=' in a line declaration");
    expect('=');
    decl.r = integer();
    if (decl.r < 1) fail("a line's rank parameter must be positive");
    if (word() != "sc") fail("expected 'sc=' in a line declaration");
    expect('=');
    const std::string sc = word();
    if (sc == "yes")
      decl.sc_distinguished = true;
    else if (sc == "no")
      decl.sc_distinguished = false;
    else
      fail("expected sc=yes or sc=no");
    for (;;) {
      skip_blank();
      if (!at_end() && word_start(peek())) {
        const int save_line = line_, save_col = col_;
        const std::size_t save_pos = pos_;
        const std::string attr = word();
        if (attr == "dim") {
          expect('>');
          if (integer() != 1) fail("expected the attribute 'dim>1'");
          decl.dim_gt_one = true;
          continue;
        }
        if (attr == "nu") {
          expect('=');
          const int nu = integer();
          if (nu == 2) throw S2LineRejected(decl.label, line_, col_);
          if (nu != 1) fail("nu must be 1 or 2");
          continue;
        }
        pos_ = save_pos;  // not an attribute; leave it for the caller
        line_ = save_line;
        col_ = save_col;
      }
      break;
    }
    doc.lines.push_back(std::move(decl));
  }

  void parse_item(Document& doc) {
    skip_blank();
    if (word_start(peek())) {
      const std::size_t save_pos = pos_;
      const int save_line = line_, save_col = col_;
      const std::string head = word();
      if (head == "line") {
        declaration(doc);
        return;
      }
      if (head == "unitary") {
        doc.queries.push_back(Query{"unitary", factors(doc)});
        return;
      }
      skip_blank();
      const bool call = !at_end() && peek() == '(';
      if (call && (head == "speh" || head == "cs" || head == "cusp" ||
                   head == "ps3")) {
        pos_ = save_pos;
        line_ = save_line;
        col_ = save_col;
        doc.queries.push_back(Query{"", factors(doc)});
        return;
      }
      if (is_document_command(head)) {
        doc.queries.push_back(Query{head, multisegment(doc)});
        return;
      }
      fail("unknown item '" + head + "'");
    }
    doc.queries.push_back(Query{"", multisegment(doc)});
  }

  const std::string& text_;
  std::string default_line_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

Document parse(const std::string& text, const std::string& default_line) {
  return Parser(text, default_line).run();
}

std::string format(const Segment& s) {
  return "[" + to_string(s.a()) + "," + to_string(s.b()) + "]";
}

namespace {

std::string format_segments(const std::vector<Segment>& segs,
                            const std::string& label) {
  if (segs.empty()) return "0 @ " + label;
  std::string out;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (i > 0) out += "+";
    out += format(segs[i]);
  }
  return out + " @ " + label;
}

}  // namespace

std::string format(const Multisegment& m) {
  return format_segments(m.segments(), m.line().label);
}

std::string format(const OrderedMultisegment& m) {
  return format_segments(m.segments(), m.line().label);
}

std::string format(const UnitaryFactor& factor) {
  if (const auto* speh = std::get_if<SpehFactor>(&factor))
    return "speh(" + format(speh->base) + " @ " + speh->base.line().label +
           ", s=" + std::to_string(speh->s) + ")";
  if (const auto* cs = std::get_if<ComplementaryFactor>(&factor))
    return "cs(speh(" + format(cs->inner.base) + " @ " +
           cs->inner.base.line().label + ", s=" + std::to_string(cs->inner.s) +
           "), alpha=" + to_string(cs->alpha) + ")";
  if (const auto* sc = std::get_if<SupercuspidalFactor>(&factor))
    return "cusp(" + sc->line.label + ")";
  const auto& ps = std::get<PrincipalSeries3Factor>(factor);
  if (ps.notes.empty()) return "ps3(" + ps.line.label + ")";
  return "ps3(" + ps.line.label + ", \"" + ps.notes + "\")";
}

std::string format(const std::vector<UnitaryFactor>& factors) {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out += " * ";
    out += format(factors[i]);
  }
  return out;
}

std::string format(const Document& document) {
  std::string out;
  for (const Line& l : document.lines) {
    out += "line " + l.label + " r=" + std::to_string(l.r) +
           " sc=" + (l.sc_distinguished ? "yes" : "no");
    if (l.dim_gt_one) out += " dim>1";
    out += "\n";
  }
  for (const Query& q : document.queries) {
    if (!q.command.empty()) out += q.command + " ";
    if (const auto* m = std::get_if<Multisegment>(&q.payload))
      out += format(*m);
    else
      out += format(std::get<std::vector<UnitaryFactor>>(q.payload));
    out += "\n";
  }
  return out;
}

std::string format(const GoodDecomposition& g) {
  std::string out = "pieces { ";
  const auto& rows = g.decomposition().pieces();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0) out += " | ";
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j > 0) out += ",";
      out += format(rows[i][j]);
    }
  }
  out += " } pairing { ";
  const auto pairs = g.pairs();
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (p > 0) out += ", ";
    out += "(" + std::to_string(pairs[p].first.i) + "," +
           std::to_string(pairs[p].first.j) + ")<->(" +
           std::to_string(pairs[p].second.i) + "," +
           std::to_string(pairs[p].second.j) + ")";
  }
  out += " }";
  return out;
}

std::string format(const Verdict& v) {
  std::string out = to_string(v.decision) + " (" + v.reason + ")";
  if (v.witness) {
    if (v.witness_kind == WitnessKind::SpehHalf)
      out += "\nwitness: m' = " + format(*v.witness);
    else
      out += "\nwitness: ladder " + format(*v.witness);
  }
  if (v.certificate) out += "\ncertificate: " + format(*v.certificate);
  return out;
}

}  // namespace ladders
