#pragma once

#include <compare>
#include <optional>

#include "ladders/exponent.hpp"
#include "ladders/line.hpp"

namespace ladders {

/// A segment [a,b] on a supercuspidal line: the twists nu^a rho, ..., nu^b rho.
/// Invariants: a <= b and b - a is a non-negative integer, so the length
/// b - a + 1 is a positive integer.
class Segment {
 public:
  Segment(Line line, Exponent a, Exponent b);

  [[nodiscard]] const Line& line() const { return line_; }
  [[nodiscard]] Exponent a() const { return a_; }  // beginning b(Delta)
  [[nodiscard]] Exponent b() const { return b_; }  // end e(Delta)

  [[nodiscard]] int length() const { return (b_.twice() - a_.twice()) / 2 + 1; }

  [[nodiscard]] Segment shifted(Exponent k) const {
    return Segment(line_, a_ + k, b_ + k);
  }

  /// nu Delta = [a+1, b+1].
  [[nodiscard]] Segment nu() const { return shifted(Exponent::integer(1)); }

  friend bool operator==(const Segment& x, const Segment& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.line_ == y.line_;
  }

  /// Total order by (a, b), then line label; the (a, b) key is also the
  /// canonical multiset order.
  friend std::strong_ordering operator<=>(const Segment& x, const Segment& y);

 private:
  Line line_;
  Exponent a_;
  Exponent b_;
};

/// Delta_1 precedes Delta_2: same line, a1 < a2, b1 < b2, b1 >= a2 - 1, and
/// the offset a2 - a1 is an integer.  Off-line or off-grid pairs are simply
/// unrelated.
bool precedes(const Segment& d1, const Segment& d2);

/// Linked: one precedes the other.
bool linked(const Segment& d1, const Segment& d2);

struct MeetJoin {
  std::optional<Segment> meet;  // Delta_1 intersect Delta_2, when non-empty
  std::optional<Segment> join;  // Delta_1 union Delta_2, when it is a segment
};

/// Intersection and union of two segments on one line.  The union is a
/// segment exactly when the exponent intervals overlap or are adjacent.
/// Throws MixedLines when the lines differ; same-line pairs on different
/// integral grids meet nothing and join nothing.
MeetJoin meet_join(const Segment& d1, const Segment& d2);

}  // namespace ladders
