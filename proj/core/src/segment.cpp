#include "ladders/segment.hpp"

#include <algorithm>

#include "ladders/errors.hpp"

namespace ladders {

Segment::Segment(Line line, Exponent a, Exponent b)
    : line_(std::move(line)), a_(a), b_(b) {
  if (!integral_difference(a_, b_))
    throw Error("segment endpoints must differ by an integer: [" +
                to_string(a_) + "," + to_string(b_) + "]");
  if (a_ > b_)
    throw Error("segment end precedes its beginning: [" + to_string(a_) + "," +
                to_string(b_) + "]");
}

std::strong_ordering operator<=>(const Segment& x, const Segment& y) {
  if (auto c = x.a_ <=> y.a_; c != 0) return c;
  if (auto c = x.b_ <=> y.b_; c != 0) return c;
  return x.line_.label <=> y.line_.label;
}

bool precedes(const Segment& d1, const Segment& d2) {
  if (d1.line() != d2.line()) return false;
  if (!integral_difference(d1.a(), d2.a())) return false;
  return d1.a() < d2.a() && d1.b() < d2.b() &&
         d1.b() >= d2.a() - Exponent::integer(1);
}

bool linked(const Segment& d1, const Segment& d2) {
  return precedes(d1, d2) || precedes(d2, d1);
}

MeetJoin meet_join(const Segment& d1, const Segment& d2) {
  if (d1.line() != d2.line())
    throw MixedLines("cannot intersect segments on lines '" + d1.line().label +
                     "' and '" + d2.line().label + "'");
  MeetJoin result;
  if (!integral_difference(d1.a(), d2.a())) return result;  // disjoint grids
  Exponent lo = std::max(d1.a(), d2.a());
  Exponent hi = std::min(d1.b(), d2.b());
  if (lo <= hi) result.meet = Segment(d1.line(), lo, hi);
  // Union is a segment iff the intervals overlap or are adjacent.
  if (lo <= hi + 1)
    result.join =
        Segment(d1.line(), std::min(d1.a(), d2.a()), std::max(d1.b(), d2.b()));
  return result;
}

}  // namespace ladders
