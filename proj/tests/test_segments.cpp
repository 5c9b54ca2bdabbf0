#include <doctest.h>

#include <vector>

#include "ladders/errors.hpp"
#include "ladders/segment.hpp"

namespace {

using namespace ladders;

const Line kRho{"rho", 1, false, true};
const Line kOther{"sigma", 1, false, true};

Segment seg(int a, int b) {
  return Segment(kRho, Exponent::integer(a), Exponent::integer(b));
}

Segment half_seg(int twice_a, int twice_b) {
  return Segment(kRho, Exponent::half_integer(twice_a),
                 Exponent::half_integer(twice_b));
}

TEST_CASE("exponent arithmetic and order") {
  CHECK(Exponent::integer(2) - Exponent::integer(3) == Exponent::integer(-1));
  CHECK(Exponent::half_integer(3) + Exponent::half_integer(1) ==
        Exponent::integer(2));
  CHECK(Exponent::half_integer(-1) < Exponent::integer(0));
  CHECK(Exponent::half_integer(3).integral() == false);
  CHECK(Exponent::half_integer(4).integral() == true);
  CHECK(integral_difference(Exponent::half_integer(3),
                            Exponent::half_integer(-1)));
  CHECK_FALSE(integral_difference(Exponent::half_integer(3),
                                  Exponent::integer(1)));
  CHECK(to_string(Exponent::integer(-4)) == "-4");
  CHECK(to_string(Exponent::half_integer(-3)) == "-3/2");
}

TEST_CASE("segment invariants") {
  CHECK(seg(0, 2).length() == 3);
  CHECK(seg(1, 1).length() == 1);
  CHECK_THROWS_AS(seg(2, 1), Error);
  CHECK_THROWS_AS(Segment(kRho, Exponent::integer(0),
                          Exponent::half_integer(1)),
                  Error);
}

TEST_CASE("shift") {
  CHECK(seg(0, 2).shifted(Exponent::integer(1)) == seg(1, 3));
  CHECK(seg(0, 2).shifted(Exponent::integer(0)) == seg(0, 2));
  CHECK(half_seg(-1, 3).shifted(Exponent::half_integer(1)) == seg(0, 2));
  CHECK(seg(0, 2).nu() == seg(1, 3));
}

TEST_CASE("precedes") {
  CHECK(precedes(seg(0, 1), seg(1, 2)));
  CHECK_FALSE(precedes(seg(0, 0), seg(2, 3)));  // gap of one missing exponent
  CHECK_FALSE(precedes(seg(0, 3), seg(1, 2)));  // containment
  CHECK_FALSE(precedes(seg(1, 2), seg(0, 1)));
  CHECK_FALSE(precedes(seg(0, 1), seg(0, 1)));
  CHECK_FALSE(precedes(seg(0, 1), half_seg(3, 5)));  // off-grid
  CHECK_FALSE(precedes(seg(0, 1), Segment(kOther, Exponent::integer(1),
                                          Exponent::integer(2))));
}

TEST_CASE("precedes is irreflexive and antisymmetric on a window") {
  std::vector<Segment> pool;
  for (int a = 0; a <= 3; ++a)
    for (int b = a; b <= 3; ++b) pool.push_back(seg(a, b));
  for (const Segment& x : pool) {
    CHECK_FALSE(precedes(x, x));
    for (const Segment& y : pool) {
      if (precedes(x, y)) CHECK_FALSE(precedes(y, x));
      CHECK(linked(x, y) == linked(y, x));
    }
    CHECK_FALSE(linked(x, x));
  }
}

TEST_CASE("linked") {
  CHECK(linked(seg(0, 1), seg(1, 2)));
  CHECK(linked(seg(1, 2), seg(0, 1)));
  CHECK_FALSE(linked(seg(0, 3), seg(1, 2)));
}

TEST_CASE("meet and join") {
  const MeetJoin overlap = meet_join(seg(0, 2), seg(1, 3));
  REQUIRE(overlap.meet.has_value());
  REQUIRE(overlap.join.has_value());
  CHECK(*overlap.meet == seg(1, 2));
  CHECK(*overlap.join == seg(0, 3));

  const MeetJoin gap = meet_join(seg(0, 0), seg(2, 3));
  CHECK_FALSE(gap.meet.has_value());
  CHECK_FALSE(gap.join.has_value());

  const MeetJoin adjacent = meet_join(seg(0, 1), seg(2, 3));
  CHECK_FALSE(adjacent.meet.has_value());
  REQUIRE(adjacent.join.has_value());
  CHECK(*adjacent.join == seg(0, 3));

  CHECK_THROWS_AS(meet_join(seg(0, 1), Segment(kOther, Exponent::integer(0),
                                               Exponent::integer(1))),
                  MixedLines);

  const MeetJoin off_grid = meet_join(seg(0, 1), half_seg(1, 3));
  CHECK_FALSE(off_grid.meet.has_value());
  CHECK_FALSE(off_grid.join.has_value());
}

}  // namespace
