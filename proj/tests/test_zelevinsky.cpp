#include <doctest.h>

#include <functional>
#include <map>
#include <vector>

#include "ladders/errors.hpp"
#include "ladders/zelevinsky.hpp"

namespace {

using namespace ladders;

const Line kRho{"rho", 1, false, true};

Segment seg(int a, int b) {
  return Segment(kRho, Exponent::integer(a), Exponent::integer(b));
}

Multisegment ms(std::vector<std::pair<int, int>> spans) {
  std::vector<Segment> segs;
  for (auto [a, b] : spans) segs.push_back(seg(a, b));
  return Multisegment(kRho, std::move(segs));
}

TEST_CASE("dual of a segment is its point collection") {
  CHECK(mw_dual(ms({{0, 2}})) == ms({{0, 0}, {1, 1}, {2, 2}}));
  CHECK(mw_dual(ms({{0, 0}})) == ms({{0, 0}}));
  CHECK(mw_dual(ms({{0, 0}, {1, 1}, {2, 2}})) == ms({{0, 2}}));
}

TEST_CASE("the two-step ladder is self-dual") {
  CHECK(mw_dual(ms({{1, 2}, {0, 1}})) == ms({{1, 2}, {0, 1}}));
}

TEST_CASE("worked duals") {
  CHECK(mw_dual(ms({{0, 0}, {1, 1}})) == ms({{0, 1}}));
  CHECK(mw_dual(ms({{2, 3}, {0, 1}})) == ms({{3, 3}, {1, 2}, {0, 0}}));
  CHECK(mw_dual(ms({{2, 3}, {1, 2}, {0, 1}})) == ms({{1, 3}, {0, 2}}));
  // Components with unlinked supports dualize independently.
  CHECK(mw_dual(ms({{0, 0}, {1, 1}, {3, 3}, {4, 4}})) == ms({{0, 1}, {3, 4}}));
}

TEST_CASE("empty and off-grid inputs") {
  CHECK(mw_dual(Multisegment(kRho)) == Multisegment(kRho));
  Multisegment mixed(
      kRho, {seg(0, 0), Segment(kRho, Exponent::half_integer(1),
                                Exponent::half_integer(1))});
  CHECK_THROWS_AS(mw_dual(mixed), MixedGrid);
}

TEST_CASE("half-integral grids reduce by translation") {
  Multisegment half(kRho, {Segment(kRho, Exponent::half_integer(1),
                                   Exponent::half_integer(5))});
  Multisegment expected(kRho,
                        {Segment(kRho, Exponent::half_integer(1),
                                 Exponent::half_integer(1)),
                         Segment(kRho, Exponent::half_integer(3),
                                 Exponent::half_integer(3)),
                         Segment(kRho, Exponent::half_integer(5),
                                 Exponent::half_integer(5))});
  CHECK(mw_dual(half) == expected);
}

// Independent oracle: the mirrored chain construction, peeling beginnings
// from the left instead of ends from the right.  Structurally different
// traversal, same involution.
Multisegment dual_by_left_peeling(const Multisegment& m) {
  struct Item {
    int a, b;
    bool chosen;
  };
  std::vector<Item> work;
  for (const Segment& s : m.segments())
    work.push_back({s.a().whole(), s.b().whole(), false});
  std::vector<Segment> dual;
  while (!work.empty()) {
    for (Item& it : work) it.chosen = false;
    int cur = 0;
    for (std::size_t i = 1; i < work.size(); ++i)
      if (std::pair(work[i].a, work[i].b) < std::pair(work[cur].a, work[cur].b))
        cur = static_cast<int>(i);
    work[cur].chosen = true;
    const int a1 = work[cur].a;
    int chain = 1;
    for (;;) {
      int next = -1;
      for (std::size_t i = 0; i < work.size(); ++i) {
        const Item& it = work[i];
        if (it.chosen || it.a != work[cur].a + 1 || it.b <= work[cur].b)
          continue;
        if (next < 0 || it.b < work[next].b) next = static_cast<int>(i);
      }
      if (next < 0) break;
      work[next].chosen = true;
      cur = next;
      ++chain;
    }
    dual.push_back(seg(a1, a1 + chain - 1));
    std::vector<Item> rest;
    for (Item& it : work) {
      if (it.chosen) ++it.a;
      if (it.b >= it.a) rest.push_back(it);
    }
    work = std::move(rest);
  }
  return Multisegment(m.line(), std::move(dual));
}

TEST_CASE("left and right peeling agree") {
  std::vector<Segment> pool;
  for (int a = 0; a <= 3; ++a)
    for (int b = a; b <= 3; ++b) pool.push_back(seg(a, b));
  std::vector<Segment> current;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    const Multisegment m(kRho, current);
    CHECK(mw_dual(m) == dual_by_left_peeling(m));
    if (current.size() == 4) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
      current.push_back(pool[i]);
      rec(i);
      current.pop_back();
    }
  };
  rec(0);
}

TEST_CASE("involution, support, and ladder preservation on a window") {
  std::vector<Segment> pool;
  for (int a = 0; a <= 3; ++a)
    for (int b = a; b <= 3; ++b) pool.push_back(seg(a, b));

  const auto support = [](const Multisegment& m) {
    std::map<int, int> mult;
    for (const Segment& s : m.segments())
      for (int x = s.a().whole(); x <= s.b().whole(); ++x) ++mult[x];
    return mult;
  };

  std::vector<Segment> current;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    const Multisegment m(kRho, current);
    const Multisegment dual = mw_dual(m);
    CHECK(mw_dual(dual) == m);
    CHECK(support(dual) == support(m));
    if (ladder_order(m)) CHECK(ladder_order(dual).has_value());
    if (current.size() == 3) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
      current.push_back(pool[i]);
      rec(i);
      current.pop_back();
    }
  };
  rec(0);
}

}  // namespace
