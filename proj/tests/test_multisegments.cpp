#include <doctest.h>

#include <algorithm>
#include <functional>
#include <vector>

#include "ladders/errors.hpp"
#include "ladders/multisegment.hpp"

namespace {

using namespace ladders;

const Line kRho{"rho", 1, false, true};
const Line kRho2{"rho2", 2, false, false};

Segment seg(int a, int b) {
  return Segment(kRho, Exponent::integer(a), Exponent::integer(b));
}

Multisegment ms(std::vector<std::pair<int, int>> spans) {
  std::vector<Segment> segs;
  for (auto [a, b] : spans) segs.push_back(seg(a, b));
  return Multisegment(kRho, std::move(segs));
}

std::vector<Segment> pool_upto(int lo, int hi) {
  std::vector<Segment> pool;
  for (int a = lo; a <= hi; ++a)
    for (int b = a; b <= hi; ++b) pool.push_back(seg(a, b));
  return pool;
}

void for_each_multiset(const std::vector<Segment>& pool, int max_size,
                       const std::function<void(const Multisegment&)>& fn) {
  std::vector<Segment> current;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    fn(Multisegment(kRho, current));
    if (static_cast<int>(current.size()) == max_size) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
      current.push_back(pool[i]);
      rec(i);
      current.pop_back();
    }
  };
  rec(0);
}

// Brute-force ladder oracle: some permutation has strictly decreasing
// beginnings and ends.
bool ladder_by_scan(const Multisegment& m) {
  std::vector<Segment> segs = m.segments();
  std::sort(segs.begin(), segs.end());
  do {
    bool ok = true;
    for (std::size_t i = 0; ok && i + 1 < segs.size(); ++i)
      ok = segs[i].a() > segs[i + 1].a() && segs[i].b() > segs[i + 1].b();
    if (ok) return true;
  } while (std::next_permutation(segs.begin(), segs.end()));
  return false;
}

// Brute-force Speh oracle: search over all partitions of the multiset into
// nu-shifted pairs, trying every candidate role for the first element.
bool speh_by_matching(std::vector<Segment> rest) {
  if (rest.empty()) return true;
  const Segment first = rest.front();
  rest.erase(rest.begin());
  for (std::size_t i = 0; i < rest.size(); ++i) {
    const Segment other = rest[i];
    if (other == first.nu() || first == other.nu()) {
      std::vector<Segment> next = rest;
      next.erase(next.begin() + static_cast<long>(i));
      if (speh_by_matching(std::move(next))) return true;
    }
  }
  return false;
}

TEST_CASE("rank") {
  Multisegment two_points(
      kRho2, {Segment(kRho2, Exponent::integer(1), Exponent::integer(1)),
              Segment(kRho2, Exponent::integer(0), Exponent::integer(0))});
  CHECK(two_points.rank() == 4);
  CHECK(Multisegment(kRho).rank() == 0);
  CHECK(ms({{0, 1}, {1, 2}}).rank() == 4);
}

TEST_CASE("canonical order and equality") {
  CHECK(ms({{1, 2}, {0, 1}}) == ms({{0, 1}, {1, 2}}));
  CHECK(ms({{0, 1}}).segments().front() == seg(0, 1));
  CHECK_THROWS_AS(Multisegment(kRho, {Segment(kRho2, Exponent::integer(0),
                                              Exponent::integer(0))}),
                  MixedLines);
}

TEST_CASE("standard orders") {
  const auto linked_pair = standard_orders(ms({{0, 1}, {1, 2}}));
  REQUIRE(linked_pair.size() == 1);
  CHECK(linked_pair[0].segments() == std::vector<Segment>{seg(1, 2), seg(0, 1)});

  CHECK(standard_orders(ms({{0, 0}, {2, 3}})).size() == 2);
  CHECK(standard_orders(ms({{0, 2}})).size() == 1);
  CHECK(standard_orders(ms({{0, 1}, {0, 1}})).size() == 1);  // deduplicated

  const auto empty_orders = standard_orders(Multisegment(kRho));
  REQUIRE(empty_orders.size() == 1);
  CHECK(empty_orders[0].empty());
}

TEST_CASE("standard orders come out in the documented order") {
  // Three unlinked points: all six sequences are standard, sorted
  // lexicographically by the per-segment key (-end, -beginning).
  const auto orders = standard_orders(ms({{0, 0}, {2, 2}, {4, 4}}));
  REQUIRE(orders.size() == 6);
  const std::vector<std::vector<int>> expected = {
      {4, 2, 0}, {4, 0, 2}, {2, 4, 0}, {2, 0, 4}, {0, 4, 2}, {0, 2, 4}};
  for (std::size_t i = 0; i < orders.size(); ++i) {
    std::vector<int> got;
    for (const Segment& s : orders[i].segments()) got.push_back(s.a().whole());
    CHECK(got == expected[i]);
  }
}

TEST_CASE("standard orders: never empty, decreasing ends first") {
  for_each_multiset(pool_upto(0, 3), 3, [](const Multisegment& m) {
    if (m.empty()) return;
    const auto orders = standard_orders(m);
    REQUIRE(!orders.empty());
    for (const auto& order : orders) CHECK(order.is_standard());
    // The first listed order has weakly decreasing ends.
    const auto& first = orders.front().segments();
    for (std::size_t i = 0; i + 1 < first.size(); ++i)
      CHECK(first[i].b() >= first[i + 1].b());
  });
}

TEST_CASE("ladder order") {
  const auto two_step = ladder_order(ms({{0, 1}, {1, 2}}));
  REQUIRE(two_step.has_value());
  CHECK(two_step->segments() ==
        std::vector<Segment>{seg(1, 2), seg(0, 1)});
  CHECK_FALSE(ladder_order(ms({{0, 1}, {0, 1}})).has_value());
  CHECK_FALSE(ladder_order(ms({{0, 3}, {1, 2}})).has_value());
}

TEST_CASE("ladder oracle equivalence") {
  for_each_multiset(pool_upto(0, 4), 4, [](const Multisegment& m) {
    const auto order = ladder_order(m);
    CHECK(order.has_value() == ladder_by_scan(m));
    if (order) CHECK(order->is_ladder_order());
  });
}

TEST_CASE("speh halve") {
  const auto pair = speh_halve(ms({{1, 2}, {0, 1}}));
  REQUIRE(pair.has_value());
  CHECK(*pair == ms({{0, 1}}));

  const auto points = speh_halve(ms({{2, 2}, {1, 1}, {0, 0}, {-1, -1}}));
  REQUIRE(points.has_value());
  CHECK(*points == ms({{1, 1}, {-1, -1}}));

  CHECK_FALSE(speh_halve(ms({{0, 1}, {0, 1}})).has_value());
  CHECK(speh_halve(Multisegment(kRho)).has_value());
}

TEST_CASE("speh oracle equivalence and parity consequences") {
  for_each_multiset(pool_upto(0, 3), 4, [](const Multisegment& m) {
    const auto half = speh_halve(m);
    CHECK(half.has_value() == speh_by_matching(m.segments()));
    if (half) {
      CHECK(m.size() % 2 == 0);
      CHECK(m.rank() % (2 * m.line().r) == 0);
      // Reassemble m from the half.
      std::vector<Segment> rebuilt = half->segments();
      for (const Segment& s : half->segments()) rebuilt.push_back(s.nu());
      CHECK(Multisegment(m.line(), rebuilt) == m);
    }
  });
}

TEST_CASE("kernel components") {
  const auto linked_pair =
      kernel_components(OrderedMultisegment(kRho, {seg(1, 2), seg(0, 1)}));
  REQUIRE(linked_pair.size() == 1);
  REQUIRE(linked_pair[0].has_value());
  CHECK(*linked_pair[0] == ms({{0, 2}, {1, 1}}));

  const auto vanishing =
      kernel_components(OrderedMultisegment(kRho, {seg(2, 2), seg(0, 0)}));
  REQUIRE(vanishing.size() == 1);
  CHECK_FALSE(vanishing[0].has_value());

  const auto adjacent =
      kernel_components(OrderedMultisegment(kRho, {seg(1, 1), seg(0, 0)}));
  REQUIRE(adjacent.size() == 1);
  REQUIRE(adjacent[0].has_value());
  CHECK(*adjacent[0] == ms({{0, 1}}));

  CHECK_THROWS_AS(
      kernel_components(OrderedMultisegment(kRho, {seg(0, 1), seg(1, 2)})),
      NotALadder);
  CHECK(kernel_components(OrderedMultisegment(kRho, {seg(0, 4)})).empty());
}

TEST_CASE("kernel component count is t - 1") {
  for_each_multiset(pool_upto(0, 4), 4, [](const Multisegment& m) {
    const auto order = ladder_order(m);
    if (!order || m.empty()) return;
    CHECK(kernel_components(*order).size() ==
          static_cast<std::size_t>(m.size() - 1));
  });
}

TEST_CASE("jacquet decomposition") {
  CHECK(jacquet_decomposition(seg(0, 2), {1, 2}) ==
        std::vector<Segment>{seg(2, 2), seg(0, 1)});
  CHECK(jacquet_decomposition(seg(0, 2), {3}) ==
        std::vector<Segment>{seg(0, 2)});

  const Segment wide(kRho2, Exponent::integer(0), Exponent::integer(1));
  CHECK(jacquet_decomposition(wide, {2, 2}) ==
        std::vector<Segment>{
            Segment(kRho2, Exponent::integer(1), Exponent::integer(1)),
            Segment(kRho2, Exponent::integer(0), Exponent::integer(0))});

  CHECK_THROWS_AS(jacquet_decomposition(seg(0, 2), {1, 1}), RankMismatch);
  CHECK_THROWS_AS(jacquet_decomposition(wide, {1, 3}), Indivisible);
}

TEST_CASE("jacquet covers the exponent set in order") {
  const Segment d = seg(-1, 3);
  for (const auto& parts : std::vector<std::vector<int>>{
           {5}, {1, 4}, {2, 3}, {1, 1, 3}, {2, 2, 1}, {1, 1, 1, 1, 1}}) {
    const auto pieces = jacquet_decomposition(d, parts);
    Exponent expected_end = d.b();
    int total = 0;
    for (const Segment& p : pieces) {
      CHECK(p.b() == expected_end);
      expected_end = p.a() - 1;
      total += p.length();
    }
    CHECK(total == d.length());
    CHECK(pieces.back().a() == d.a());
  }
}

TEST_CASE("mixed grids pair within their own grid only") {
  // Half-integer and integer exponents may share a line; nu-shifts never
  // cross grids, so the pairing search treats each grid independently.
  const Segment p0 = seg(0, 0);
  const Segment p1 = seg(1, 1);
  const Segment h0(kRho, Exponent::half_integer(1), Exponent::half_integer(1));
  const Segment h1(kRho, Exponent::half_integer(3), Exponent::half_integer(3));
  const auto half = speh_halve(Multisegment(kRho, {p0, p1, h0, h1}));
  REQUIRE(half.has_value());
  CHECK(*half == Multisegment(kRho, {p0, h0}));
  CHECK_FALSE(speh_halve(Multisegment(kRho, {p0, h0})).has_value());
  CHECK_FALSE(speh_halve(Multisegment(kRho, {p0, p1, h0})).has_value());
}

TEST_CASE("adjacent nu pairing predicate") {
  CHECK(adjacent_nu_paired(OrderedMultisegment(kRho, {seg(1, 2), seg(0, 1)})));
  CHECK_FALSE(
      adjacent_nu_paired(OrderedMultisegment(kRho, {seg(0, 1), seg(1, 2)})));
  CHECK_FALSE(adjacent_nu_paired(OrderedMultisegment(kRho, {seg(0, 1)})));
  CHECK(adjacent_nu_paired(OrderedMultisegment(kRho, {})));
}

}  // namespace
