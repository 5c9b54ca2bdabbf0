#include <doctest.h>

#include <vector>

#include "ladders/classify.hpp"
#include "ladders/errors.hpp"
#include "ladders/zelevinsky.hpp"

namespace {

using namespace ladders;

const Line kChar{"chi", 1, false, false};     // character line
const Line kMu{"mu", 1, false, true};         // r = 1, higher-dimensional
const Line kRho2{"rho2", 2, false, false};    // r = 2
const Line kFlagged{"pi", 3, true, false};    // declared distinguished

Segment seg(const Line& line, int a, int b) {
  return Segment(line, Exponent::integer(a), Exponent::integer(b));
}

Multisegment ms(const Line& line, std::vector<std::pair<int, int>> spans) {
  std::vector<Segment> segs;
  for (auto [a, b] : spans) segs.push_back(seg(line, a, b));
  return Multisegment(line, std::move(segs));
}

TEST_CASE("quotient-side ladder classification") {
  const Verdict pair = classify_ladder_q(ms(kRho2, {{1, 1}, {0, 0}}));
  CHECK(pair.decision == Decision::Distinguished);
  REQUIRE(pair.witness.has_value());
  CHECK(*pair.witness == ms(kRho2, {{0, 0}}));

  const Verdict steinberg = classify_ladder_q(ms(kChar, {{-1, 1}}));
  CHECK(steinberg.decision == Decision::NotDistinguished);
  CHECK(steinberg.reason.find("Steinberg") != std::string::npos);

  const Verdict odd = classify_ladder_q(ms(kMu, {{2, 2}, {1, 1}, {0, 0}}));
  CHECK(odd.decision == Decision::NotDistinguished);

  const Verdict open = classify_ladder_q(ms(kFlagged, {{1, 1}, {0, 0}}));
  CHECK(open.decision == Decision::Undetermined);

  CHECK_THROWS_AS(classify_ladder_q(ms(kMu, {{0, 1}, {0, 1}})), NotALadder);
}

TEST_CASE("single segments route to distinct reasons") {
  const Verdict generalized = classify_ladder_q(ms(kMu, {{0, 3}}));
  CHECK(generalized.decision == Decision::NotDistinguished);
  CHECK(generalized.reason.find("single-segment") != std::string::npos);

  const Verdict point = classify_ladder_q(ms(kRho2, {{5, 5}}));
  CHECK(point.decision == Decision::NotDistinguished);
  CHECK(point.reason.find("twist") != std::string::npos);
}

TEST_CASE("Zelevinsky-side ladder classification") {
  CHECK(classify_ladder_z(ms(kMu, {{0, 1}, {1, 2}})).decision ==
        Decision::Distinguished);
  CHECK(classify_ladder_z(ms(kMu, {{0, 2}})).decision ==
        Decision::NotDistinguished);
  CHECK(classify_ladder_z(ms(kMu, {{0, 1}, {3, 4}})).decision ==
        Decision::NotDistinguished);
  CHECK(classify_ladder_z(ms(kFlagged, {{0, 1}})).decision ==
        Decision::Undetermined);
  CHECK_THROWS_AS(classify_ladder_z(ms(kMu, {{0, 1}, {0, 1}})), NotALadder);
}

TEST_CASE("single segment classification") {
  CHECK(classify_single_segment(seg(kMu, 0, 3)).decision ==
        Decision::NotDistinguished);
  CHECK(classify_single_segment(seg(kMu, 0, 0)).decision ==
        Decision::NotDistinguished);
  CHECK(classify_single_segment(
            Segment(kFlagged, Exponent::integer(0), Exponent::integer(3)))
            .decision == Decision::Undetermined);
  // A twist of a distinguished supercuspidal stays distinguished.
  CHECK(classify_single_segment(
            Segment(kFlagged, Exponent::integer(2), Exponent::integer(2)))
            .decision == Decision::Distinguished);
}

TEST_CASE("nu-pair classification") {
  const Verdict v = classify_nu_pair(seg(kMu, 0, 1));
  CHECK(v.decision == Decision::Distinguished);
  REQUIRE(v.witness.has_value());
  CHECK(*v.witness == ms(kMu, {{0, 1}}));
  CHECK(v.certificate.has_value());

  CHECK(classify_nu_pair(seg(kMu, 0, 2)).decision == Decision::Distinguished);
  CHECK_THROWS_AS(classify_nu_pair(seg(kMu, 0, 0)), PreconditionViolated);
  CHECK_THROWS_AS(
      classify_nu_pair(Segment(kFlagged, Exponent::integer(0),
                               Exponent::integer(1))),
      PreconditionViolated);
}

TEST_CASE("nu-pair agrees with the ladder classification") {
  for (int a = -2; a <= 2; ++a)
    for (int len = 2; len <= 4; ++len) {
      const Segment d = seg(kMu, a, a + len - 1);
      const Multisegment pair(kMu, {d, d.nu()});
      CHECK(classify_nu_pair(d).decision == classify_ladder_q(pair).decision);
    }
}

TEST_CASE("Speh parity") {
  CHECK(classify_speh(seg(kMu, 0, 1), 2).decision == Decision::Distinguished);
  CHECK(classify_speh(seg(kMu, 0, 1), 3).decision ==
        Decision::NotDistinguished);
  CHECK(classify_speh(seg(kMu, 0, 1), 1).decision ==
        Decision::NotDistinguished);
  CHECK(classify_speh(
            Segment(kFlagged, Exponent::integer(0), Exponent::integer(0)), 2)
            .decision == Decision::Undetermined);
  CHECK_THROWS_AS(classify_speh(seg(kMu, 0, 1), 0), PreconditionViolated);

  // Half-integral base, even multiplicity: exponents land back on integers.
  const Segment half_base(kMu, Exponent::half_integer(-1),
                          Exponent::half_integer(1));
  CHECK(classify_speh(half_base, 2).decision == Decision::Distinguished);

  const Verdict witnessed = classify_speh(seg(kMu, 0, 0), 4);
  REQUIRE(witnessed.witness.has_value());
  CHECK(witnessed.witness_kind == WitnessKind::BackingLadder);
  CHECK(witnessed.witness->size() == 4);
}

TEST_CASE("product rule") {
  const Verdict good{Decision::Distinguished, "x", std::nullopt,
                     WitnessKind::SpehHalf, std::nullopt};
  const Verdict bad{Decision::NotDistinguished, "x", std::nullopt,
                    WitnessKind::SpehHalf, std::nullopt};
  CHECK(product_distinguished({good, good}).decision ==
        Decision::Distinguished);
  CHECK(product_distinguished({}).decision == Decision::Distinguished);
  CHECK(product_distinguished({good, bad}).decision ==
        Decision::Undetermined);
}

TEST_CASE("unitary family membership") {
  const UnitaryFactor even_speh = SpehFactor{seg(kMu, 0, 1), 2};
  const UnitaryFactor odd_speh = SpehFactor{seg(kMu, 0, 1), 3};
  const UnitaryFactor comp =
      ComplementaryFactor{SpehFactor{seg(kMu, 0, 1), 2}, Rational(3, 10)};
  const UnitaryFactor cusp_good = SupercuspidalFactor{kFlagged};
  const UnitaryFactor cusp_open = SupercuspidalFactor{kMu};
  const UnitaryFactor ps = PrincipalSeries3Factor{kChar, ""};

  CHECK(unitary_family_member({even_speh}).decision ==
        Decision::Distinguished);
  CHECK(unitary_family_member({comp}).decision == Decision::Distinguished);
  CHECK(unitary_family_member({odd_speh}).decision ==
        Decision::Undetermined);
  CHECK(unitary_family_member({cusp_good}).decision ==
        Decision::Distinguished);
  CHECK(unitary_family_member({cusp_open}).decision ==
        Decision::Undetermined);
  CHECK(unitary_family_member({ps}).decision == Decision::Distinguished);
  CHECK(unitary_family_member({even_speh, comp, cusp_good, ps}).decision ==
        Decision::Distinguished);
  CHECK(unitary_family_member({even_speh, odd_speh}).decision ==
        Decision::Undetermined);
  CHECK(unitary_family_member({}).decision == Decision::Distinguished);
}

TEST_CASE("factor validation") {
  CHECK_THROWS_AS(unitary_family_member({ComplementaryFactor{
                      SpehFactor{seg(kMu, 0, 1), 3}, Rational(1, 10)}}),
                  InvalidFactor);
  CHECK_THROWS_AS(unitary_family_member({ComplementaryFactor{
                      SpehFactor{seg(kMu, 0, 1), 2}, Rational(1, 2)}}),
                  InvalidFactor);
  CHECK_THROWS_AS(unitary_family_member({SpehFactor{seg(kMu, 0, 1), 0}}),
                  InvalidFactor);
  CHECK_THROWS_AS(
      unitary_family_member({PrincipalSeries3Factor{kRho2, ""}}),
      InvalidFactor);
  CHECK_NOTHROW(unitary_family_member({ComplementaryFactor{
      SpehFactor{seg(kMu, 0, 1), 2}, Rational(-2, 5)}}));
}

TEST_CASE("factor ranks") {
  CHECK(factor_rank(SpehFactor{seg(kRho2, 0, 1), 3}) == 12);
  CHECK(factor_rank(ComplementaryFactor{SpehFactor{seg(kMu, 0, 2), 2},
                                        Rational(0, 1)}) == 12);
  CHECK(factor_rank(SupercuspidalFactor{kRho2}) == 2);
  CHECK(factor_rank(PrincipalSeries3Factor{kChar, ""}) == 3);
}

TEST_CASE("no input collects contradictory decisions") {
  // Classifiers that apply to the same multisegment may differ only through
  // Undetermined, never Distinguished against NotDistinguished.
  for (int a = -1; a <= 1; ++a)
    for (int len = 1; len <= 3; ++len)
      for (const Line* line : {&kChar, &kMu, &kRho2, &kFlagged}) {
        const Segment d(*line, Exponent::integer(a),
                        Exponent::integer(a + len - 1));
        const Multisegment single(*line, {d});
        const Decision from_ladder = classify_ladder_q(single).decision;
        const Decision from_segment = classify_single_segment(d).decision;
        const bool contradictory =
            (from_ladder == Decision::Distinguished &&
             from_segment == Decision::NotDistinguished) ||
            (from_ladder == Decision::NotDistinguished &&
             from_segment == Decision::Distinguished);
        CHECK_FALSE(contradictory);
      }
}

TEST_CASE("duality consistency on connected ladders") {
  // Z(m) = Q(m^t) on ladders whose adjacent segments overlap.
  const std::vector<Multisegment> samples = {
      ms(kMu, {{0, 1}, {1, 2}}),
      ms(kMu, {{0, 2}}),
      ms(kMu, {{0, 1}}),
      ms(kMu, {{0, 3}}),
      ms(kMu, {{1, 2}, {0, 1}}),
      ms(kMu, {{2, 3}, {1, 2}, {0, 1}}),
  };
  for (const Multisegment& m : samples)
    CHECK(classify_ladder_z(m).decision ==
          classify_ladder_q(mw_dual(m)).decision);
}

}  // namespace
