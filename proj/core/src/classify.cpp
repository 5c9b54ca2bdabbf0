#include "ladders/classify.hpp"

#include <numeric>
#include <stdexcept>

#include "ladders/errors.hpp"

namespace ladders {

std::string to_string(Decision d) {
  switch (d) {
    case Decision::Distinguished:
      return "Distinguished";
    case Decision::NotDistinguished:
      return "NotDistinguished";
    case Decision::Undetermined:
      return "Undetermined";
  }
  return "Undetermined";
}

namespace {

const char* kOpenLineReason =
    "supercuspidal line is flagged distinguished; the covered criteria do not "
    "apply (open case)";

Verdict undetermined_open_line() {
  return {Decision::Undetermined, kOpenLineReason, std::nullopt,
          WitnessKind::SpehHalf, std::nullopt};
}

}  // namespace

Verdict classify_ladder_q(const Multisegment& m) {
  auto order = ladder_order(m);
  if (!order) throw NotALadder("classify_ladder_q requires a ladder");
  const Line& line = m.line();
  if (line.sc_distinguished) return undetermined_open_line();

  if (m.size() == 1) {
    const Segment& d = m.segments().front();
    if (line.r == 1 && !line.dim_gt_one)
      return {Decision::NotDistinguished,
              "Steinberg quotient on a character line: no symplectic model",
              std::nullopt, WitnessKind::SpehHalf, std::nullopt};
    if (d.length() >= 2)
      return {Decision::NotDistinguished,
              "single-segment quotient over a non-distinguished line: no "
              "symplectic model",
              std::nullopt, WitnessKind::SpehHalf, std::nullopt};
    return {Decision::NotDistinguished,
            "nu-twist of a non-distinguished supercuspidal",
            std::nullopt, WitnessKind::SpehHalf, std::nullopt};
  }

  if (auto half = speh_halve(m))
    return {Decision::Distinguished,
            "ladder nu-pairing: m = m' + nu m'",
            std::move(half), WitnessKind::SpehHalf, std::nullopt};
  if (m.size() % 2 != 0)
    return {Decision::NotDistinguished,
            "an odd number of segments admits no nu-pairing",
            std::nullopt, WitnessKind::SpehHalf, std::nullopt};
  return {Decision::NotDistinguished,
          "no nu-pairing of adjacent segments in the ladder order",
          std::nullopt, WitnessKind::SpehHalf, std::nullopt};
}

namespace {

// Every length even; every adjacent intersection of odd length; every
// adjacent union a segment.
bool z_parity_conditions(const OrderedMultisegment& order, std::string* why) {

  const auto& segs = order.segments();
  for (const Segment& s : segs)
    if (s.length() % 2 != 0) {
      if (why) *why = "a segment has odd length";
      return false;
    }
  for (std::size_t i = 0; i + 1 < segs.size(); ++i) {
    const MeetJoin mj = meet_join(segs[i], segs[i + 1]);
    if (!mj.meet || mj.meet->length() % 2 == 0) {
      if (why) *why = "an adjacent intersection is empty or of even length";
      return false;
    }
    if (!mj.join) {
      if (why) *why = "an adjacent union is not a segment";
      return false;
    }
  }
  return true;
}

}  // namespace

bool zelevinsky_parity_conditions(const OrderedMultisegment& order) {
  return z_parity_conditions(order, nullptr);
}

Verdict classify_ladder_z(const Multisegment& m) {
  auto order = ladder_order(m);
  if (!order) throw NotALadder("classify_ladder_z requires a ladder");
  if (m.line().sc_distinguished) return undetermined_open_line();

  std::string why;
  if (z_parity_conditions(*order, &why))
    return {Decision::Distinguished,
            "even lengths with odd adjacent overlaps and segment unions",
            std::nullopt, WitnessKind::SpehHalf, std::nullopt};
  return {Decision::NotDistinguished, why, std::nullopt, WitnessKind::SpehHalf,
          std::nullopt};
}

Verdict classify_single_segment(const Segment& d) {
  const Line& line = d.line();
  if (d.length() >= 2) {
    if (line.sc_distinguished) return undetermined_open_line();
    if (line.r == 1 && !line.dim_gt_one)
      return {Decision::NotDistinguished,
              "Steinberg quotient on a character line: no symplectic model",
              std::nullopt, WitnessKind::SpehHalf, std::nullopt};
    return {Decision::NotDistinguished,
            "single-segment quotient over a non-distinguished line: no "
            "symplectic model",
            std::nullopt, WitnessKind::SpehHalf, std::nullopt};
  }
  // Length one: a nu-twist of rho itself, so the verdict mirrors the flag.
  if (line.sc_distinguished)
    return {Decision::Distinguished,
            "nu-twist of a distinguished supercuspidal", std::nullopt,
            WitnessKind::SpehHalf, std::nullopt};
  return {Decision::NotDistinguished,
          "nu-twist of a non-distinguished supercuspidal", std::nullopt,
          WitnessKind::SpehHalf, std::nullopt};
}

Verdict classify_nu_pair(const Segment& d) {
  if (d.length() < 2)
    throw PreconditionViolated("the nu-pair criterion needs a < b");
  if (d.line().sc_distinguished)
    throw PreconditionViolated(
        "the nu-pair criterion needs a non-distinguished line");
  Multisegment pair(d.line(), {d, d.nu()});
  Verdict verdict = classify_ladder_q(pair);
  if (verdict.decision != Decision::Distinguished)
    throw std::logic_error("nu-pair ladder must classify as distinguished");
  verdict.reason = "the pair {nu Delta, Delta} carries a symplectic model";
  // The canonical certificate: trivial decomposition, top piece paired down.
  OrderedMultisegment order(d.line(), {d.nu(), d});
  DecomposedMultisegment decomposition(order, {{d.nu()}, {d}});
  verdict.certificate = GoodDecomposition(decomposition, {1, 0});
  return verdict;
}

Verdict classify_speh(const Segment& base, int s) {
  if (s < 1) throw PreconditionViolated("Speh multiplicity must be positive");
  const Line& line = base.line();

  // Exponents a + (s-1)/2 - j; half-integral when s is even and a integral.
  std::vector<Segment> rungs;
  const Exponent top_shift = Exponent::half_integer(s - 1);
  for (int j = 0; j < s; ++j)
    rungs.push_back(base.shifted(top_shift - j));
  Multisegment ladder(line, std::move(rungs));

  Multisegment translate =
      ladder.segments().front().a().integral()
          ? ladder
          : ladder.shifted(Exponent::half_integer(1));
  const Verdict on_translate = classify_ladder_q(translate);

  Verdict verdict;
  verdict.witness = ladder;
  verdict.witness_kind = WitnessKind::BackingLadder;
  if (line.sc_distinguished) {
    verdict.decision = Decision::Undetermined;
    verdict.reason = kOpenLineReason;
  } else if (s % 2 == 0) {
    verdict.decision = Decision::Distinguished;
    verdict.reason = "even Speh multiplicity s = " + std::to_string(s);
  } else {
    verdict.decision = Decision::NotDistinguished;
    verdict.reason = "odd Speh multiplicity s = " + std::to_string(s) +
                     " lacks a symplectic model";
  }
  if (verdict.decision != on_translate.decision)
    throw std::logic_error(
        "Speh parity disagrees with the ladder classification of the "
        "integral translate");
  return verdict;
}

Verdict product_distinguished(const std::vector<Verdict>& factors) {
  for (const Verdict& v : factors)
    if (v.decision != Decision::Distinguished)
      return {Decision::Undetermined,
              "a factor is not known distinguished; the hereditary criterion "
              "does not apply",
              std::nullopt, WitnessKind::SpehHalf, std::nullopt};
  return {Decision::Distinguished,
          "hereditary product of distinguished factors", std::nullopt,
          WitnessKind::SpehHalf, std::nullopt};
}

Rational::Rational(int n, int d) : num(n), den(d) {
  if (den == 0) throw Error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const int g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

bool Rational::abs_less_than_half() const {
  const long long n = num < 0 ? -static_cast<long long>(num) : num;
  return 2 * n < den;
}

std::string to_string(const Rational& q) {
  if (q.den == 1) return std::to_string(q.num);
  return std::to_string(q.num) + "/" + std::to_string(q.den);
}

void validate_factor(const UnitaryFactor& factor) {
  if (const auto* speh = std::get_if<SpehFactor>(&factor)) {
    if (speh->s < 1)
      throw InvalidFactor("Speh multiplicity must be positive");
    return;
  }
  if (const auto* cs = std::get_if<ComplementaryFactor>(&factor)) {
    if (cs->inner.s < 1 || cs->inner.s % 2 != 0)
      throw InvalidFactor(
          "complementary series factors wrap a Speh block of even "
          "multiplicity");
    if (!cs->alpha.abs_less_than_half())
      throw InvalidFactor("complementary parameter needs |alpha| < 1/2");
    return;
  }
  if (std::get_if<SupercuspidalFactor>(&factor)) return;
  const auto& ps = std::get<PrincipalSeries3Factor>(factor);
  if (ps.line.r != 1)
    throw InvalidFactor("the rank-3 principal series is built from an r = 1 "
                        "line");
}

int factor_rank(const UnitaryFactor& factor) {
  if (const auto* speh = std::get_if<SpehFactor>(&factor))
    return speh->base.line().r * speh->base.length() * speh->s;
  if (const auto* cs = std::get_if<ComplementaryFactor>(&factor))
    return 2 * cs->inner.base.line().r * cs->inner.base.length() * cs->inner.s;
  if (const auto* sc = std::get_if<SupercuspidalFactor>(&factor))
    return sc->line.r;
  return 3;
}

Verdict unitary_family_member(const std::vector<UnitaryFactor>& factors) {
  for (const UnitaryFactor& f : factors) validate_factor(f);
  for (const UnitaryFactor& f : factors) {
    if (const auto* speh = std::get_if<SpehFactor>(&f)) {
      if (speh->base.line().sc_distinguished)
        return {Decision::Undetermined,
                "Speh block over a distinguished line: open case",
                std::nullopt, WitnessKind::SpehHalf, std::nullopt};
      if (speh->s % 2 != 0)
        return {Decision::Undetermined,
                "Speh block of odd multiplicity is outside the covered family",
                std::nullopt, WitnessKind::SpehHalf, std::nullopt};
    } else if (const auto* cs = std::get_if<ComplementaryFactor>(&f)) {
      if (cs->inner.base.line().sc_distinguished)
        return {Decision::Undetermined,
                "complementary series over a distinguished line: open case",
                std::nullopt, WitnessKind::SpehHalf, std::nullopt};
    } else if (const auto* sc = std::get_if<SupercuspidalFactor>(&f)) {
      if (!sc->line.sc_distinguished)
        return {Decision::Undetermined,
                "supercuspidal factor without a declared symplectic model",
                std::nullopt, WitnessKind::SpehHalf, std::nullopt};
    }
    // rank-3 principal series factors always match their clause
  }
  return {Decision::Distinguished,
          "every factor belongs to the covered unitary family", std::nullopt,
          WitnessKind::SpehHalf, std::nullopt};
}

}  // namespace ladders
