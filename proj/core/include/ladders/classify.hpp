#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ladders/multisegment.hpp"
#include "ladders/symplectic.hpp"

namespace ladders {

/// Three-valued outcome: the classifiers never extrapolate past what the
/// implemented criteria decide, so open cases surface as Undetermined.
enum class Decision { Distinguished, NotDistinguished, Undetermined };

std::string to_string(Decision d);

enum class WitnessKind { SpehHalf, BackingLadder };

struct Verdict {
  Decision decision = Decision::Undetermined;
  std::string reason;  // names the criterion that decided the case
  std::optional<Multisegment> witness;
  WitnessKind witness_kind = WitnessKind::SpehHalf;
  std::optional<GoodDecomposition> certificate;
};

/// Quotient-side ladder classification.  Undetermined over lines whose
/// supercuspidal is flagged distinguished; otherwise Distinguished exactly
/// when m is of Speh type (equivalently, the ladder order pairs adjacent
/// segments by a nu-shift), with the Speh half as witness.  Single-segment
/// ladders are reported through the Steinberg / single-segment criteria.
/// Throws NotALadder when m is not a ladder.
Verdict classify_ladder_q(const Multisegment& m);

/// Zelevinsky-side ladder classification: Distinguished exactly when in the
/// ladder order every segment has even length and every adjacent pair has an
/// odd-length intersection and a union that is a segment.
Verdict classify_ladder_z(const Multisegment& m);

/// The raw Zelevinsky-side conditions on a ladder order; classify_ladder_z is
/// this plus the open-line guard.
bool zelevinsky_parity_conditions(const OrderedMultisegment& order);

/// A single segment's quotient: never distinguished over a non-distinguished
/// line for length >= 2; for length 1 the verdict mirrors the line flag.
Verdict classify_single_segment(const Segment& d);

/// The two-segment ladder {nu Delta, Delta} for length(Delta) >= 2 over a
/// non-distinguished line: always Distinguished.  Throws PreconditionViolated
/// when the length is 1 or the line is flagged distinguished.
Verdict classify_nu_pair(const Segment& d);

/// The s-fold Speh ladder built on Q(base): segments
/// [a + (s-1)/2 - j, b + (s-1)/2 - j] for j = 0, ..., s-1 (half-integral
/// exponents when s is even).  Distinguished exactly for even s; the verdict
/// is cross-checked against classify_ladder_q on the integral translate of
/// the ladder.
Verdict classify_speh(const Segment& base, int s);

/// Hereditary product: Distinguished when every factor is Distinguished
/// (including the empty product); Undetermined otherwise, because nothing is
/// claimed about products with a non-distinguished factor.
Verdict product_distinguished(const std::vector<Verdict>& factors);

/// An exact rational, used for complementary-series parameters.
struct Rational {
  int num = 0;
  int den = 1;

  Rational() = default;
  Rational(int n, int d);

  [[nodiscard]] bool abs_less_than_half() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

std::string to_string(const Rational& q);

/// One unitary building block.  Invariants are enforced by validate_factor
/// (and by every classifier that consumes factors), not at aggregate
/// construction, so parsers may build factors first and validate once.
struct SpehFactor {
  Segment base;  // delta = Q(base)
  int s = 1;

  friend bool operator==(const SpehFactor&, const SpehFactor&) = default;
};

struct ComplementaryFactor {
  SpehFactor inner;  // requires even inner.s
  Rational alpha;    // requires |alpha| < 1/2

  friend bool operator==(const ComplementaryFactor&,
                         const ComplementaryFactor&) = default;
};

struct SupercuspidalFactor {
  Line line;

  friend bool operator==(const SupercuspidalFactor& x,
                         const SupercuspidalFactor& y) {
    return identical(x.line, y.line);
  }
};

/// The rank-3 principal series chi_2 St_2 x chi_1 built from characters; its
/// distinction is imported, so no combinatorics beyond the rank is kept.
struct PrincipalSeries3Factor {
  Line line;  // an r = 1 line
  std::string notes;

  friend bool operator==(const PrincipalSeries3Factor& x,
                         const PrincipalSeries3Factor& y) {
    return identical(x.line, y.line) && x.notes == y.notes;
  }
};

using UnitaryFactor = std::variant<SpehFactor, ComplementaryFactor,
                                   SupercuspidalFactor, PrincipalSeries3Factor>;

/// Throws InvalidFactor when a factor violates its invariants (odd
/// complementary multiplicity, |alpha| >= 1/2, non-positive s, wrong rank).
void validate_factor(const UnitaryFactor& factor);

[[nodiscard]] int factor_rank(const UnitaryFactor& factor);

/// Membership test for the covered family of unitary representations:
/// Distinguished when every factor matches a covering clause (even Speh over
/// a non-distinguished line, complementary series around such a Speh,
/// distinguished supercuspidal, rank-3 principal series); Undetermined
/// otherwise.
Verdict unitary_family_member(const std::vector<UnitaryFactor>& factors);

}  // namespace ladders
