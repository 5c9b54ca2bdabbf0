#pragma once

#include <string>
#include <vector>

#include "ladders/multisegment.hpp"

namespace ladders {

/// Outcome of one exhaustive verification suite.
struct SuiteResult {
  std::string suite;
  long long cases = 0;
  long long mismatches = 0;
  std::vector<std::string> examples;  // up to a handful of counterexamples
  std::vector<std::string> notes;

  [[nodiscard]] bool passed() const { return mismatches == 0; }
};

/// Every ladder over the given pool of segments with at most max_t segments,
/// in a deterministic order.
std::vector<Multisegment> enumerate_ladders(const Line& line, int max_t,
                                            int max_len, int lo, int hi);

/// Rank-4 ladder classification over (a) an r=2 line and (b) an r=1 line with
/// dim>1, exponents in [-2, 3], compared against the published two-family
/// table ({[a+1],[a]} for (a); {[a+1,a+2],[a,a+1]} and four consecutive
/// points for (b)).
SuiteResult verify_rank4_table();

/// speh_halve(m) present  <=>  the decreasing-end order pairs adjacent
/// segments by a nu-shift, over all ladders in the window.
SuiteResult verify_ladder_pairing(int max_t, int max_len, int lo, int hi);

/// speh_halve(m) present  <=>  the dual's ladder order has all lengths even,
/// odd adjacent intersections, and segment unions, over the same window.
SuiteResult verify_dual_parity(int max_t, int max_len, int lo, int hi);

/// mw_dual is an involution, preserves exponent support, exchanges single
/// segments with point collections, and carries ladders to ladders, over all
/// multisegments with at most max_segments segments supported in [lo, hi].
SuiteResult verify_dual_laws(int max_segments, int lo, int hi);

/// Wraps verify_speh_implication: symplectic implies Speh type.
SuiteResult verify_speh_implication_suite(int max_segments, int lo, int hi);

/// classify_speh agrees with the ladder classification of the integral
/// translate, and its parity rule, for s = 1..max_s over bases of length up
/// to max_len (integral and half-integral beginnings).
SuiteResult verify_speh_parity(int max_s, int max_len);

/// s2_of block-involution counts against the involution numbers
/// 1, 2, 4, 10, 26, 76 on constant compositions, exponent support per
/// two-cycle, marker patterns, and the maximal-parabolic exponent grid.
SuiteResult verify_orbit_counts(int max_k);

/// classify_ladder_z(m) agrees with classify_ladder_q(mw_dual(m)) over the
/// criterion window.
SuiteResult verify_classifier_duality(int max_t, int max_len, int lo, int hi);

/// Round-trips a generated corpus of documents through parse and format and
/// checks the canonical error cases.
SuiteResult verify_roundtrip();

}  // namespace ladders
