#pragma once

#include <string>

namespace ladders {

/// A supercuspidal line: the family of nu-twists of one fixed supercuspidal
/// representation rho of G_r.  The distinction flags are declared inputs,
/// never computed: whether rho itself carries a symplectic model is a
/// hypothesis the caller supplies.
struct Line {
  std::string label;
  int r = 1;                     // rho is a representation of G_r
  bool sc_distinguished = false; // rho itself admits a symplectic model
  bool dim_gt_one = false;       // only meaningful for r == 1

  /// Lines are equal exactly when their labels agree.
  friend bool operator==(const Line& x, const Line& y) {
    return x.label == y.label;
  }
};

/// Field-by-field comparison, for contexts (document round-trips) where
/// label equality is not enough.
inline bool identical(const Line& x, const Line& y) {
  return x.label == y.label && x.r == y.r &&
         x.sc_distinguished == y.sc_distinguished &&
         x.dim_gt_one == y.dim_gt_one;
}

}  // namespace ladders
