#pragma once

#include "ladders/multisegment.hpp"

namespace ladders {

/// The dual multisegment m^t computed by the Moeglin-Waldspurger chain
/// algorithm.  The map is an involution, preserves the exponent-support
/// multiset, carries single segments to collections of points (and back), and
/// carries ladders to ladders.  Throws MixedGrid unless all exponents of m
/// sit on a single integral grid.
Multisegment mw_dual(const Multisegment& m);

}  // namespace ladders
