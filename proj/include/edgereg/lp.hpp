#pragma once

#include <span>

#include "edgereg/exponent.hpp"

namespace edgereg {

/// Decides exactly whether some convex combination of `points` lies below
/// `target` componentwise: exists c >= 0, sum c = 1, sum c_i b_i <= target.
/// Phase-one simplex over the rationals with Bland's rule.
/// Throws InputError on an empty point list or mismatched lengths.
bool lp_feasible_convex_cover(std::span<const ExponentVec> points, const ExponentVec& target);

}  // namespace edgereg
