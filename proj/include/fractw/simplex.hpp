#pragma once

#include <vector>

#include "fractw/rational.hpp"

namespace fractw {

struct SimplexResult {
  Rational value;                // optimal objective
  std::vector<Rational> primal;  // y, one per column
  std::vector<Rational> dual;    // one per row, read off the slack reduced costs
};

// Solves  max c'y  subject to  A y <= b, y >= 0  with exact rationals.
// Requires b >= 0 so the slack basis starts feasible (no phase one).
// Bland's rule throughout, so termination is guaranteed. The dual vector is
// feasible for  min b'x : A'x >= c, x >= 0  and attains the same value.
SimplexResult solve_packing(const std::vector<std::vector<Rational>>& A,
                            const std::vector<Rational>& b, const std::vector<Rational>& c);

}  // namespace fractw
