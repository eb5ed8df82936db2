#pragma once

#include "ppower/rational.hpp"

#include <stdexcept>
#include <vector>

namespace ppower {

class SimplexError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LpSolution {
  Rat value;
  std::vector<Rat> x;
  unsigned pivots = 0;
};

/// Maximizes c.x subject to A x <= b, x >= 0 in exact rational arithmetic.
/// Requires b >= 0 so the slack basis is feasible (all inputs here satisfy
/// this; violations throw).  Dense tableau, Bland's rule (smallest-index
/// entering column, smallest-basis-index ratio tiebreak), hence no cycling.
/// Throws SimplexError when the LP is unbounded.
LpSolution simplex_maximize(const std::vector<std::vector<Rat>>& a,
                            const std::vector<Rat>& b, const std::vector<Rat>& c);

}  // namespace ppower
