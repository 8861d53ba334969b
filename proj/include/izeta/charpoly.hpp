#pragma once

#include <cstdint>
#include <vector>

#include "izeta/counting.hpp"
#include "izeta/edge_matrix.hpp"
#include "izeta/polynomial.hpp"
#include "izeta/types.hpp"

namespace izeta {

// Exact characteristic polynomial det(x I - W), monic of degree 2*epsilon.
struct CharPoly {
  IntPoly coeff;  // coeff[i] multiplies x^i; coeff[degree] == 1

  int degree() const { return static_cast<int>(coeff.size()) - 1; }

  // Coefficients of det(I - W u) = u^d * charpoly(1/u), lowest degree first.
  // This is the reciprocal of the zeta function as a polynomial in u.
  IntPoly reversed() const;
};

// Newton-identity recurrence driven by the exact power traces
// p_i = trace(W^i).  Every division by i is asserted exact
// (InexactDivision -> cross_check), which certifies the trace sequence and
// the recurrence against each other.
CharPoly char_poly(const EdgeMatrix& m,
                   std::uint64_t budget = default_work_budget);

}  // namespace izeta
