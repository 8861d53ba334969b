#pragma once

#include <utility>
#include <vector>

#include "izeta/types.hpp"

namespace izeta {

// Dense univariate polynomials, coefficient of x^i at index i.  The exact
// layer works over the rationals; primitive integer form (content 1, positive
// leading coefficient) is the canonical interchange representation.
using IntPoly = std::vector<BigInt>;
using RatPoly = std::vector<BigRat>;

// Drops trailing zero coefficients; the zero polynomial becomes {}.
void trim(RatPoly& p);
void trim(IntPoly& p);

int degree(const IntPoly& p);  // -1 for the zero polynomial

RatPoly to_rational(const IntPoly& p);
// Clears denominators and divides out the content; flips sign so the leading
// coefficient is positive.
IntPoly to_primitive_integer(const RatPoly& p);

IntPoly derivative(const IntPoly& p);
IntPoly multiply(const IntPoly& a, const IntPoly& b);

BigInt eval_int(const IntPoly& p, const BigInt& x);
BigRat eval_rat(const IntPoly& p, const BigRat& x);
Complex eval_complex(const std::vector<double>& coeffs, Complex x);

// Monic gcd over the rationals (Euclid).  Returned primitive-integer.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

// Exact quotient; throws a cross_check Error (InexactDivision) when the
// division leaves a remainder, which in this codebase always signals a bug
// upstream rather than bad user input.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

// Yun square-free decomposition: p = prod f_i^{m_i} with the f_i square-free
// and pairwise coprime.  Factors are primitive-integer, sorted by
// multiplicity.  This is what certifies eigenvalue multiplicities exactly,
// before any floating-point root finding happens.
struct SquareFreeFactor {
  IntPoly factor;
  int multiplicity = 0;
};

std::vector<SquareFreeFactor> yun_square_free(const IntPoly& p);

}  // namespace izeta
