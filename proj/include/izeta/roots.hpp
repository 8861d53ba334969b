#pragma once

#include <vector>

#include "izeta/charpoly.hpp"
#include "izeta/types.hpp"

namespace izeta {

// One eigenvalue with its exactly-certified algebraic multiplicity and the
// final Newton-correction size |f(z)/f'(z)| on its square-free factor.
struct RootCluster {
  Complex value;
  int multiplicity = 0;
  double residual = 0.0;

  double modulus() const { return std::abs(value); }
};

// Full spectrum of W.  Multiplicities come from the Yun square-free
// decomposition (exact integer arithmetic); positions come from
// Aberth-Ehrlich iteration on each square-free factor, refined by Newton in
// extended precision.  Real integer roots are snapped exactly (verified by
// exact polynomial evaluation), conjugate pairs are symmetrized.
// Ordering: modulus descending, then argument ascending, deterministic.
struct Spectrum {
  std::vector<RootCluster> roots;
  int dimension = 0;        // sum of multiplicities == 2*epsilon
  double certified_error = 0.0;  // max residual across clusters
};

// Throws NonConvergence (cross_check) if the iteration stalls.
Spectrum spectrum_roots(const CharPoly& p, double tol = 1e-13);

// Aberth-Ehrlich on a square-free real polynomial given by double
// coefficients (lowest degree first).  Deterministic initial configuration.
std::vector<Complex> aberth_roots(const std::vector<double>& coeffs,
                                  double tol = 1e-13, int max_iter = 400);

}  // namespace izeta
