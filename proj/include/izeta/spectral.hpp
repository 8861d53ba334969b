#pragma once

#include "izeta/counting.hpp"
#include "izeta/roots.hpp"
#include "izeta/types.hpp"

namespace izeta {

// Spectrum of W split at the spectral circle |lambda| = 1/R, where R is the
// radius of convergence of the zeta function (reciprocal of the Perron
// eigenvalue).  `rho` is the largest interior modulus.
struct SpectralPartition {
  double perron = 0.0;  // largest real eigenvalue, simple
  double R = 0.0;       // 1/perron
  double rho = 0.0;     // max |lambda| over the interior (0 if empty)
  std::vector<RootCluster> on_circle;  // |lambda| = perron
  std::vector<RootCluster> interior;   // |lambda| < perron
};

// Classifies eigenvalues against the circle with relative tolerance `eps_c`.
// Any eigenvalue falling in the ambiguity band (1-10*eps_c, 1-eps_c) of
// relative modulus throws PartitionAmbiguous.  When `expected_delta` > 0 the
// on-circle count is checked against it (CircleCountMismatch); pass 0 to skip
// (e.g. while the census period is still provisional).
SpectralPartition perron_radius(const Spectrum& s, long expected_delta,
                                double eps_c = 1e-9);

// Zeta value via the spectral determinant: 1 / prod (1 - lambda u)^mult.
// Requires |u| < R (DomainError, validation).
Complex zeta_determinant(const Spectrum& s, const SpectralPartition& part, Complex u);

// Truncated Euler product over prime classes of length <= L, with the
// rigorous tail bound derived from pi(n) <= 2*epsilon*(1/R)^n:
//   |log tail| <= 2*epsilon/(1-u) * (u/R)^{L+1} / (L+1) / (1 - u/R)   (0<u<R).
struct EulerProductValue {
  double value = 0.0;
  double log_tail_bound = 0.0;
  int truncation = 0;
};

// Throws TailBoundTooLarge (validation) when `required_accuracy` > 0 and the
// bound cannot be met at this truncation.
EulerProductValue zeta_euler_product(const PrimeCensus& census, int two_epsilon,
                                     double u, double R, int L,
                                     double required_accuracy = 0.0);

}  // namespace izeta
