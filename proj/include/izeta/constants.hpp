#pragma once

#include "izeta/charpoly.hpp"
#include "izeta/counting.hpp"
#include "izeta/spectral.hpp"
#include "izeta/types.hpp"

namespace izeta {

// Exact Bernoulli number B_s (B_1 = -1/2 convention), via the defining
// recurrence sum_{k<=s} binom(s+1,k) B_k = 0.  Cached, thread-safe.
BigRat bernoulli_number(int s);

// a(N) = N - floor(N/delta)*delta, always in [0, delta).
long fractional_offset(long N, long delta);

// sum_{m>=2} x^m / m = -log(1-x) - x, evaluated without cancellation:
// direct series for small x, log1p otherwise.  The naive form loses all
// significant digits once x drops below machine epsilon relative to 1, and
// the per-term error ~x^2/2 would otherwise accumulate across a harmonic
// series' worth of terms.
double power_sum_tail(double x);

// A truncated series value with a rigorous bound on the discarded tail.
struct SeriesValue {
  double value = 0.0;
  double tail_bound = 0.0;
};

// A = sum over interior eigenvalues of lambda*R / (1 - lambda*R), exact up
// to rounding (finite sum).  Imaginary parts must cancel to < 1e-9
// (ImaginaryResidue, cross_check).
double const_A(const SpectralPartition& part);

// K = sum_{n>=1} (n pi(n) - N_n) R^n, truncated at the census horizon.  The
// tail is bounded through |n pi(n) - N_n| < 2 eps (1/R)^{(1-alpha)n} by
// 2 eps R^{alpha(n_max+1)} / (1 - R^alpha).  Throws InsufficientCensus
// (validation) when the bound exceeds `target`, reporting the horizon that
// would suffice.
SeriesValue const_K(const PrimeCensus& census, const ClosedPathCounts& counts,
                    int two_epsilon, double R, double alpha, double target);

// C = prod over eigenvalues except one Perron copy of (1 - lambda R)^{-1}.
// Throws DivisionNearZero (cross_check) if any factor's modulus drops below
// 1e-12, ImaginaryResidue if the product's imaginary part survives.
double const_C_product(const SpectralPartition& part);

// Independent route to the same constant: C = -(1/R) Res_{u=R} Z(u),
// computed as the Richardson-extrapolated limit of (1 - u/R) Z(u) at
// u = R(1 - 10^{-k}), k = 4..7, where Z comes from the exact reciprocal
// polynomial det(I - W u) evaluated in extended precision.
double const_C_residue(const CharPoly& p, double R);

// H = -sum_{n>=1} (1/n)(n pi(n) - N_n) R^n, same truncation bound as K
// divided by n (the K bound is reused unchanged, which is safe).
SeriesValue const_H_spectral(const PrimeCensus& census, const ClosedPathCounts& counts,
                             int two_epsilon, double R, double alpha, double target);

// Same constant summed over the prime census directly:
// H = sum_n pi(n) * sum_{m>=2} R^{mn}/m, with tail bound
// eps R^{N+1} / (1-R)^2 from pi(n) <= 2 eps (1/R)^n.  Agreement of the two
// routes is the strongest single end-to-end check in the pipeline.
SeriesValue const_H_prime(const PrimeCensus& census, int two_epsilon,
                          double R, double target);

// The constants bundle the asymptotic laws consume.
struct MertensConstants {
  double A = 0.0;
  SeriesValue K;
  double C = 0.0;
  double C_residue = 0.0;
  SeriesValue H;         // spectral route
  SeriesValue H_prime;   // census route
  double alpha = 0.0;
};

MertensConstants compute_constants(const PrimeCensus& census,
                                   const ClosedPathCounts& counts,
                                   const CharPoly& p,
                                   const SpectralPartition& part,
                                   int two_epsilon, double alpha, double target);

}  // namespace izeta
