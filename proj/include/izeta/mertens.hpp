#pragma once

#include <vector>

#include "izeta/constants.hpp"
#include "izeta/counting.hpp"
#include "izeta/spectral.hpp"
#include "izeta/types.hpp"

namespace izeta {

// ---- Partial sums (left-hand sides) ---------------------------------------
// All three accumulate in census order with compensated summation, and all
// take the number-of-terms cutoff N (<= census horizon).

// sum_{n<=N} n pi(n) R^n
double mertens_first_lhs(const PrimeCensus& census, double R, long N);

// sum_{n<=N} pi(n) R^n
double mertens_second_lhs(const PrimeCensus& census, double R, long N);

// log prod_{n<=N} (1 - R^n)^{pi(n)}, each factor through log1p so that the
// huge-count/tiny-base regime keeps full precision.
double mertens_third_log_lhs(const PrimeCensus& census, double R, long N);

// ---- Predicted values (right-hand sides) ----------------------------------

// floor(N/delta)*delta + A + K
double mertens_first_rhs(long N, long delta, double A, double K);

// Decay envelope for the first law's residual: the geometric part
// 2 eps (rho R)^{N+1} / (1 - rho R) from the interior spectrum, plus the
// series-truncation part 2 eps R^{alpha(N+1)} / (1 - R^alpha).  Both terms
// are needed: whichever spectral situation obtains, their sum bounds the
// observed residual.
double mertens_first_envelope(long N, int two_epsilon, double R, double rho,
                              double alpha);

// sum_{s=1}^{k} c_s(a)/N^s with a = a(N) = N - floor(N/delta)*delta and
//   c_s(a) = a^s/s + sum_{m=0}^{s-1} binom(s-1,m) a^m B_{s-m} delta^{s-m}/(s-m),
// computed in exact rational arithmetic and rounded once.  This single
// function is shared verbatim by the harmonic expansion and the second law's
// prediction, so the two agree bit for bit.
double expansion_correction(long N, long delta, int k);

// Order-k expansion of the harmonic number H_{floor(N/delta)}:
//   log N - log delta + euler_gamma - expansion_correction(N, delta, k).
double harmonic_expansion(long N, long delta, int k);

// log N + euler_gamma + log C - H - expansion_correction(N, delta, k)
double mertens_second_rhs(long N, long delta, int k, double C, double H);

// exp(-euler_gamma) / (C N)
double mertens_third_rhs(long N, double C);

// ---- Residual series and decay-rate fits ----------------------------------

struct MertensPoint {
  long N = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;  // lhs - rhs (laws 1, 2); lhs/rhs - 1 (law 3)
  double envelope = 0.0;  // law 1 only
};

struct MertensSeries {
  int theorem = 0;  // 1, 2, or 3
  int k = 0;        // expansion order (law 2; 0 otherwise)
  long delta = 0;
  double target = 0.0;  // predicted slope (law 1) or exponent (laws 2, 3)
  std::vector<MertensPoint> points;  // N = 1..N_max
};

MertensSeries build_mertens_series(int theorem, int k, const PrimeCensus& census,
                                   const SpectralPartition& part,
                                   const MertensConstants& consts, int two_epsilon,
                                   long N_max);

// Least-squares decay fit of |residual| over an N window.  Law 1 fits
// log|r| against N (geometric decay, slope vs log(rho R)); laws 2 and 3 fit
// log|r| against log N (power decay, exponent vs -(k+1) or -1).
//
// Power fits run per residue class of N mod delta, because the leading
// correction coefficient can vanish on some classes and those residuals then
// decay one order faster; the slowest-decaying class is the one the
// asymptotic statement is about, and it is what `overall` reports.
//
// Residuals below `floor` are noise at double precision and are excluded
// from the fit.  A series whose residuals fall below the floor inside the
// window has outrun what a fit can measure: `hit_floor` is set and the fit
// passes on that basis.
struct RateFit {
  long residue_class = -1;  // -1: pooled fit (law 1 / delta == 1)
  double fitted = 0.0;
  double target = 0.0;
  double rel_deviation = 0.0;
  bool within_band = false;
  bool hit_floor = false;        // |r| < floor at the window's end
  bool all_below_floor = false;  // nothing to fit at all
  bool pass = false;
  int points_used = 0;
};

struct ConvergenceReport {
  long window_lo = 0, window_hi = 0;
  double floor = 0.0, band = 0.0;
  std::vector<RateFit> class_fits;
  RateFit overall;
};

ConvergenceReport convergence_rates(const MertensSeries& series, long window_lo,
                                    long window_hi, double band = 0.15,
                                    double floor = 1e-12);

// Smallest N0 such that |n pi(n) - N_n| < 2 eps (1/R)^{(1-alpha) n} holds for
// every n in [N0, n_max]; the deviation bound that powers every truncation
// estimate, checked against the exact integers.
long deviation_bound_onset(const PrimeCensus& census, const ClosedPathCounts& counts,
                           int two_epsilon, double R, double alpha);

}  // namespace izeta
