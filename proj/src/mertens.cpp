#include "izeta/mertens.hpp"

#include <algorithm>
#include <cmath>

#include "izeta/errors.hpp"

namespace izeta {

namespace {

void check_cutoff(const PrimeCensus& census, long N) {
  if (N < 1 || N > census.n_max) {
    fail_validation("DomainError", "partial-sum cutoff must lie within the census");
  }
}

BigInt binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  BigInt acc = 1;
  for (long i = 1; i <= k; ++i) {
    acc *= n - k + i;
    acc /= i;
  }
  return acc;
}

BigRat rat_pow(const BigRat& x, long e) {
  BigRat acc = 1;
  for (long i = 0; i < e; ++i) acc *= x;
  return acc;
}

}  // namespace

double mertens_first_lhs(const PrimeCensus& census, double R, long N) {
  check_cutoff(census, N);
  KahanSum acc;
  for (long n = 1; n <= N; ++n) {
    const BigInt& p = census.count(static_cast<int>(n));
    if (p != 0) acc.add(scaled_power_term(BigInt(n) * p, R, n));
  }
  return acc.value();
}

double mertens_second_lhs(const PrimeCensus& census, double R, long N) {
  check_cutoff(census, N);
  KahanSum acc;
  for (long n = 1; n <= N; ++n) {
    const BigInt& p = census.count(static_cast<int>(n));
    if (p != 0) acc.add(scaled_power_term(p, R, n));
  }
  return acc.value();
}

double mertens_third_log_lhs(const PrimeCensus& census, double R, long N) {
  return log_cycle_product(census, R, N);
}

double mertens_first_rhs(long N, long delta, double A, double K) {
  return static_cast<double>((N / delta) * delta) + A + K;
}

double mertens_first_envelope(long N, int two_epsilon, double R, double rho,
                              double alpha) {
  const double rr = rho * R;
  const double geometric =
      rr > 0.0 ? two_epsilon * std::pow(rr, static_cast<double>(N + 1)) / (1.0 - rr)
               : 0.0;
  const double ra = std::pow(R, alpha);
  const double truncation =
      two_epsilon * std::pow(ra, static_cast<double>(N + 1)) / (1.0 - ra);
  return geometric + truncation;
}

double expansion_correction(long N, long delta, int k) {
  if (N < 1) fail_validation("DomainError", "expansion needs N >= 1");
  if (k < 0) fail_validation("DomainError", "expansion order must be >= 0");
  const long a = fractional_offset(N, delta);
  // Assemble sum_{s=1}^{k} c_s(a)/N^s as one exact rational, rounded once.
  //   c_s(a) = a^s/s + sum_{m=0}^{s-1} binom(s-1,m) a^m B_{s-m} delta^{s-m}/(s-m)
  BigRat total = 0;
  const BigRat ra(a), rd(delta), rN(N);
  for (int s = 1; s <= k; ++s) {
    BigRat cs = rat_pow(ra, s) / BigRat(s);
    for (int m = 0; m < s; ++m) {
      cs += BigRat(binomial(s - 1, m)) * rat_pow(ra, m) * bernoulli_number(s - m) *
            rat_pow(rd, s - m) / BigRat(s - m);
    }
    total += cs / rat_pow(rN, s);
  }
  return total.convert_to<double>();
}

double harmonic_expansion(long N, long delta, int k) {
  return std::log(static_cast<double>(N)) - std::log(static_cast<double>(delta)) +
         euler_gamma - expansion_correction(N, delta, k);
}

double mertens_second_rhs(long N, long delta, int k, double C, double H) {
  return std::log(static_cast<double>(N)) + euler_gamma + std::log(C) - H -
         expansion_correction(N, delta, k);
}

double mertens_third_rhs(long N, double C) {
  return std::exp(-euler_gamma) / (C * static_cast<double>(N));
}

MertensSeries build_mertens_series(int theorem, int k, const PrimeCensus& census,
                                   const SpectralPartition& part,
                                   const MertensConstants& consts, int two_epsilon,
                                   long N_max) {
  check_cutoff(census, N_max);
  MertensSeries series;
  series.theorem = theorem;
  series.k = theorem == 2 ? k : 0;
  series.delta = census.delta;
  series.points.reserve(static_cast<size_t>(N_max));

  const double R = part.R;
  switch (theorem) {
    case 1: series.target = std::log(part.rho * R); break;
    case 2: series.target = -static_cast<double>(series.k + 1); break;
    case 3: series.target = -1.0; break;
    default: fail_validation("DomainError", "theorem index must be 1, 2, or 3");
  }

  // One pass, carrying the compensated partial sum; the per-point values are
  // bit-identical to the single-shot evaluators, which walk the same terms
  // in the same order.
  KahanSum lhs_acc;
  static const BigInt cap = BigInt(1) << 53;
  for (long N = 1; N <= N_max; ++N) {
    const BigInt& p = census.count(static_cast<int>(N));
    MertensPoint pt;
    pt.N = N;
    switch (theorem) {
      case 1: {
        if (p != 0) lhs_acc.add(scaled_power_term(BigInt(N) * p, R, N));
        pt.lhs = lhs_acc.value();
        pt.rhs = mertens_first_rhs(N, census.delta, consts.A, consts.K.value);
        pt.residual = pt.lhs - pt.rhs;
        pt.envelope = mertens_first_envelope(N, two_epsilon, R, part.rho, consts.alpha);
        break;
      }
      case 2: {
        if (p != 0) lhs_acc.add(scaled_power_term(p, R, N));
        pt.lhs = lhs_acc.value();
        pt.rhs = mertens_second_rhs(N, census.delta, series.k, consts.C, consts.H.value);
        pt.residual = pt.lhs - pt.rhs;
        break;
      }
      case 3: {
        if (p != 0) {
          if (p < cap) {
            const double xn = std::pow(R, static_cast<double>(N));
            if (xn > 0.0) {
              lhs_acc.add(p.convert_to<double>() * std::log1p(-xn));
            } else {
              lhs_acc.add(-scaled_power_term(p, R, N));
            }
          } else {
            const double t1 = scaled_power_term(p, R, N);
            const double xn = std::exp(static_cast<double>(N) * std::log(R));
            lhs_acc.add(-t1 * (1.0 + xn * (0.5 + xn * (1.0 / 3.0 + xn * 0.25))));
          }
        }
        pt.lhs = std::exp(lhs_acc.value());
        pt.rhs = mertens_third_rhs(N, consts.C);
        pt.residual = pt.lhs / pt.rhs - 1.0;
        break;
      }
    }
    series.points.push_back(pt);
  }
  return series;
}

namespace {

struct FitAccumulator {
  std::vector<double> xs, ys;
  bool last_below_floor = false;
  bool saw_any_point = false;

  void take(double x, double absr, double floor) {
    saw_any_point = true;
    last_below_floor = absr < floor;
    if (absr >= floor) {
      xs.push_back(x);
      ys.push_back(std::log(absr));
    }
  }

  bool fit(double& slope) const {
    const size_t n = xs.size();
    if (n < 2) return false;
    double mx = 0, my = 0;
    for (size_t i = 0; i < n; ++i) {
      mx += xs[i];
      my += ys[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double num = 0, den = 0;
    for (size_t i = 0; i < n; ++i) {
      num += (xs[i] - mx) * (ys[i] - my);
      den += (xs[i] - mx) * (xs[i] - mx);
    }
    if (den == 0) return false;
    slope = num / den;
    return true;
  }
};

RateFit finish_fit(const FitAccumulator& acc, long cls, double target, double band) {
  RateFit fit;
  fit.residue_class = cls;
  fit.target = target;
  fit.points_used = static_cast<int>(acc.xs.size());
  fit.hit_floor = acc.saw_any_point && acc.last_below_floor;
  double slope = 0.0;
  if (acc.fit(slope)) {
    fit.fitted = slope;
    fit.rel_deviation = target != 0.0 ? std::abs(slope - target) / std::abs(target)
                                      : std::abs(slope);
    fit.within_band = fit.rel_deviation <= band;
  } else {
    fit.all_below_floor = acc.saw_any_point;
  }
  fit.pass = fit.within_band || fit.hit_floor || fit.all_below_floor;
  return fit;
}

}  // namespace

ConvergenceReport convergence_rates(const MertensSeries& series, long window_lo,
                                    long window_hi, double band, double floor) {
  ConvergenceReport report;
  const long n_avail = static_cast<long>(series.points.size());
  report.window_lo = std::max(window_lo, 1L);
  report.window_hi = std::min(window_hi, n_avail);
  report.floor = floor;
  report.band = band;
  if (report.window_lo >= report.window_hi) {
    fail_validation("DomainError", "empty decay-fit window");
  }

  const bool geometric = series.theorem == 1;
  const long delta = geometric ? 1 : std::max(series.delta, 1L);

  std::vector<FitAccumulator> acc(static_cast<size_t>(delta));
  for (long N = report.window_lo; N <= report.window_hi; ++N) {
    const auto& pt = series.points[static_cast<size_t>(N - 1)];
    const double absr = std::abs(pt.residual);
    const double x = geometric ? static_cast<double>(N) : std::log(static_cast<double>(N));
    acc[static_cast<size_t>(N % delta)].take(x, absr, floor);
  }

  for (long cls = 0; cls < delta; ++cls) {
    report.class_fits.push_back(finish_fit(acc[static_cast<size_t>(cls)],
                                           delta == 1 ? -1 : cls, series.target, band));
  }

  // The asymptotic claim is about the slowest-decaying residue class: the
  // class with the largest fitted exponent.  Classes whose leading
  // correction coefficient vanishes decay an order faster and would make a
  // pooled fit land between the true orders.
  const RateFit* slowest = nullptr;
  for (const auto& f : report.class_fits) {
    if (f.all_below_floor || f.points_used < 2) continue;
    if (slowest == nullptr || f.fitted > slowest->fitted) slowest = &f;
  }
  if (slowest != nullptr) {
    report.overall = *slowest;
  } else {
    // every class already sits below the measurement floor
    report.overall = report.class_fits.front();
    report.overall.residue_class = -1;
    report.overall.all_below_floor = true;
    report.overall.pass = true;
  }
  return report;
}

long deviation_bound_onset(const PrimeCensus& census, const ClosedPathCounts& counts,
                           int two_epsilon, double R, double alpha) {
  const long n_max = std::min(census.n_max, counts.n_max);
  const double log_r_inv = -std::log(R);
  long first_ok = 1;
  for (long n = 1; n <= n_max; ++n) {
    const BigInt dev = BigInt(n) * census.count(static_cast<int>(n)) -
                       counts.N(static_cast<int>(n));
    if (dev == 0) continue;
    const double lhs = log_abs(dev);
    const double rhs = std::log(2.0 * two_epsilon) + (1.0 - alpha) * n * log_r_inv;
    if (lhs >= rhs) first_ok = n + 1;
  }
  return first_ok;
}

}  // namespace izeta
