#include "izeta/constants.hpp"

#include <cmath>
#include <mutex>
#include <vector>

#include "izeta/errors.hpp"

namespace izeta {

namespace {

BigInt binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  BigInt acc = 1;
  for (long i = 1; i <= k; ++i) {
    acc *= n - k + i;
    acc /= i;
  }
  return acc;
}

}  // namespace

BigRat bernoulli_number(int s) {
  if (s < 0) fail_validation("DomainError", "Bernoulli numbers need s >= 0");
  static std::mutex mu;
  static std::vector<BigRat> cache{BigRat(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= s) {
    const long m = static_cast<long>(cache.size());
    // sum_{k=0}^{m} binom(m+1,k) B_k = 0  =>  solve for B_m
    BigRat acc = 0;
    for (long k = 0; k < m; ++k) {
      acc += BigRat(binomial(m + 1, k)) * cache[static_cast<size_t>(k)];
    }
    cache.push_back(-acc / BigRat(m + 1));
  }
  return cache[static_cast<size_t>(s)];
}

long fractional_offset(long N, long delta) {
  if (delta < 1 || N < 0) fail_validation("DomainError", "need N >= 0 and delta >= 1");
  return N - (N / delta) * delta;
}

double power_sum_tail(double x) {
  if (!(x >= 0.0 && x < 1.0)) fail_validation("DomainError", "power_sum_tail needs 0 <= x < 1");
  if (x >= 0.25) return -std::log1p(-x) - x;
  // Direct series: the log1p form cancels catastrophically once x is small,
  // while the series converges in a few dozen terms at worst.
  double term = x * x;
  double acc = 0.0;
  for (int m = 2; m < 80; ++m) {
    const double add = term / m;
    acc += add;
    if (add < acc * 1e-18) break;
    term *= x;
  }
  return acc;
}

double const_A(const SpectralPartition& part) {
  Complex acc = 0.0;
  for (const auto& r : part.interior) {
    const Complex lr = r.value * part.R;
    acc += static_cast<double>(r.multiplicity) * (lr / (1.0 - lr));
  }
  if (std::abs(acc.imag()) > 1e-9 * (1.0 + std::abs(acc.real()))) {
    fail_cross_check("ImaginaryResidue",
                     "imaginary parts of the interior sum failed to cancel: " +
                         std::to_string(acc.imag()));
  }
  return acc.real();
}

namespace {

// Shared truncation bound for the deviation series: the terms are bounded by
// 2 eps R^{alpha n}, so the tail past n_max is under
// 2 eps R^{alpha(n_max+1)} / (1 - R^alpha).
double deviation_tail(int two_epsilon, double R, double alpha, long n_max) {
  const double ra = std::pow(R, alpha);
  return 2.0 * two_epsilon * std::pow(ra, static_cast<double>(n_max + 1)) / (1.0 - ra);
}

long deviation_horizon_for(int two_epsilon, double R, double alpha, double target) {
  const double ra = std::pow(R, alpha);
  const double need =
      std::log(target * (1.0 - ra) / (2.0 * two_epsilon)) / std::log(ra);
  return static_cast<long>(std::ceil(need)) + 1;
}

void require_horizon(const char* what, double tail, double target,
                     int two_epsilon, double R, double alpha) {
  if (tail > target) {
    fail_validation("InsufficientCensus",
                    std::string(what) + " truncation tail " + std::to_string(tail) +
                        " exceeds the target " + std::to_string(target) +
                        "; a census to n_max >= " +
                        std::to_string(deviation_horizon_for(two_epsilon, R, alpha, target)) +
                        " would suffice");
  }
}

}  // namespace

SeriesValue const_K(const PrimeCensus& census, const ClosedPathCounts& counts,
                    int two_epsilon, double R, double alpha, double target) {
  const long n_max = std::min(census.n_max, counts.n_max);
  SeriesValue out;
  out.tail_bound = deviation_tail(two_epsilon, R, alpha, n_max);
  require_horizon("K", out.tail_bound, target, two_epsilon, R, alpha);

  KahanSum acc;
  for (long n = 1; n <= n_max; ++n) {
    const BigInt dev = BigInt(n) * census.count(static_cast<int>(n)) -
                       counts.N(static_cast<int>(n));
    if (dev != 0) acc.add(scaled_power_term(dev, R, n));
  }
  out.value = acc.value();
  return out;
}

SeriesValue const_H_spectral(const PrimeCensus& census, const ClosedPathCounts& counts,
                             int two_epsilon, double R, double alpha, double target) {
  const long n_max = std::min(census.n_max, counts.n_max);
  SeriesValue out;
  // The K bound divided by n only shrinks; reusing it unchanged stays valid.
  out.tail_bound = deviation_tail(two_epsilon, R, alpha, n_max);
  require_horizon("H", out.tail_bound, target, two_epsilon, R, alpha);

  KahanSum acc;
  for (long n = 1; n <= n_max; ++n) {
    const BigInt excess = counts.N(static_cast<int>(n)) -
                          BigInt(n) * census.count(static_cast<int>(n));
    if (excess != 0) acc.add(scaled_power_term(excess, R, n) / static_cast<double>(n));
  }
  out.value = acc.value();
  return out;
}

SeriesValue const_H_prime(const PrimeCensus& census, int two_epsilon, double R,
                          double target) {
  const long n_max = census.n_max;
  SeriesValue out;
  out.tail_bound = (two_epsilon / 2.0) * std::pow(R, static_cast<double>(n_max + 1)) /
                   ((1.0 - R) * (1.0 - R));
  if (out.tail_bound > target) {
    fail_validation("InsufficientCensus",
                    "H (cycle route) tail " + std::to_string(out.tail_bound) +
                        " exceeds the target " + std::to_string(target));
  }

  static const BigInt exact_cap = BigInt(1) << 53;
  KahanSum acc;
  for (long n = 1; n <= n_max; ++n) {
    const BigInt& p = census.count(static_cast<int>(n));
    if (p == 0) continue;
    if (p < exact_cap) {
      acc.add(p.convert_to<double>() * power_sum_tail(std::pow(R, static_cast<double>(n))));
    } else {
      // pi(n) >= 2^53 forces x = R^n <= ~2^-53: the tail is its leading
      // terms, recovered through log-domain magnitudes.
      const double t2 = scaled_power_term(p, R * R, n);
      const double xn = std::exp(static_cast<double>(n) * std::log(R));
      acc.add(t2 * (0.5 + xn * (1.0 / 3.0 + xn * 0.25)));
    }
  }
  out.value = acc.value();
  return out;
}

double const_C_product(const SpectralPartition& part) {
  Complex det = 1.0;
  bool perron_skipped = false;
  auto fold = [&](const RootCluster& r) {
    int mult = r.multiplicity;
    if (!perron_skipped && r.value.imag() == 0.0 && r.value.real() > 0 &&
        std::abs(r.value.real() - part.perron) <= 1e-12 * part.perron) {
      --mult;
      perron_skipped = true;
    }
    for (int m = 0; m < mult; ++m) {
      const Complex factor = 1.0 - r.value * part.R;
      if (std::abs(factor) < 1e-12) {
        fail_cross_check("DivisionNearZero",
                         "a non-Perron eigenvalue sits numerically on the "
                         "spectral circle at u = R");
      }
      det *= factor;
    }
  };
  for (const auto& r : part.on_circle) fold(r);
  for (const auto& r : part.interior) fold(r);
  if (!perron_skipped) {
    fail_cross_check("DivisionNearZero", "Perron eigenvalue missing from the partition");
  }
  const Complex c = 1.0 / det;
  if (std::abs(c.imag()) > 1e-9 * (1.0 + std::abs(c.real()))) {
    fail_cross_check("ImaginaryResidue",
                     "residue product has a surviving imaginary part");
  }
  return c.real();
}

double const_C_residue(const CharPoly& p, double R) {
  // C = lim_{u->R^-} (1 - u/R) / det(I - W u), extrapolated from
  // u = R(1 - 10^-k), k = 4..7.  det(I - W u) is the exact integer
  // coefficient vector of the reversed characteristic polynomial, evaluated
  // in extended precision; Richardson elimination removes the O(h) terms.
  const IntPoly rev = p.reversed();
  std::vector<long double> q(rev.size());
  for (size_t i = 0; i < rev.size(); ++i) q[i] = rev[i].convert_to<long double>();

  const long double Rl = static_cast<long double>(R);
  long double table[4];
  long double hs[4];
  for (int i = 0; i < 4; ++i) {
    const long double h = std::pow(10.0L, static_cast<long double>(-(4 + i)));
    const long double u = Rl * (1.0L - h);
    long double det = 0.0L;
    for (size_t j = q.size(); j-- > 0;) det = det * u + q[j];
    table[i] = h / det;
    hs[i] = h;
  }
  // Neville toward h = 0.
  for (int j = 1; j < 4; ++j) {
    for (int i = 3; i >= j; --i) {
      table[i] = (table[i] * hs[i - j] - table[i - 1] * hs[i]) / (hs[i - j] - hs[i]);
    }
  }
  return static_cast<double>(table[3]);
}

MertensConstants compute_constants(const PrimeCensus& census,
                                   const ClosedPathCounts& counts,
                                   const CharPoly& p,
                                   const SpectralPartition& part,
                                   int two_epsilon, double alpha, double target) {
  MertensConstants c;
  c.alpha = alpha;
  c.A = const_A(part);
  c.K = const_K(census, counts, two_epsilon, part.R, alpha, target);
  c.C = const_C_product(part);
  c.C_residue = const_C_residue(p, part.R);
  c.H = const_H_spectral(census, counts, two_epsilon, part.R, alpha, target);
  c.H_prime = const_H_prime(census, two_epsilon, part.R, target);

  if (!(c.C > 0.0)) {
    fail_cross_check("DivisionNearZero", "residue constant must be positive");
  }
  const double c_tol = 1e-5 * (1.0 + std::abs(c.C));
  if (std::abs(c.C - c.C_residue) > c_tol) {
    fail_cross_check("CrossCheckFailed",
                     "residue constant disagrees between the eigenvalue product (" +
                         std::to_string(c.C) + ") and the limit route (" +
                         std::to_string(c.C_residue) + ")");
  }
  const double h_tol =
      c.H.tail_bound + c.H_prime.tail_bound + 1e-8 * (1.0 + std::abs(c.H.value));
  if (std::abs(c.H.value - c.H_prime.value) > h_tol) {
    fail_cross_check("CrossCheckFailed",
                     "the two routes to H disagree: " + std::to_string(c.H.value) +
                         " vs " + std::to_string(c.H_prime.value));
  }
  return c;
}

}  // namespace izeta
