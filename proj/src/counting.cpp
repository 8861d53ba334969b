#include "izeta/counting.hpp"

#include <cmath>
#include <numeric>

#include "izeta/errors.hpp"

namespace izeta {

ClosedPathCounts closed_path_counts(const EdgeMatrix& m, int n_max,
                                    std::uint64_t budget) {
  if (n_max < 1) fail_validation("DomainError", "n_max must be >= 1");
  const int d = m.dim();
  const std::uint64_t dim = static_cast<std::uint64_t>(d);
  const std::uint64_t estimate = static_cast<std::uint64_t>(n_max) * dim * dim * dim;
  if (estimate > budget) {
    fail_budget("BudgetExceeded",
                "closed path counts need ~" + std::to_string(estimate) +
                    " big-integer ops for n_max=" + std::to_string(n_max) +
                    ", dim=" + std::to_string(d) + "; budget is " +
                    std::to_string(budget));
  }

  ClosedPathCounts out;
  out.n_max = n_max;
  out.counts.reserve(static_cast<size_t>(n_max));

  // P = W^n, advanced by one multiplication per step.  The product is
  // accumulated through the successor lists: column j of P*W collects the
  // columns of P indexed by predecessors of j, so no big-integer
  // multiplications are ever needed, only additions.
  std::vector<std::vector<int>> pred(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    for (int j : m.successors[static_cast<size_t>(i)]) {
      pred[static_cast<size_t>(j)].push_back(i);
    }
  }

  BigMatrix P = m.w.cast<BigInt>();
  BigMatrix next(d, d);
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) {
      for (int j = 0; j < d; ++j) {
        const auto& pj = pred[static_cast<size_t>(j)];
        for (int i = 0; i < d; ++i) {
          BigInt acc = 0;
          for (int k : pj) acc += P(i, k);
          next(i, j) = std::move(acc);
        }
      }
      P.swap(next);
    }
    BigInt tr = 0;
    for (int i = 0; i < d; ++i) tr += P(i, i);
    out.counts.push_back(std::move(tr));
  }
  return out;
}

int mobius(long n) {
  if (n < 1) fail_validation("DomainError", "mobius is defined for n >= 1");
  int factors = 0;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      ++factors;
      if (n % p == 0) return 0;  // square factor
    }
  }
  if (n > 1) ++factors;
  return factors % 2 == 0 ? 1 : -1;
}

PrimeCensus prime_census(const ClosedPathCounts& counts) {
  PrimeCensus census;
  census.n_max = counts.n_max;
  census.pi.reserve(static_cast<size_t>(counts.n_max));

  for (int n = 1; n <= counts.n_max; ++n) {
    BigInt s = 0;
    for (long d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      const int mu = mobius(d);
      if (mu == 0) continue;
      const BigInt& term = counts.N(n / static_cast<int>(d));
      s += mu > 0 ? term : -term;
    }
    if (s < 0 || s % n != 0) {
      fail_cross_check("InversionNotIntegral",
                       "Moebius inversion of the path counts is not divisible "
                       "by n at n=" + std::to_string(n));
    }
    census.pi.push_back(s / n);
    if (census.pi.back() > 0) census.distinct_lengths.push_back(n);
  }

  if (census.distinct_lengths.empty()) {
    fail_validation("NoPrimesFound",
                    "no primitive cycle of length <= " +
                        std::to_string(counts.n_max) +
                        " exists; increase the census horizon");
  }
  census.delta = 0;
  for (int n : census.distinct_lengths) {
    census.delta = std::gcd(census.delta, static_cast<long>(n));
  }
  census.provisional = census.distinct_lengths.size() < 2;
  return census;
}

double log_cycle_product(const PrimeCensus& census, double x, long N) {
  if (!(x > 0.0 && x < 1.0)) fail_validation("DomainError", "base must lie in (0,1)");
  if (N < 1 || N > census.n_max) {
    fail_validation("DomainError", "cutoff must lie within the census horizon");
  }
  static const BigInt exact_cap = BigInt(1) << 53;
  KahanSum acc;
  for (long n = 1; n <= N; ++n) {
    const BigInt& p = census.count(static_cast<int>(n));
    if (p == 0) continue;
    if (p < exact_cap) {
      const double xn = std::pow(x, static_cast<double>(n));
      if (xn > 0.0) {
        acc.add(p.convert_to<double>() * std::log1p(-xn));
        continue;
      }
    }
    // Large count or underflowed power: pi(n) x^n is moderate even though
    // x^n alone may be subnormal/zero.  log(1-x^n) = -(x^n + x^{2n}/2 + ...),
    // and past the first term the corrections are relatively ~x^n <= 2^-53.
    const double t1 = scaled_power_term(p, x, n);
    const double xn = std::exp(static_cast<double>(n) * std::log(x));
    acc.add(-t1 * (1.0 + xn * (0.5 + xn * (1.0 / 3.0 + xn * 0.25))));
  }
  return acc.value();
}

PeriodCheck graph_period(const PrimeCensus& census, const ValidatedGraph& g) {
  PeriodCheck check;
  check.delta = census.delta;
  check.rule_applicable = g.min_degree >= 3;
  if (check.rule_applicable) {
    const long expected = g.bipartite ? 2 : 1;
    check.agrees = (census.delta == expected);
    // A provisional census (single observed length) can legitimately show a
    // multiple of the true period; only a settled census may contradict the
    // structural rule.
    if (!check.agrees && !census.provisional) {
      fail_cross_check("CrossCheckFailed",
                       "census period " + std::to_string(census.delta) +
                           " contradicts the degree/bipartiteness rule (expected " +
                           std::to_string(expected) + ")");
    }
  }
  return check;
}

}  // namespace izeta
