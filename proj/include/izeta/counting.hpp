#pragma once

#include <cstdint>
#include <vector>

#include "izeta/edge_matrix.hpp"
#include "izeta/graph.hpp"
#include "izeta/types.hpp"

namespace izeta {

// Exact counts N_n = trace(W^n) of closed non-backtracking tailless paths of
// length n, for n = 1..n_max.
struct ClosedPathCounts {
  int n_max = 0;
  std::vector<BigInt> counts;  // counts[n-1] = N_n

  const BigInt& N(int n) const { return counts.at(static_cast<size_t>(n) - 1); }
};

inline constexpr std::uint64_t default_work_budget = 4'000'000'000ull;

// Iterated exact matrix powers of W, keeping only what the traces need.
// Work is estimated as n_max * dim^3 big-integer operations up front and
// checked against `budget` (BudgetExceeded).
ClosedPathCounts closed_path_counts(const EdgeMatrix& m, int n_max,
                                    std::uint64_t budget = default_work_budget);

// Moebius function by trial-division factorization.
int mobius(long n);

// Exact table of prime-cycle counts pi(n) (equivalence classes of primitive
// closed non-backtracking tailless paths up to rotation), obtained from the
// closed-path counts by Moebius inversion.  The exact divisibility
// n | sum_{d|n} mu(d) N_{n/d} is asserted term by term
// (InversionNotIntegral on failure).
struct PrimeCensus {
  int n_max = 0;
  std::vector<BigInt> pi;  // pi[n-1] = number of prime classes of length n
  long delta = 0;          // gcd of the observed prime lengths
  bool provisional = true; // true until at least two distinct lengths appear
  std::vector<int> distinct_lengths;

  const BigInt& count(int n) const { return pi.at(static_cast<size_t>(n) - 1); }
  int girth() const { return distinct_lengths.front(); }
};

// Throws NoPrimesFound (validation) when no prime length <= n_max exists.
PrimeCensus prime_census(const ClosedPathCounts& counts);

// sum_{n<=N} pi(n) log(1 - x^n) for 0 < x < 1, evaluated so that neither
// huge counts nor underflowing powers lose the term: small counts go through
// log1p directly, large ones through log-domain magnitude recovery (where
// x^n is far below machine epsilon and the series for log(1-x^n) is its
// leading terms).  Shared by the Euler product and the cycle-product law.
double log_cycle_product(const PrimeCensus& census, double x, long N);

// Cross-check of the census period against graph structure: when the minimum
// degree is at least 3, the period must be 2 for bipartite graphs and 1
// otherwise.  A non-provisional disagreement throws CrossCheckFailed.
struct PeriodCheck {
  long delta = 0;
  bool rule_applicable = false;
  bool agrees = true;
};

PeriodCheck graph_period(const PrimeCensus& census, const ValidatedGraph& g);

}  // namespace izeta
