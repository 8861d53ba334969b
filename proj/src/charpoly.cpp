#include "izeta/charpoly.hpp"

#include "izeta/errors.hpp"

namespace izeta {

IntPoly CharPoly::reversed() const {
  // det(I - W u) = u^d charpoly(1/u); with charpoly monic this is literally
  // the coefficient vector read backwards.
  return IntPoly(coeff.rbegin(), coeff.rend());
}

CharPoly char_poly(const EdgeMatrix& m, std::uint64_t budget) {
  const int d = m.dim();
  const ClosedPathCounts traces = closed_path_counts(m, d, budget);

  // Newton's identities: k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i with
  // p_i = trace(W^i).  Every division by k must be exact over the integers;
  // a failure would mean the trace sequence is inconsistent.
  std::vector<BigInt> e(static_cast<size_t>(d) + 1);
  e[0] = 1;
  for (int k = 1; k <= d; ++k) {
    BigInt acc = 0;
    for (int i = 1; i <= k; ++i) {
      const BigInt term = e[static_cast<size_t>(k - i)] * traces.N(i);
      acc += (i % 2 == 1) ? term : -term;
    }
    if (acc % k != 0) {
      fail_cross_check("InexactDivision",
                       "Newton identity not divisible by k at k=" + std::to_string(k));
    }
    e[static_cast<size_t>(k)] = acc / k;
  }

  CharPoly p;
  p.coeff.resize(static_cast<size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    p.coeff[static_cast<size_t>(d - k)] = (k % 2 == 0) ? e[static_cast<size_t>(k)]
                                                       : -e[static_cast<size_t>(k)];
  }
  return p;
}

}  // namespace izeta
