#include "izeta/roots.hpp"

#include <algorithm>
#include <cmath>

#include "izeta/errors.hpp"
#include "izeta/polynomial.hpp"

namespace izeta {

namespace {

using LComplex = std::complex<long double>;

LComplex eval_l(const std::vector<long double>& c, LComplex x) {
  LComplex acc = 0.0L;
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

std::vector<long double> derivative_l(const std::vector<long double>& c) {
  std::vector<long double> d(c.size() > 1 ? c.size() - 1 : 0);
  for (size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<long double>(i);
  return d;
}

}  // namespace

std::vector<Complex> aberth_roots(const std::vector<double>& coeffs, double tol,
                                  int max_iter) {
  std::vector<long double> c(coeffs.begin(), coeffs.end());
  while (!c.empty() && c.back() == 0.0L) c.pop_back();
  const int n = static_cast<int>(c.size()) - 1;
  if (n < 1) return {};
  const auto cd = derivative_l(c);

  // Deterministic initial configuration: points on a circle inside the
  // Cauchy bound, phase-offset so no start lies on the real axis.
  long double cauchy = 0.0L;
  for (int i = 0; i < n; ++i) cauchy = std::max(cauchy, std::abs(c[static_cast<size_t>(i)]));
  cauchy = 1.0L + cauchy / std::abs(c.back());
  std::vector<LComplex> z(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    const long double theta =
        2.0L * static_cast<long double>(M_PI) * j / n + 0.43L;
    z[static_cast<size_t>(j)] = 0.7L * cauchy * LComplex(std::cos(theta), std::sin(theta));
  }

  for (int iter = 0; iter < max_iter; ++iter) {
    long double worst = 0.0L;
    for (int j = 0; j < n; ++j) {
      const LComplex zj = z[static_cast<size_t>(j)];
      const LComplex pv = eval_l(c, zj);
      const LComplex pd = eval_l(cd, zj);
      if (pd == LComplex(0.0L)) {
        z[static_cast<size_t>(j)] += LComplex(1e-6L, 1e-6L);
        worst = 1.0L;
        continue;
      }
      const LComplex newton = pv / pd;
      LComplex rep = 0.0L;
      for (int k = 0; k < n; ++k) {
        if (k != j) rep += LComplex(1.0L) / (zj - z[static_cast<size_t>(k)]);
      }
      const LComplex corr = newton / (LComplex(1.0L) - newton * rep);
      z[static_cast<size_t>(j)] = zj - corr;
      worst = std::max(worst, std::abs(corr) / (1.0L + std::abs(zj)));
    }
    if (worst <= static_cast<long double>(tol)) {
      std::vector<Complex> out;
      out.reserve(static_cast<size_t>(n));
      for (const auto& r : z) {
        out.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
      }
      return out;
    }
  }
  fail_cross_check("NonConvergence",
                   "root iteration did not reach tolerance " + std::to_string(tol));
}

namespace {

// Exact synthetic division of an integer polynomial by (x - k); the caller
// guarantees k is a root.
IntPoly deflate_int_root(const IntPoly& f, long k) {
  IntPoly q(f.size() - 1);
  BigInt carry = f.back();
  for (size_t i = f.size() - 1; i-- > 0;) {
    q[i] = carry;
    carry = f[i] + carry * k;
  }
  if (carry != 0) {
    fail_cross_check("InexactDivision", "integer root deflation left a remainder");
  }
  return q;
}

struct FactorRoots {
  std::vector<Complex> roots;
  std::vector<double> residuals;
};

// All roots of one square-free factor: exact integer roots first (certified
// by exact evaluation), then Aberth on the deflated remainder, Newton
// polish in extended precision, conjugate symmetrization.
FactorRoots solve_square_free(const IntPoly& factor, double tol) {
  FactorRoots out;
  IntPoly rem = factor;

  // Integer roots: bounded by the Cauchy bound, and any integer root must
  // divide the constant coefficient.  Verified by exact evaluation and
  // deflated exactly, this pins the structurally meaningful eigenvalues
  // (Perron value of regular graphs, +-1, 0) to exact doubles.
  double maxratio = 0.0;
  for (size_t i = 0; i + 1 < rem.size(); ++i) {
    maxratio = std::max(
        maxratio, static_cast<double>(std::exp(log_abs(rem[i]) - log_abs(rem.back()))));
  }
  const long bound = static_cast<long>(std::min(4096.0, std::ceil(1.0 + maxratio)));
  for (long k = -bound; k <= bound && static_cast<int>(rem.size()) - 1 > 0; ++k) {
    if (k != 0 && rem[0] != 0 && rem[0] % k != 0) continue;
    if (eval_int(rem, BigInt(k)) == 0) {
      out.roots.emplace_back(static_cast<double>(k), 0.0);
      out.residuals.push_back(0.0);
      rem = deflate_int_root(rem, k);  // square-free: each root appears once
    }
  }

  const int n = static_cast<int>(rem.size()) - 1;
  if (n >= 1) {
    std::vector<double> dc(rem.size());
    for (size_t i = 0; i < rem.size(); ++i) dc[i] = rem[i].convert_to<double>();
    auto approx = aberth_roots(dc, tol);

    // Polish on the full factor (better conditioned than the deflated one is
    // not an issue here; the factor is square-free so f' is bounded away
    // from zero at every root).
    std::vector<long double> lc(factor.size());
    for (size_t i = 0; i < factor.size(); ++i) lc[i] = factor[i].convert_to<long double>();
    const auto ld = derivative_l(lc);
    for (auto& z0 : approx) {
      LComplex z(z0.real(), z0.imag());
      double resid = 0.0;
      for (int step = 0; step < 4; ++step) {
        const LComplex pd = eval_l(ld, z);
        if (pd == LComplex(0.0L)) break;
        const LComplex corr = eval_l(lc, z) / pd;
        z -= corr;
        resid = static_cast<double>(std::abs(corr));
      }
      Complex zz(static_cast<double>(z.real()), static_cast<double>(z.imag()));
      // cosmetic snap: arguments of real roots must be exactly 0 or pi
      if (std::abs(zz.imag()) <= 1e-10 * (1.0 + std::abs(zz))) zz.imag(0.0);
      out.roots.push_back(zz);
      out.residuals.push_back(resid);
    }
  }

  // Conjugate symmetrization: real coefficients force conjugate pairs; make
  // them exact so downstream imaginary-cancellation checks see clean zeros.
  std::vector<size_t> upper;
  for (size_t i = 0; i < out.roots.size(); ++i) {
    if (out.roots[i].imag() > 0) upper.push_back(i);
  }
  std::vector<char> used(out.roots.size(), 0);
  for (size_t i : upper) {
    size_t best = out.roots.size();
    double bestd = 1e300;
    for (size_t j = 0; j < out.roots.size(); ++j) {
      if (used[j] || out.roots[j].imag() >= 0) continue;
      const double dist = std::abs(out.roots[j] - std::conj(out.roots[i]));
      if (dist < bestd) {
        bestd = dist;
        best = j;
      }
    }
    if (best < out.roots.size()) {
      used[best] = 1;
      const Complex avg = 0.5 * (out.roots[i] + std::conj(out.roots[best]));
      out.roots[i] = avg;
      out.roots[best] = std::conj(avg);
    }
  }
  return out;
}

}  // namespace

Spectrum spectrum_roots(const CharPoly& p, double tol) {
  Spectrum s;
  s.dimension = p.degree();

  const auto factors = yun_square_free(p.coeff);
  int covered = 0;
  for (const auto& f : factors) covered += degree(f.factor) * f.multiplicity;
  if (covered != p.degree()) {
    fail_cross_check("NonConvergence",
                     "square-free decomposition covers degree " +
                         std::to_string(covered) + " of " + std::to_string(p.degree()));
  }

  for (const auto& f : factors) {
    const FactorRoots fr = solve_square_free(f.factor, tol);
    if (static_cast<int>(fr.roots.size()) != degree(f.factor)) {
      fail_cross_check("NonConvergence", "lost roots of a square-free factor");
    }
    for (size_t i = 0; i < fr.roots.size(); ++i) {
      s.roots.push_back(RootCluster{fr.roots[i], f.multiplicity, fr.residuals[i]});
      s.certified_error = std::max(s.certified_error, fr.residuals[i]);
    }
  }

  std::sort(s.roots.begin(), s.roots.end(), [](const RootCluster& a, const RootCluster& b) {
    const double ma = a.modulus(), mb = b.modulus();
    if (ma != mb) return ma > mb;
    return std::arg(a.value) < std::arg(b.value);
  });

  int total = 0;
  for (const auto& r : s.roots) total += r.multiplicity;
  if (total != p.degree()) {
    fail_cross_check("NonConvergence", "eigenvalue multiplicities do not sum to the dimension");
  }
  return s;
}

}  // namespace izeta
