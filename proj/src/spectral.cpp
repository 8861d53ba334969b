#include "izeta/spectral.hpp"

#include <cmath>

#include "izeta/errors.hpp"

namespace izeta {

SpectralPartition perron_radius(const Spectrum& s, long expected_delta, double eps_c) {
  if (s.roots.empty()) fail_validation("DomainError", "empty spectrum");
  const double top = s.roots.front().modulus();

  // The Perron eigenvalue: real, positive, simple, of maximal modulus.
  const RootCluster* perron = nullptr;
  for (const auto& r : s.roots) {
    if (r.modulus() < top * (1.0 - eps_c)) break;
    if (r.value.imag() == 0.0 && r.value.real() > 0) {
      perron = &r;
      break;
    }
  }
  if (perron == nullptr || perron->multiplicity != 1) {
    fail_cross_check("PartitionAmbiguous",
                     "no simple positive real eigenvalue of maximal modulus");
  }

  SpectralPartition part;
  part.perron = perron->value.real();
  part.R = 1.0 / part.perron;

  for (const auto& r : s.roots) {
    const double rel = r.modulus() / part.perron;
    if (rel >= 1.0 - eps_c) {
      part.on_circle.push_back(r);
    } else if (rel <= 1.0 - 10.0 * eps_c) {
      part.interior.push_back(r);
      part.rho = std::max(part.rho, r.modulus());
    } else {
      fail_cross_check("PartitionAmbiguous",
                       "eigenvalue modulus within the ambiguity band around the "
                       "spectral circle; tighten root tolerance or widen eps_c");
    }
  }

  if (expected_delta > 0) {
    int count = 0;
    for (const auto& r : part.on_circle) count += r.multiplicity;
    if (count != expected_delta) {
      fail_cross_check("CircleCountMismatch",
                       "found " + std::to_string(count) +
                           " eigenvalue(s) on the spectral circle, expected the "
                           "period " + std::to_string(expected_delta));
    }
  }
  return part;
}

Complex zeta_determinant(const Spectrum& s, const SpectralPartition& part, Complex u) {
  if (std::abs(u) >= part.R) {
    fail_validation("DomainError",
                    "zeta is only evaluated inside the convergence disc |u| < R");
  }
  Complex det = 1.0;
  for (const auto& r : s.roots) {
    Complex factor = 1.0 - r.value * u;
    for (int m = 0; m < r.multiplicity; ++m) det *= factor;
  }
  return 1.0 / det;
}

EulerProductValue zeta_euler_product(const PrimeCensus& census, int two_epsilon,
                                     double u, double R, int L,
                                     double required_accuracy) {
  if (!(u > 0.0 && u < R)) {
    fail_validation("DomainError", "Euler product needs 0 < u < R");
  }
  if (L < 1 || L > census.n_max) {
    fail_validation("DomainError", "truncation length must lie within the census");
  }

  EulerProductValue out;
  out.truncation = L;
  out.value = std::exp(-log_cycle_product(census, u, L));

  const double q = u / R;
  out.log_tail_bound = 2.0 * two_epsilon / (1.0 - u) * std::pow(q, L + 1) /
                       ((L + 1) * (1.0 - q));
  if (required_accuracy > 0.0 && out.log_tail_bound > required_accuracy) {
    fail_validation("TailBoundTooLarge",
                    "truncated Euler product only certifies log-accuracy " +
                        std::to_string(out.log_tail_bound) + ", tighter than the "
                        "requested " + std::to_string(required_accuracy) +
                        " requires a longer census");
  }
  return out;
}

}  // namespace izeta
