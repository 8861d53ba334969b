#include <doctest.h>

#include <cmath>
#include <vector>

#include "izeta/constants.hpp"
#include "izeta/errors.hpp"

#include "fixtures.hpp"

using namespace izeta;

namespace {

PrimeCensus single_length_census(int n, long count, int n_max) {
  PrimeCensus c;
  c.n_max = n_max;
  c.pi.assign(static_cast<size_t>(n_max), BigInt(0));
  c.pi[static_cast<size_t>(n) - 1] = count;
  c.delta = n;
  c.provisional = true;
  c.distinct_lengths = {n};
  return c;
}

}  // namespace

TEST_SUITE("constants") {

TEST_CASE("Bernoulli numbers: table values and defining recurrence") {
  CHECK(bernoulli_number(0) == BigRat(1));
  CHECK(bernoulli_number(1) == BigRat(-1, 2));
  CHECK(bernoulli_number(2) == BigRat(1, 6));
  CHECK(bernoulli_number(3) == BigRat(0));
  CHECK(bernoulli_number(4) == BigRat(-1, 30));
  CHECK(bernoulli_number(6) == BigRat(1, 42));
  CHECK(bernoulli_number(8) == BigRat(-1, 30));
  CHECK(bernoulli_number(12) == BigRat(-691, 2730));
  for (int s = 3; s <= 21; s += 2) CHECK(bernoulli_number(s) == 0);

  // sum_{k=0}^{s} binom(s+1, k) B_k = 0 for s >= 1
  for (int s = 1; s <= 16; ++s) {
    BigRat acc = 0;
    BigInt binom = 1;
    for (int k = 0; k <= s; ++k) {
      acc += BigRat(binom) * bernoulli_number(k);
      binom = binom * (s + 1 - k) / (k + 1);
    }
    CHECK_MESSAGE(acc == 0, "s=", s);
  }
}

TEST_CASE("fractional offset") {
  for (long n = 1; n <= 40; ++n) CHECK(fractional_offset(n, 1) == 0);
  CHECK(fractional_offset(7, 2) == 1);
  CHECK(fractional_offset(8, 2) == 0);
  CHECK(fractional_offset(9, 3) == 0);
  CHECK(fractional_offset(10, 3) == 1);
  for (long delta = 1; delta <= 5; ++delta) {
    for (long n = 1; n <= 30; ++n) {
      const long a = fractional_offset(n, delta);
      CHECK(a >= 0);
      CHECK(a < delta);
      CHECK((n - a) % delta == 0);
    }
  }
}

TEST_CASE("power sum tail: values, positivity, branch seam") {
  CHECK(power_sum_tail(0.5) ==
        doctest::Approx(-std::log(0.5) - 0.5).epsilon(1e-15));
  CHECK(power_sum_tail(0.0) == 0.0);
  // series branch vs log1p reference across the branch threshold
  for (double x : {0.01, 0.1, 0.2, 0.2499, 0.25, 0.2501, 0.3, 0.6, 0.9}) {
    const double ref = -std::log1p(-x) - x;
    CHECK_MESSAGE(power_sum_tail(x) == doctest::Approx(ref).epsilon(2e-14), "x=", x);
    CHECK(power_sum_tail(x) > 0.0);
  }
  // far below machine epsilon the naive form is pure cancellation noise;
  // the series gives x^2/2 on the nose
  CHECK(power_sum_tail(1e-100) == doctest::Approx(0.5e-200).epsilon(1e-14));
  CHECK(power_sum_tail(1e-18) == doctest::Approx(0.5e-36).epsilon(1e-14));
}

TEST_CASE("interior sum A on the fixtures") {
  auto A_of = [](const char* name) {
    return const_A(fixtures::pipeline(name, 12).partition);
  };
  CHECK(A_of("k4") == doctest::Approx(1.0 / 12).epsilon(1e-12));
  CHECK(A_of("theta") == doctest::Approx(4.0 / 3).epsilon(1e-12));
  CHECK(A_of("petersen") == doctest::Approx(-41.0 / 30).epsilon(1e-12));
  // bipartite cancellation: the interior contributions pair off exactly
  CHECK(std::abs(A_of("k33")) <= 1e-12);
}

TEST_CASE("empty interior gives A = 0") {
  SpectralPartition part;
  part.perron = 2.0;
  part.R = 0.5;
  CHECK(const_A(part) == 0.0);
}

TEST_CASE("unpaired complex interior eigenvalue is rejected") {
  SpectralPartition part;
  part.perron = 2.0;
  part.R = 0.5;
  part.interior = {{{0.5, 0.5}, 1, 0.0}};
  CHECK_THROWS_WITH_AS(const_A(part), doctest::Contains("ImaginaryResidue"),
                       Error);
}

TEST_CASE("K series: frozen values and truncation stability") {
  auto K_of = [](const char* name, int n_max) {
    const auto p = fixtures::pipeline(name, n_max);
    return const_K(p.census, p.counts, p.two_eps(), p.partition.R, 0.25, 1e-6);
  };
  // pinned against an exact-rational recomputation of the same series
  CHECK(K_of("k4", 200).value == doctest::Approx(-0.562960896109).epsilon(1e-11));
  CHECK(K_of("k33", 200).value == doctest::Approx(-0.329069036793).epsilon(1e-11));
  CHECK(K_of("theta", 200).value == doctest::Approx(-1.139704197239).epsilon(1e-11));

  const auto a = K_of("k4", 120);
  const auto b = K_of("k4", 140);
  CHECK(std::abs(a.value - b.value) <= a.tail_bound + b.tail_bound);
  CHECK(b.tail_bound < a.tail_bound);
}

TEST_CASE("K refuses a horizon whose tail exceeds the target") {
  const auto p = fixtures::pipeline("k4", 20);
  CHECK_THROWS_WITH_AS(
      const_K(p.census, p.counts, p.two_eps(), p.partition.R, 0.25, 1e-12),
      doctest::Contains("InsufficientCensus"), Error);
  try {
    const_K(p.census, p.counts, p.two_eps(), p.partition.R, 0.25, 1e-12);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::validation);
  }
}

TEST_CASE("C by eigenvalue product on the fixtures") {
  auto C_of = [](const char* name) {
    return const_C_product(fixtures::pipeline(name, 12).partition);
  };
  CHECK(C_of("k4") == doctest::Approx(4.0 / 9).epsilon(1e-12));
  CHECK(C_of("theta") == doctest::Approx(8.0 / 9).epsilon(1e-12));
  CHECK(C_of("k33") == doctest::Approx(2048.0 / 6561).epsilon(1e-12));
}

TEST_CASE("C by residue extrapolation agrees with the product") {
  for (const char* name : {"k4", "k33", "theta", "dumbbell", "petersen"}) {
    const auto p = fixtures::pipeline(name, 12);
    const double prod = const_C_product(p.partition);
    const double res = const_C_residue(p.charpoly, p.partition.R);
    CHECK_MESSAGE(std::abs(prod - res) <= 1e-8 * (1.0 + prod), name);
  }
  const auto k4 = fixtures::pipeline("k4", 12);
  CHECK(const_C_residue(k4.charpoly, k4.partition.R) ==
        doctest::Approx(4.0 / 9).epsilon(1e-9));
}

TEST_CASE("near-singular factor in the product is rejected") {
  SpectralPartition part;
  part.perron = 1.0;
  part.R = 1.0;
  part.on_circle = {{{1.0, 0.0}, 1, 0.0}};
  part.interior = {{{1.0 - 1e-13, 0.0}, 1, 0.0}};
  CHECK_THROWS_WITH_AS(const_C_product(part),
                       doctest::Contains("DivisionNearZero"), Error);
}

TEST_CASE("H: the two independent routes agree") {
  for (const char* name : {"k4", "k33", "theta", "petersen"}) {
    const auto p = fixtures::pipeline(name, 200);
    const auto hs = const_H_spectral(p.census, p.counts, p.two_eps(),
                                     p.partition.R, 0.25, 1e-6);
    const auto hp = const_H_prime(p.census, p.two_eps(), p.partition.R, 1e-6);
    CHECK_MESSAGE(std::abs(hs.value - hp.value) <=
                      hs.tail_bound + hp.tail_bound + 1e-12, name);
    CHECK(hp.value > 0.0);  // every term pi(n) * (sum_{m>=2} R^{mn}/m) >= 0
  }
}

TEST_CASE("H cycle route: closed form for a one-class census") {
  // One class of length 3, R = 1/2: H = sum_{m>=2} (1/8)^m / m
  const auto c = single_length_census(3, 1, 12);
  const auto h = const_H_prime(c, 2, 0.5, 1e-2);
  CHECK(h.value == doctest::Approx(-std::log1p(-0.125) - 0.125).epsilon(1e-15));
}

TEST_CASE("constants bundle: cross-checks wired in") {
  const auto p = fixtures::pipeline("k4", 200);
  const auto mc = compute_constants(p.census, p.counts, p.charpoly, p.partition,
                                    p.two_eps(), 0.25, 1e-8);
  CHECK(mc.A == doctest::Approx(1.0 / 12).epsilon(1e-12));
  CHECK(mc.C == doctest::Approx(4.0 / 9).epsilon(1e-12));
  CHECK(mc.C_residue == doctest::Approx(4.0 / 9).epsilon(1e-9));
  CHECK(std::abs(mc.H.value - mc.H_prime.value) <= 1e-12);
  CHECK(mc.K.value == doctest::Approx(-0.562960896109).epsilon(1e-11));
  CHECK(mc.alpha == 0.25);
}

TEST_CASE("Euler's constant matches the harmonic-series limit") {
  long double h = 0.0L;
  for (long n = 1000000; n >= 1; --n) h += 1.0L / static_cast<long double>(n);
  // H_N - ln N -> gamma with error 1/(2N) - O(1/N^2)
  const double err = static_cast<double>(h - std::log(1e6) - euler_gamma);
  CHECK(err == doctest::Approx(0.5e-6).epsilon(1e-3));
}

}  // TEST_SUITE
