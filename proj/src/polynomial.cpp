#include "izeta/polynomial.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "izeta/errors.hpp"

namespace izeta {

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

RatPoly to_rational(const IntPoly& p) {
  RatPoly r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = BigRat(p[i]);
  return r;
}

IntPoly to_primitive_integer(const RatPoly& q) {
  RatPoly p = q;
  trim(p);
  if (p.empty()) return {};
  BigInt lcm = 1;
  for (const auto& c : p) {
    const BigInt d = boost::multiprecision::denominator(c);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  IntPoly out(p.size());
  BigInt content = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    BigRat scaled = p[i] * BigRat(lcm);
    out[i] = boost::multiprecision::numerator(scaled);
    content = boost::multiprecision::gcd(content, out[i]);
  }
  if (out.back() < 0) content = -content;
  for (auto& c : out) c /= content;
  return out;
}

IntPoly derivative(const IntPoly& p) {
  if (p.size() <= 1) return {};
  IntPoly d(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
  trim(d);
  return d;
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

BigInt eval_int(const IntPoly& p, const BigInt& x) {
  BigInt acc = 0;
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

BigRat eval_rat(const IntPoly& p, const BigRat& x) {
  BigRat acc = 0;
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + BigRat(p[i]);
  return acc;
}

Complex eval_complex(const std::vector<double>& coeffs, Complex x) {
  Complex acc = 0.0;
  for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

namespace {

// Remainder of a by b over the rationals (in place quotient discarded).
RatPoly rat_mod(RatPoly a, const RatPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const BigRat q = a.back() / b.back();
    const size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

RatPoly rat_derivative(const RatPoly& p) {
  if (p.size() <= 1) return {};
  RatPoly d(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * BigRat(static_cast<long>(i));
  trim(d);
  return d;
}

RatPoly rat_sub(const RatPoly& a, const RatPoly& b) {
  RatPoly out(std::max(a.size(), b.size()), BigRat(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

// Monic gcd over Q; gcd(p, 0) = monic p.
RatPoly rat_gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RatPoly r = rat_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const BigRat lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

// Exact quotient over Q; a remainder signals an upstream bug.
RatPoly rat_divide_exact(RatPoly num, const RatPoly& den) {
  trim(num);
  if (den.empty()) fail_cross_check("InexactDivision", "division by the zero polynomial");
  RatPoly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, BigRat(0));
  while (num.size() >= den.size() && !num.empty()) {
    const BigRat q = num.back() / den.back();
    const size_t shift = num.size() - den.size();
    quot[shift] = q;
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= q * den[i];
    num.pop_back();
    trim(num);
  }
  if (!num.empty()) {
    fail_cross_check("InexactDivision", "polynomial division left a nonzero remainder");
  }
  trim(quot);
  return quot;
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  RatPoly x = to_rational(a), y = to_rational(b);
  trim(x);
  trim(y);
  while (!y.empty()) {
    RatPoly r = rat_mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.empty()) return {};
  return to_primitive_integer(x);
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  RatPoly num = to_rational(a), den = to_rational(b);
  trim(num);
  trim(den);
  if (den.empty()) fail_cross_check("InexactDivision", "division by the zero polynomial");
  RatPoly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, BigRat(0));
  while (num.size() >= den.size() && !num.empty()) {
    const BigRat q = num.back() / den.back();
    const size_t shift = num.size() - den.size();
    quot[shift] = q;
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= q * den[i];
    num.pop_back();
    trim(num);
  }
  if (!num.empty()) {
    fail_cross_check("InexactDivision",
                     "polynomial division left a nonzero remainder");
  }
  // The quotient of primitive polynomials that divide exactly is integral up
  // to content; normalize back to integer coefficients.
  IntPoly out(quot.size());
  for (size_t i = 0; i < quot.size(); ++i) {
    if (boost::multiprecision::denominator(quot[i]) != 1) {
      return to_primitive_integer(quot);
    }
    out[i] = boost::multiprecision::numerator(quot[i]);
  }
  trim(out);
  return out;
}

std::vector<SquareFreeFactor> yun_square_free(const IntPoly& poly) {
  std::vector<SquareFreeFactor> factors;
  IntPoly p = poly;
  trim(p);
  if (degree(p) < 1) return factors;

  // Yun's algorithm, run exactly over Q; factors are emitted in primitive
  // integer form (constants are irrelevant to roots and multiplicities).
  const RatPoly f = to_rational(p);
  const RatPoly fp = rat_derivative(f);
  const RatPoly u = rat_gcd(f, fp);
  RatPoly v = rat_divide_exact(f, u);
  RatPoly w = rat_divide_exact(fp, u);
  int mult = 1;
  while (static_cast<int>(v.size()) - 1 > 0) {
    const RatPoly z = rat_sub(w, rat_derivative(v));
    const RatPoly h = rat_gcd(v, z);
    if (static_cast<int>(h.size()) - 1 > 0) {
      factors.push_back(SquareFreeFactor{to_primitive_integer(h), mult});
    }
    v = rat_divide_exact(v, h);
    w = rat_divide_exact(z, h);
    ++mult;
    if (mult > degree(p) + 1) {
      fail_cross_check("InexactDivision", "square-free decomposition did not terminate");
    }
  }
  return factors;
}

}  // namespace izeta
