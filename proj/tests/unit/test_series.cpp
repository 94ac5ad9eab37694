#include <gtest/gtest.h>

#include <random>

#include "zetainv/series.hpp"

using namespace zetainv;

namespace {

const PrecisionContext kCtx(50);

PowerSeries from_rationals(const std::vector<mpq_class>& c) {
  std::vector<BigComplex> v;
  for (const auto& q : c) v.emplace_back(BigReal(q, kCtx));
  return PowerSeries(BigComplex(kCtx), v, kCtx);
}

PowerSeries exp_series(int order, int sign) {
  std::vector<mpq_class> c;
  mpz_class f = 1;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) f *= k;
    c.emplace_back(mpq_class((k % 2 && sign < 0) ? -1 : 1, f));
  }
  return from_rationals(c);
}

void expect_coeffs(const PowerSeries& s, const std::vector<mpq_class>& want, int tol_exp = -45) {
  ASSERT_EQ(s.order() + 1, static_cast<int>(want.size()));
  for (size_t k = 0; k < want.size(); ++k) {
    EXPECT_LT(abs(s[static_cast<int>(k)] - BigComplex(BigReal(want[k], kCtx))), ten_pow(tol_exp, kCtx)) << "k=" << k;
  }
}

PowerSeries random_series(std::mt19937_64& rng, int order, const BigComplex& c0) {
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<BigComplex> c{c0};
  for (int k = 1; k <= order; ++k) c.emplace_back(BigReal::from_double(u(rng), kCtx), BigReal::from_double(u(rng), kCtx));
  return PowerSeries(BigComplex(kCtx), c, kCtx);
}

BigReal gap(const PowerSeries& a, const PowerSeries& b) {
  BigReal g(kCtx);
  for (int k = 0; k <= std::min(a.order(), b.order()); ++k) g = max(g, abs(a[k] - b[k]));
  return g;
}

}  // namespace

TEST(Series, ProductTruncates) {
  expect_coeffs(from_rationals({1, 1, 0}) * from_rationals({1, -1, 0}), {1, 0, -1});
  expect_coeffs(from_rationals({0, 1}) * from_rationals({0, 1}), {0, 0});
}

TEST(Series, ExpTimesExpNegIsOne) {
  const PowerSeries p = exp_series(8, 1) * exp_series(8, -1);
  EXPECT_LT(abs(p[0] - BigComplex(1L, kCtx)), ten_pow(-kCtx.digits() + 4, kCtx));
  for (int k = 1; k <= 8; ++k) EXPECT_LT(abs(p[k]), ten_pow(-kCtx.digits() + 4, kCtx));
}

TEST(Series, Division) {
  expect_coeffs(from_rationals({1, 0, 0, 0}) / from_rationals({1, -1, 0, 0}), {1, 1, 1, 1});
  // sin x / x
  const PowerSeries sinx = from_rationals({0, 1, 0, mpq_class(-1, 6), 0, mpq_class(1, 120), 0});
  const PowerSeries x = from_rationals({0, 1, 0, 0, 0, 0, 0});
  // shift both down one place: divide (sin x)/x as series of the quotient
  std::vector<BigComplex> num(sinx.coeffs().begin() + 1, sinx.coeffs().end());
  std::vector<BigComplex> den(x.coeffs().begin() + 1, x.coeffs().end());
  const PowerSeries q = PowerSeries(BigComplex(kCtx), num, kCtx) / PowerSeries(BigComplex(kCtx), den, kCtx);
  expect_coeffs(q, {1, 0, mpq_class(-1, 6), 0, mpq_class(1, 120), 0});
  const PowerSeries inv = reciprocal(exp_series(5, 1));
  EXPECT_LT(gap(inv, exp_series(5, -1)), ten_pow(-45, kCtx));
}

TEST(Series, DivisionByZeroConstant) {
  EXPECT_THROW(from_rationals({1, 1, 1}) / from_rationals({0, 1, 1}), ZeroConstantTerm);
  EXPECT_THROW(log(from_rationals({0, 1, 1})), ZeroConstantTerm);
}

TEST(Series, CenterMismatch) {
  const PowerSeries a = PowerSeries::variable(3, BigComplex(kCtx), kCtx);
  const PowerSeries b = PowerSeries::variable(3, BigComplex(1L, kCtx), kCtx);
  EXPECT_THROW(a + b, UsageError);
  EXPECT_THROW(a * b, UsageError);
}

TEST(Series, LogExpPow) {
  expect_coeffs(log(from_rationals({1, 1, 0, 0, 0})), {0, 1, mpq_class(-1, 2), mpq_class(1, 3), mpq_class(-1, 4)});
  expect_coeffs(exp(from_rationals({0, 1, 0, 0})), {1, 1, mpq_class(1, 2), mpq_class(1, 6)});
  const BigComplex half(BigReal(mpq_class(1, 2), kCtx));
  expect_coeffs(pow(from_rationals({1, 1, 0}), half), {1, mpq_class(1, 2), mpq_class(-1, 8)});
}

TEST(Series, ExpLogIdentityOrder64) {
  std::mt19937_64 rng(3);
  const BigReal tol = ten_pow(-kCtx.digits() + 8, kCtx);
  for (const BigComplex& c0 : {BigComplex(1L, kCtx), BigComplex(2L, kCtx), BigComplex(BigReal(1, kCtx), BigReal(1, kCtx))}) {
    const PowerSeries a = random_series(rng, 64, c0);
    EXPECT_LT(gap(exp(log(a)), a), tol);
    PowerSeries b = random_series(rng, 64, c0);
    b[0] = BigComplex(kCtx);
    b = b * BigComplex(BigReal(mpq_class(1, 4), kCtx));
    EXPECT_LT(gap(log(exp(b)), b), tol);
  }
}

TEST(Series, RingAxiomsRandom) {
  std::mt19937_64 rng(5);
  const BigReal tol = ten_pow(-kCtx.digits() + 4, kCtx);
  for (int i = 0; i < 10; ++i) {
    const PowerSeries a = random_series(rng, 20, BigComplex(1L, kCtx));
    const PowerSeries b = random_series(rng, 20, BigComplex(2L, kCtx));
    const PowerSeries c = random_series(rng, 20, BigComplex(kCtx));
    EXPECT_LT(gap((a * b) * c, a * (b * c)), tol * 100L);
    EXPECT_LT(gap(a * (b + c), a * b + a * c), tol * 100L);
    EXPECT_LT(gap(a * b, b * a), tol);
  }
}

TEST(Series, GeometricJetMatchesDerivatives) {
  const PowerSeries g = reciprocal(from_rationals(std::vector<mpq_class>{1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
  // f(x) = 1/(1-x): f^(k)(0) = k!
  mpz_class f = 1;
  for (int k = 0; k <= 10; ++k) {
    if (k) f *= k;
    EXPECT_LT(abs(g.derivative_at(k) - BigComplex(BigReal(f, kCtx))), ten_pow(-40, kCtx) * BigReal(f, kCtx));
  }
}

TEST(Series, RevertAndCompose) {
  // f = e^x - 1; inverse is log(1 + w)
  PowerSeries f = exp(from_rationals({0, 1, 0, 0, 0, 0, 0}));
  f[0] = BigComplex(kCtx);
  const PowerSeries g = revert(f);
  expect_coeffs(g, {0, 1, mpq_class(-1, 2), mpq_class(1, 3), mpq_class(-1, 4), mpq_class(1, 5), mpq_class(-1, 6)});
  const PowerSeries id = compose(f, g);
  expect_coeffs(id, {0, 1, 0, 0, 0, 0, 0});
}

TEST(Series, EvaluateAndParity) {
  const PowerSeries p = from_rationals({1, 0, -2, 0, 1});
  EXPECT_LT(abs(p.evaluate(BigComplex(1L, kCtx))), ten_pow(-45, kCtx));
  EXPECT_TRUE(p.is_even(ten_pow(-40, kCtx)));
  EXPECT_FALSE(from_rationals({1, 1}).is_even(ten_pow(-40, kCtx)));
}
