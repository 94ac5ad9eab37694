#include <gtest/gtest.h>

#include "printed.hpp"
#include "zetainv/specfun.hpp"

using namespace zetainv;
using zetainv::testing::reproduces;

namespace {
const PrecisionContext kCtx(60);
}

TEST(Zeta, AtTwo) {
  const PowerSeries z = zeta_series(BigComplex(2L, kCtx), 0, kCtx);
  EXPECT_TRUE(reproduces(z[0].re(), "1.64493406684822643647"));
  const BigReal pi2 = pi(kCtx) * pi(kCtx) / 6L;
  EXPECT_GE(matching_decimals(z[0].re(), pi2), 58);
}

TEST(Zeta, AtZero) {
  const PowerSeries z = zeta_series(BigComplex(kCtx), 1, kCtx);
  EXPECT_GE(matching_decimals(z[0].re(), BigReal(mpq_class(-1, 2), kCtx)), 58);
  const BigReal want = -log(BigReal(2, kCtx) * pi(kCtx)) / 2L;
  EXPECT_GE(matching_decimals(z[1].re(), want), 58);
  EXPECT_LT(abs(z[0].im()), ten_pow(-58, kCtx));
}

TEST(Zeta, TrivialZeros) {
  for (long n = 1; n <= 5; ++n) {
    const PowerSeries z = zeta_series(BigComplex(-2 * n, kCtx), 0, kCtx);
    EXPECT_LT(abs(z[0]), ten_pow(-kCtx.digits() + 10, kCtx)) << n;
  }
}

TEST(Zeta, PoleIsRejected) {
  EXPECT_THROW(zeta_series(BigComplex(1L, kCtx), 3, kCtx), PoleError);
}

TEST(Zeta, JetMatchesValuesNearby) {
  // Taylor series about 3 evaluated at 3.25 vs direct evaluation.
  const PowerSeries z = zeta_series(BigComplex(3L, kCtx), 40, kCtx);
  const BigComplex x(BigReal(mpq_class(1, 4), kCtx));
  const BigReal direct = zeta(BigReal(mpq_class(13, 4), kCtx));
  EXPECT_GE(matching_decimals(z.evaluate(x).re(), direct), 20);
}

TEST(Zeta, OffAxis) {
  // first nontrivial zero
  const BigComplex s(BigReal(mpq_class(1, 2), kCtx),
                     parse_decimal("14.134725141734693790457251983562470270784257115699", kCtx));
  EXPECT_LT(abs(zeta(s, kCtx)), ten_pow(-45, kCtx));
}

TEST(Zeta, MinusPoleSeries) {
  const PowerSeries c = zeta_minus_pole_series(2, kCtx);
  EXPECT_TRUE(reproduces(c[0].re(), "0.5772156649"));
  EXPECT_GE(matching_decimals(c[0].re(), euler_gamma(kCtx)), 55);
  EXPECT_TRUE(reproduces(c[1].re(), "0.072815845483676724861"));
  EXPECT_TRUE(reproduces(c[2].re() * 2L, "-0.0096903631928723184845"));
}

TEST(Zeta, PoleCancelledIsContinuous) {
  // (s-1) zeta(s) -> 1 at s = 1
  const PowerSeries p = zeta_pole_cancelled_series(BigComplex(1L, kCtx), 2, kCtx);
  EXPECT_GE(matching_decimals(p[0].re(), BigReal(1, kCtx)), 55);
  EXPECT_GE(matching_decimals(p[1].re(), euler_gamma(kCtx)), 55);
}

TEST(Hurwitz, ReducesToZeta) {
  const BigReal h = hurwitz_zeta(BigReal(2, kCtx), BigReal(1, kCtx));
  EXPECT_GE(matching_decimals(h, pi(kCtx) * pi(kCtx) / 6L), 55);
  // zeta(2, 1/2) = 3 zeta(2)
  const BigReal half = hurwitz_zeta(BigReal(2, kCtx), BigReal(mpq_class(1, 2), kCtx));
  EXPECT_GE(matching_decimals(half, pi(kCtx) * pi(kCtx) / 2L), 55);
}

TEST(Hurwitz, IntegerBatchMatchesSingle) {
  const BigReal a(mpq_class(5, 4), kCtx);
  const auto batch = hurwitz_zeta_integers(a, 12, kCtx);
  for (int k = 2; k <= 12; ++k) EXPECT_GE(matching_decimals(batch[static_cast<size_t>(k)], hurwitz_zeta(BigReal(k, kCtx), a)), 55) << k;
}

TEST(DirichletBeta, Catalan) {
  const BigReal b = dirichlet_beta(BigReal(2, kCtx));
  EXPECT_TRUE(reproduces(b, "0.9159655941"));
  EXPECT_GE(matching_decimals(b, catalan(kCtx)), 55);
  // beta(1) = pi/4
  EXPECT_GE(matching_decimals(dirichlet_beta(BigReal(1, kCtx)), pi(kCtx) / 4L), 50);
}

TEST(LogGamma, AboutOne) {
  const PowerSeries g = log_gamma_series(BigReal(1, kCtx), 3, kCtx);
  EXPECT_LT(abs(g[0]), ten_pow(-55, kCtx));
  EXPECT_GE(matching_decimals(g[1].re(), -euler_gamma(kCtx)), 55);
  EXPECT_GE(matching_decimals(g[2].re(), pi(kCtx) * pi(kCtx) / 12L), 55);
  EXPECT_GE(matching_decimals(exp(log_gamma_series(BigReal(1, kCtx), 0, kCtx))[0].re(), BigReal(1, kCtx)), 55);
}

TEST(LogGamma, AgreesWithScalarGamma) {
  const BigReal c(mpq_class(7, 2), kCtx);
  const PowerSeries g = gamma_series(c, 20, kCtx);
  const BigReal at = g.evaluate(BigComplex(BigReal(mpq_class(1, 2), kCtx))).re();
  EXPECT_GE(matching_decimals(at, BigReal(6, kCtx)), 8);  // Gamma(4)
  EXPECT_THROW(log_gamma_series(BigReal(0, kCtx), 3, kCtx), DomainError);
}

TEST(Xi, AboutZero) {
  const PowerSeries x = xi_series(3, kCtx);
  EXPECT_GE(matching_decimals(x[0].re(), BigReal(mpq_class(1, 2), kCtx)), 55);
  EXPECT_TRUE(reproduces(-x[1].re() / x[0].re(), "0.023095708966121033814310247906"));
}

TEST(Xi, CriticalLineIsRealAndEven) {
  const PowerSeries x = big_xi_critical_series(12, kCtx);
  EXPECT_TRUE(x.is_even(ten_pow(-50, kCtx)));
  for (const auto& c : x.coeffs()) EXPECT_LT(abs(c.im()), ten_pow(-50, kCtx));
}

TEST(Bessel, SeriesCoefficients) {
  const PowerSeries j = bessel_j_series(BigReal(0, kCtx), 4, kCtx);
  EXPECT_GE(matching_decimals(j[0].re(), BigReal(1, kCtx)), 58);
  EXPECT_GE(matching_decimals(j[2].re(), BigReal(mpq_class(-1, 4), kCtx)), 58);
  EXPECT_GE(matching_decimals(j[4].re(), BigReal(mpq_class(1, 64), kCtx)), 58);
  EXPECT_THROW(bessel_j_series(BigReal(-1, kCtx), 4, kCtx), DomainError);
}

TEST(Sinc, SecondCoefficient) {
  const PowerSeries s = sinc_series(4, kCtx);
  EXPECT_GE(matching_decimals(s[2].re(), -pi(kCtx) * pi(kCtx) / 6L), 55);
  EXPECT_LT(abs(s[1]), ten_pow(-58, kCtx));
}

TEST(Poly, Sextic) {
  const PowerSeries p = poly_series({"720", "-1764", "1624", "-735", "175", "-21", "1"}, 8, kCtx);
  EXPECT_EQ(p[0].re(), BigReal(720, kCtx));
  EXPECT_EQ(p[6].re(), BigReal(1, kCtx));
  EXPECT_TRUE(p[7].re().is_zero());
  // roots 1..6
  for (long r = 1; r <= 6; ++r) EXPECT_TRUE(p.evaluate(BigComplex(r, kCtx)).re().is_zero()) << r;
}

TEST(Cache, ReusesLongerSeries) {
  int calls = 0;
  auto make = [&](int order) {
    ++calls;
    return sinc_series(order, kCtx);
  };
  const PowerSeries a = cached_series("test-sinc", 20, kCtx, make);
  const PowerSeries b = cached_series("test-sinc", 10, kCtx, make);
  EXPECT_EQ(calls, 1);
  EXPECT_EQ(b.order(), 10);
  EXPECT_EQ(a[10], b[10]);
  cached_series("test-sinc", 30, kCtx, make);
  EXPECT_EQ(calls, 2);
}

TEST(Spec, KeysAndNames) {
  EXPECT_NE(FunctionSpec::bessel_j("0").key(), FunctionSpec::bessel_j("1").key());
  EXPECT_TRUE(FunctionSpec::user_series([](int o, const PrecisionContext& c) { return sinc_series(o, c); }).key().empty());
  EXPECT_FALSE(FunctionSpec::xi().name().empty());
}
