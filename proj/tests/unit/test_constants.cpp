#include <gtest/gtest.h>

#include "printed.hpp"
#include "zetainv/constants.hpp"

using namespace zetainv;
using zetainv::testing::reproduces;

namespace {
const PrecisionContext kCtx(60);
}

TEST(Stieltjes, Jet) {
  const auto g = stieltjes_jet(2, kCtx);
  EXPECT_TRUE(reproduces(g[0], "0.57721566490153286061"));
  EXPECT_TRUE(reproduces(g[1], "-0.072815845483676724861"));
  EXPECT_TRUE(reproduces(g[2], "-0.0096903631928723184845"));
  EXPECT_GE(matching_decimals(g[0], euler_gamma(kCtx)), 58);
}

TEST(Stieltjes, DeterminantConverges) {
  const auto g = stieltjes_jet(1, kCtx);
  EXPECT_GE(matching_decimals(stieltjes_determinant(0, 32, kCtx), g[0]), 6);
  EXPECT_GE(matching_decimals(stieltjes_determinant(1, 32, kCtx), g[1]), 4);
  int prev = -1;
  for (int k : {8, 16, 32}) {
    const int d = matching_decimals(stieltjes_determinant(0, k, kCtx), g[0]);
    EXPECT_GT(d, prev) << k;
    prev = d;
  }
}

TEST(Stieltjes, DeterminantDomain) {
  EXPECT_THROW(stieltjes_determinant(0, 6, kCtx), DomainError);
  EXPECT_THROW(stieltjes_determinant(8, 8, kCtx), DomainError);
}

TEST(Vandermonde, UnitDeterminant) {
  for (int k : {4, 8, 16, 32}) EXPECT_GE(matching_decimals(vandermonde_determinant(k, kCtx), BigReal(1, kCtx)), 50) << k;
  // (-1)^{k(k-1)/2}
  EXPECT_GE(matching_decimals(vandermonde_determinant(2, kCtx), BigReal(-1, kCtx)), 50);
}

TEST(Eta, Jet) {
  const auto e = eta_constants(9, EtaMethod::jet, kCtx);
  EXPECT_TRUE(reproduces(e[1], "0.18754623284036522460"));
  EXPECT_TRUE(reproduces(e[4], "-0.0045244778884953787412"));
  EXPECT_TRUE(reproduces(e[9], "0.000017041357047110641032"));
  // eta_0 = -gamma
  EXPECT_GE(matching_decimals(e[0], -euler_gamma(kCtx)), 58);
}

TEST(Eta, CoffeyMatchesJet) {
  const auto a = eta_constants(20, EtaMethod::jet, kCtx);
  const auto b = eta_constants(20, EtaMethod::coffey, kCtx);
  for (size_t n = 0; n < a.size(); ++n) EXPECT_GE(matching_decimals(a[n], b[n]), 55) << n;
}

TEST(Eta, DeterminantSign) {
  const auto jet = eta_constants(1, EtaMethod::jet, kCtx);
  const auto det = eta_constants(1, EtaMethod::determinant, kCtx, 32);
  EXPECT_GE(matching_decimals(det[0], jet[0]), 2);
  EXPECT_GE(matching_decimals(det[1], jet[1]), 2);
}

TEST(Znt, FromEta) {
  const auto e = eta_constants(6, EtaMethod::jet, kCtx);
  for (int m = 1; m <= 5; ++m) EXPECT_GE(matching_decimals(z_nt_from_eta(m, e, kCtx), z_nt(m, kCtx)), 50) << m;
  EXPECT_THROW(z_nt_from_eta(9, e, kCtx), UsageError);
}

TEST(T1, ExpansionRoutes) {
  EXPECT_TRUE(reproduces(t1_expansion_demo(2, T1Route::stieltjes, kCtx), "5.561891787634141032446"));
  EXPECT_TRUE(reproduces(t1_expansion_demo(3, T1Route::stieltjes, kCtx), "13.757670503723662711511"));
  EXPECT_TRUE(reproduces(t1_expansion_demo(10, T1Route::stieltjes, kCtx), "14.07711485942798027551"));
  EXPECT_GE(matching_decimals(t1_expansion_demo(10, T1Route::eta_jet, kCtx), t1_expansion_demo(10, T1Route::stieltjes, kCtx)), 50);
  // exact modulus sums land closer to t1
  EXPECT_TRUE(reproduces(t1_expansion_demo(10, T1Route::keiper_li, kCtx), "14.13446300604432551654"));
}

TEST(VonMangoldt, SlowPartialSums) {
  const BigReal g = euler_gamma(kCtx);
  EXPECT_LT(abs(eta_von_mangoldt_demo(0, 1000, kCtx) + g), BigReal(mpq_class(5, 100), kCtx));
  EXPECT_LT(abs(eta_von_mangoldt_demo(0, 1000000, kCtx) + g), BigReal(mpq_class(1, 100), kCtx));
  const BigReal e1 = eta_von_mangoldt_demo(1, 1000000, kCtx);
  EXPECT_GT(e1.sign(), 0);
  EXPECT_LT(abs(e1 - parse_decimal("0.18754623284", kCtx)), BigReal(mpq_class(1, 10), kCtx));
}

TEST(Table, Sources) {
  const ConstantsTable a = constants_table(6, ConstantsSource::jet, kCtx);
  const ConstantsTable b = constants_table(6, ConstantsSource::recurrence, kCtx);
  ASSERT_EQ(a.gammas.size(), 7u);
  ASSERT_EQ(a.lambdas.size(), 7u);
  for (size_t n = 0; n < a.etas.size(); ++n) EXPECT_GE(matching_decimals(a.etas[n], b.etas[n]), 55) << n;
  EXPECT_TRUE(reproduces(a.lambdas[1], "0.0230957089661210338"));
}
