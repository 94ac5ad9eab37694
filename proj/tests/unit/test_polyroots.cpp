#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "zetainv/polyroots.hpp"

using namespace zetainv;

namespace {

const PrecisionContext kCtx(50);

std::vector<BigComplex> real_coeffs(std::initializer_list<long> c) {
  std::vector<BigComplex> out;
  for (long v : c) out.emplace_back(v, kCtx);
  return out;
}

bool contains(const std::vector<BigComplex>& roots, const BigComplex& z, int places) {
  return std::any_of(roots.begin(), roots.end(), [&](const BigComplex& r) { return abs(r - z) < ten_pow(-places, kCtx); });
}

}  // namespace

TEST(Polyroots, Quadratic) {
  const auto r = polyroots(real_coeffs({2, -3, 1}), kCtx);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_TRUE(contains(r, BigComplex(1L, kCtx), 40));
  EXPECT_TRUE(contains(r, BigComplex(2L, kCtx), 40));
}

TEST(Polyroots, ComplexPair) {
  const auto r = polyroots(real_coeffs({1, 0, 1}), kCtx);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_TRUE(contains(r, BigComplex(BigReal(kCtx), BigReal(1, kCtx)), 40));
  EXPECT_TRUE(contains(r, BigComplex(BigReal(kCtx), BigReal(-1, kCtx)), 40));
}

TEST(Polyroots, RandomRootsRecovered) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2, 2);
  std::vector<BigComplex> want;
  for (int i = 0; i < 12; ++i) want.emplace_back(BigReal::from_double(u(rng), kCtx), BigReal::from_double(u(rng), kCtx));
  std::vector<BigComplex> c{BigComplex(1L, kCtx)};
  for (const auto& z : want) {
    std::vector<BigComplex> next(c.size() + 1, BigComplex(kCtx));
    for (size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= c[k] * z;
    }
    c = std::move(next);
  }
  const auto r = polyroots(c, kCtx);
  ASSERT_EQ(r.size(), want.size());
  for (const auto& z : want) EXPECT_TRUE(contains(r, z, 20));
}

TEST(Polyroots, Horner) {
  const auto [p, dp] = horner(real_coeffs({1, 2, 3}), BigComplex(2L, kCtx));
  EXPECT_EQ(p.re(), BigReal(17, kCtx));
  EXPECT_EQ(dp.re(), BigReal(14, kCtx));
}
