#pragma once

#include <vector>

#include "zetainv/mpcore.hpp"

namespace zetainv {

// Truncated Taylor series sum_{k<=M} c_k x^k of a function about `center`
// (x = s - center). Derivatives come out as k! c_k.
class PowerSeries {
 public:
  PowerSeries() = default;
  PowerSeries(BigComplex center, std::vector<BigComplex> coeffs, const PrecisionContext& ctx);

  static PowerSeries constant(const BigComplex& c, int order, const BigComplex& center,
                              const PrecisionContext& ctx);
  // x itself, i.e. coefficients (0, 1, 0, ...).
  static PowerSeries variable(int order, const BigComplex& center, const PrecisionContext& ctx);
  // a + b x
  static PowerSeries linear(const BigComplex& a, const BigComplex& b, int order,
                            const BigComplex& center, const PrecisionContext& ctx);

  int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const BigComplex& center() const noexcept { return center_; }
  const PrecisionContext& ctx() const noexcept { return ctx_; }
  const std::vector<BigComplex>& coeffs() const noexcept { return c_; }
  const BigComplex& operator[](int k) const { return c_.at(static_cast<size_t>(k)); }
  BigComplex& operator[](int k) { return c_.at(static_cast<size_t>(k)); }

  PowerSeries truncated(int order) const;
  // Same coefficients interpreted about another center (variable relabelling).
  PowerSeries recentred(const BigComplex& center) const;
  // g(x) = f(a x): c_k a^k.
  PowerSeries scaled_variable(const BigComplex& a) const;
  // k-th derivative at the center, k! c_k.
  BigComplex derivative_at(int k) const;
  PowerSeries derivative() const;
  BigComplex evaluate(const BigComplex& x) const;
  // True when every odd coefficient is below tol relative to the largest.
  bool is_even(const BigReal& tol) const;
  BigReal max_abs_coeff() const;

  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o);
  PowerSeries& operator*=(const BigComplex& a);
  PowerSeries& operator*=(const BigReal& a);
  PowerSeries& operator/=(const BigComplex& a);

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, const BigComplex& b) { return a *= b; }
  friend PowerSeries operator*(const BigComplex& b, PowerSeries a) { return a *= b; }
  friend PowerSeries operator/(PowerSeries a, const BigComplex& b) { return a /= b; }
  PowerSeries operator-() const;

 private:
  BigComplex center_;
  std::vector<BigComplex> c_;
  PrecisionContext ctx_;
};

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);
PowerSeries reciprocal(const PowerSeries& a);
PowerSeries log(const PowerSeries& a);
PowerSeries exp(const PowerSeries& a);
PowerSeries pow(const PowerSeries& a, const BigComplex& p);
// Compositional inverse g of f with f(0) = 0, f'(0) != 0: f(g(w)) = w.
// The result is a series in w about 0.
PowerSeries revert(const PowerSeries& f);
// f(g(x)) with g(0) = 0, truncated to min order.
PowerSeries compose(const PowerSeries& f, const PowerSeries& g);

}  // namespace zetainv
