#pragma once

#include <functional>
#include <string>
#include <vector>

#include "zetainv/series.hpp"

namespace zetainv {

// Euler-Maclaurin parameters for zeta and Hurwitz zeta jets:
//   sum_{n<N} (n+a)^{-s} + Q^{1-s}/(s-1) + Q^{-s}/2
//     + sum_{j<=J} B_{2j}/(2j)! (s)_{2j-1} Q^{-s-2j+1},   Q = N + a.
struct EulerMaclaurinPlan {
  long n_terms = 0;
  int tail_terms = 0;
  int extra_digits = 0;  // internal headroom against cancellation in the sum
};

// Smallest-cost (N, J) whose first omitted tail term, bounded over the disk
// of radius 1 around `center`, is below 10^-(working digits).
EulerMaclaurinPlan plan_hurwitz(const BigComplex& center, double a, int order, const PrecisionContext& ctx);

// Taylor series of zeta(s) about center (center != 1).
PowerSeries zeta_series(const BigComplex& center, int order, const PrecisionContext& ctx);
PowerSeries zeta_series(const BigComplex& center, int order, const PrecisionContext& ctx,
                        const EulerMaclaurinPlan& plan);
// Series of (s-1) zeta(s), computed without dividing by the pole.
PowerSeries zeta_pole_cancelled_series(const BigComplex& center, int order, const PrecisionContext& ctx);
// Series of zeta(s) - 1/(s-1) about s = 1; c_n = (-1)^n gamma_n / n!.
PowerSeries zeta_minus_pole_series(int order, const PrecisionContext& ctx);
// Series of zeta(s, a) about center.
PowerSeries hurwitz_series(const BigComplex& center, const BigReal& a, int order, const PrecisionContext& ctx);

BigComplex zeta(const BigComplex& s, const PrecisionContext& ctx);
BigReal zeta(const BigReal& s);
BigComplex hurwitz_zeta(const BigComplex& s, const BigReal& a, const PrecisionContext& ctx);
BigReal hurwitz_zeta(const BigReal& s, const BigReal& a);
// beta(s) = 4^{-s} (zeta(s, 1/4) - zeta(s, 3/4))
BigComplex dirichlet_beta(const BigComplex& s, const PrecisionContext& ctx);
BigReal dirichlet_beta(const BigReal& s);
// zeta(k, a) for k = 2..k_max at once (entries 0 and 1 are unused zeros).
std::vector<BigReal> hurwitz_zeta_integers(const BigReal& a, int k_max, const PrecisionContext& ctx);

// log Gamma(center + x); center > 0.
PowerSeries log_gamma_series(const BigReal& center, int order, const PrecisionContext& ctx);
PowerSeries gamma_series(const BigReal& center, int order, const PrecisionContext& ctx);

// xi(s) = (s-1) Gamma(1+s/2) pi^{-s/2} zeta(s) about a real center (> -2).
PowerSeries xi_series_about(const BigReal& center, int order, const PrecisionContext& ctx);
PowerSeries xi_series(int order, const PrecisionContext& ctx);  // about s = 0
// Xi(t) = xi(1/2 + i t) about t = 0. Real and even.
PowerSeries big_xi_critical_series(int order, const PrecisionContext& ctx);

// J_nu(x) / x^nu normalised to constant term 1: sum (-1)^n x^{2n} / (4^n n! (nu+1)_n).
PowerSeries bessel_j_series(const BigReal& nu, int order, const PrecisionContext& ctx);
// sin(pi s)/(pi s)
PowerSeries sinc_series(int order, const PrecisionContext& ctx);
// Polynomial from exact decimal coefficient strings, lowest degree first.
PowerSeries poly_series(const std::vector<std::string>& coeffs, int order, const PrecisionContext& ctx);

// Memoised series keyed by (key, ctx). A request for a lower order reuses a
// longer stored series; a higher order regenerates and replaces it.
// Thread-safe; generation happens outside the lock.
PowerSeries cached_series(const std::string& key, int order, const PrecisionContext& ctx,
                          const std::function<PowerSeries(int order)>& make);

enum class SpecKind {
  riemann_zeta_shifted,  // (s-1) zeta(s) about 0
  xi,                    // xi(s) about 0
  big_xi_critical_line,  // Xi(t) about 0
  bessel_j,              // J_nu(x)/x^nu about 0
  sinc,                  // sin(pi s)/(pi s) about 0
  polynomial,            // p(s) about 0
  gamma_shifted,         // Gamma(s) about a positive center
  user_series,
};

enum class Parity { none, even };

// A pole- and zero-cancelled function whose remaining zeros are sought.
struct FunctionSpec {
  using Generator = std::function<PowerSeries(int order, const PrecisionContext& ctx)>;

  SpecKind kind = SpecKind::user_series;
  Parity parity = Parity::none;
  // Z sums run over positive zeros only (Bessel, Xi); otherwise over all.
  bool positive_zeros_only = false;
  std::string cancel;  // human-readable description of the removed factors
  std::string nu;      // bessel order, decimal
  std::string center;  // gamma_shifted expansion point, decimal
  std::vector<std::string> coeffs;
  Generator generator;

  static FunctionSpec riemann_zeta_shifted();
  static FunctionSpec xi();
  static FunctionSpec big_xi_critical_line();
  static FunctionSpec bessel_j(const std::string& nu);
  static FunctionSpec sinc();
  static FunctionSpec polynomial(std::vector<std::string> coeffs);
  static FunctionSpec gamma_shifted(const std::string& center);
  static FunctionSpec user_series(Generator g, Parity parity = Parity::none, std::string cancel = {});

  PowerSeries generate(int order, const PrecisionContext& ctx) const;
  // Stable cache key; empty for user series (never cached).
  std::string key() const;
  std::string name() const;
};

}  // namespace zetainv
