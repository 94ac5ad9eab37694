#pragma once

#include <map>
#include <vector>

#include "zetainv/specfun.hpp"

namespace zetainv {

enum class ZetaMeaning {
  zeros_minus_poles,
  nontrivial_conjugate_pairs,
  modulus_squared,
  imaginary_parts,
  singularities_mean,
};

// m -> Z(m), the sum over zeros z_n^{-m} minus the same sum over poles.
struct GenZetaTable {
  FunctionSpec spec;
  ZetaMeaning meaning = ZetaMeaning::zeros_minus_poles;
  PrecisionContext ctx;
  std::map<int, BigComplex> values;

  bool has(int m) const { return values.count(m) != 0; }
  const BigComplex& at(int m) const;
  int max_m() const { return values.empty() ? 0 : values.rbegin()->first; }
};

// Z(m) - P(m) = -m [x^m] log f for m = 1..m_max from one jet. For specs
// flagged positive_zeros_only the value is halved (sum over t_n > 0).
// Cached by (spec, ctx).
GenZetaTable log_derivative_zeta(const FunctionSpec& spec, int m_max, const PrecisionContext& ctx);

// Z over nontrivial zeros:
//   Z_nt(m) = 1 - (-1)^m 2^{-m} zeta(m) - log|zeta|^{(m)}(0)/(m-1)!,  m >= 2.
BigReal z_nt_closed_form(int m, const PrecisionContext& ctx);
// Z_nt(m) for any m >= 1: closed form for m >= 2, xi jet for m = 1.
BigReal z_nt(int m, const PrecisionContext& ctx);
// (1/2)(Z_nt(m)^2 - Z_nt(2m)), asymptotic to sum |rho|^{-2m}.
BigReal z_modsq_asymptotic(int m, const PrecisionContext& ctx);
// Exact sum over conjugate pairs of |rho|^{-2m}, two routes.
BigReal z_modsq_bologna(int m, const PrecisionContext& ctx);
BigReal z_modsq_keiper_li(int m, const PrecisionContext& ctx);
// lambda_n = (1/(n-1)!) d^n/ds^n [s^{n-1} log xi(s)] at s = 1.
BigReal keiper_li(int n, const PrecisionContext& ctx);
std::vector<BigReal> keiper_li_all(int n_max, const PrecisionContext& ctx);  // index 1..n_max

// Z_1(m) = sum t_n^{-m} over positive ordinates, m even. Assumes RH.
// Closed form from log|zeta| derivatives at 1/2, zeta(m) and beta(m).
BigReal z1_voros(int m, const PrecisionContext& ctx);
// Same quantity through the Hurwitz form
//   (-1)^{m/2}/2 [2^m - log|zeta|^{(m)}(1/2)/(m-1)! - 2^{-m} zeta(m, 5/4)].
BigReal z1_hurwitz(int m, const PrecisionContext& ctx);
// From the Xi(t) jet.
BigReal z1_xi(int m, const PrecisionContext& ctx);

// Rayleigh sums of Bessel zeros from the Sneddon recurrence. `exact` holds the
// rational values when nu is given as an exact decimal.
struct SneddonResult {
  GenZetaTable table;
  std::map<int, mpq_class> exact;
};
SneddonResult sneddon_bessel_z(const std::string& nu, int m_max, const PrecisionContext& ctx);

// Decimal string to exact rational ("0.25" -> 1/4).
mpq_class decimal_to_rational(const std::string& text);

}  // namespace zetainv
