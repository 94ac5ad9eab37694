#include "zetainv/polyroots.hpp"

#include <cmath>

#include "zetainv/errors.hpp"

namespace zetainv {

std::pair<BigComplex, BigComplex> horner(const std::vector<BigComplex>& c, const BigComplex& x) {
  const PrecisionContext& ctx = x.ctx();
  BigComplex p(ctx), dp(ctx);
  for (size_t k = c.size(); k-- > 0;) {
    dp *= x;
    dp += p;
    p *= x;
    p += c[k];
  }
  return {p, dp};
}

std::vector<BigComplex> polyroots(const std::vector<BigComplex>& coeffs, const PrecisionContext& ctx) {
  size_t n = coeffs.size();
  while (n > 0 && coeffs[n - 1].is_zero()) --n;
  if (n < 2) throw DomainError("polynomial must have degree >= 1");
  const int deg = static_cast<int>(n) - 1;
  const PrecisionContext w = ctx.widened(ctx.working_digits());

  std::vector<BigComplex> c;
  for (size_t k = 0; k < n; ++k) c.push_back(coeffs[k].to(w) / coeffs[n - 1].to(w));

  // Start on a circle of the Cauchy-type radius max|c_k|^{1/(n-k)}, rotated
  // off the real axis so conjugate pairs can separate.
  double radius = 0;
  for (int k = 0; k < deg; ++k) {
    const double l = abs(c[static_cast<size_t>(k)]).log10_abs();
    if (std::isfinite(l)) radius = std::max(radius, std::pow(10.0, l / (deg - k)));
  }
  if (radius == 0) radius = 1;
  std::vector<BigComplex> z;
  const BigReal two_pi = pi(w) * 2L;
  for (int k = 0; k < deg; ++k) {
    BigReal theta = two_pi * k / static_cast<long>(deg) + BigReal::from_double(0.4, w);
    z.push_back(polar(BigReal::from_double(radius, w), theta));
  }

  const BigReal stop = ten_pow(-w.digits() + 5, w);
  const int cap = 200 + 20 * deg;
  std::vector<bool> done(static_cast<size_t>(deg), false);
  int it = 0;
  for (; it < cap; ++it) {
    bool all = true;
    for (int i = 0; i < deg; ++i) {
      const size_t ui = static_cast<size_t>(i);
      if (done[ui]) continue;
      auto [p, dp] = horner(c, z[ui]);
      if (p.is_zero()) {
        done[ui] = true;
        continue;
      }
      BigComplex ratio = p / dp;
      BigComplex s(w);
      for (int j = 0; j < deg; ++j) {
        if (j != i) s += inv(z[ui] - z[static_cast<size_t>(j)]);
      }
      BigComplex step = ratio / (BigComplex(1L, w) - ratio * s);
      z[ui] -= step;
      if (abs(step) <= stop * max(abs(z[ui]), BigReal(1, w))) done[ui] = true;
      else all = false;
    }
    if (all) break;
  }

  const BigReal scale = [&] {
    BigReal m(ctx);
    for (size_t k = 0; k < n; ++k) m = max(m, abs(coeffs[k]).to(ctx));
    return m;
  }();
  const BigReal tol = ten_pow(-ctx.digits() / 2, ctx) * scale;
  std::vector<BigComplex> out;
  std::string bad;
  for (int i = 0; i < deg; ++i) {
    const BigComplex& r = z[static_cast<size_t>(i)];
    BigReal res = abs(horner(coeffs, r.to(ctx)).first);
    if (!(res < tol)) bad += " root " + std::to_string(i) + " residual " + format_decimal(res, 3) + ";";
    out.push_back(r.to(ctx));
  }
  if (!bad.empty()) {
    throw ConvergenceError("Aberth iteration did not converge after " + std::to_string(it) + " sweeps:" + bad);
  }
  return out;
}

}  // namespace zetainv
