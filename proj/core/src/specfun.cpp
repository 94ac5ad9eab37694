#include "zetainv/specfun.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>

namespace zetainv {

namespace {

constexpr double kLog10TwoPi = 0.79817986835811504957;

// Index J of the first tail term whose bound drops below 10^-target, or -1
// when the asymptotic terms turn around first.
int tail_terms_for(double absmax, double sigma_min, double Q, double target) {
  const double lq = std::log10(Q);
  double lprod = std::log10(absmax);  // prod_{i=0}^{2j-2} (absmax + i) for j = 1
  double prev = std::numeric_limits<double>::infinity();
  for (int j = 1; j < 200000; ++j) {
    if (j > 1) lprod += std::log10(absmax + 2 * j - 3) + std::log10(absmax + 2 * j - 2);
    const double lz = std::log10(1.0 + 1.5 * std::pow(4.0, -j));
    const double lt = std::log10(2.0) + lz - 2.0 * j * kLog10TwoPi + lprod - (sigma_min + 2.0 * j - 1.0) * lq;
    if (lt < -target) return j;
    if (lt > prev && j > 2) return -1;
    prev = lt;
  }
  return -1;
}

// acc[k] = alpha * acc[k] + acc[k-1], i.e. multiply by (alpha + x) in place.
void mul_linear_inplace(std::vector<BigComplex>& p, const BigComplex& alpha, BigReal& t1, BigReal& t2) {
  BigComplex tmp(p[0].ctx());
  for (size_t k = p.size(); k-- > 0;) {
    mul_into(tmp, p[k], alpha, t1, t2);
    if (k > 0) tmp += p[k - 1];
    std::swap(p[k], tmp);
  }
}

BigComplex expm_real_scaled(const BigComplex& c, const BigReal& lq) {
  // q^{-c} = exp(-c log q)
  BigReal mag = exp(-(c.re() * lq));
  if (c.im().is_zero()) return BigComplex(mag, BigReal(lq.ctx()));
  return polar(mag, -(c.im() * lq));
}

struct EmParts {
  std::vector<BigComplex> S;  // everything except Q^{1-s}/(s-1)
  std::vector<BigComplex> E;  // Q^{1-s}
  PrecisionContext wctx;
};

EmParts em_components(const BigComplex& center, const BigReal& a, int M, const PrecisionContext& ctx,
                      const EulerMaclaurinPlan& plan) {
  const PrecisionContext wctx = ctx.widened(plan.extra_digits);
  const BigComplex c = center.to(wctx);
  const BigReal aw = a.to(wctx);
  const bool a_is_one = (a == 1L);
  const size_t K = static_cast<size_t>(M) + 1;

  std::vector<BigComplex> acc(K, BigComplex(wctx));
  BigReal q(wctx), lq(wctx), t1(wctx), t2(wctx);
  BigComplex d(wctx);
  for (long n = 0; n < plan.n_terms; ++n) {
    if (a_is_one) {
      if (n == 0) {  // 1^{-s} = 1
        acc[0].re() += BigReal(1, wctx);
        continue;
      }
      mpfr_log_ui(lq.get(), static_cast<unsigned long>(n + 1), MPFR_RNDN);
    } else {
      q = aw + n;
      lq = log(q);
    }
    d = expm_real_scaled(c, lq);
    mpfr_neg(lq.get(), lq.get(), MPFR_RNDN);
    acc[0] += d;
    for (size_t k = 1; k < K; ++k) {
      mpfr_mul(d.re().get(), d.re().get(), lq.get(), MPFR_RNDN);
      if (!d.im().is_zero()) mpfr_mul(d.im().get(), d.im().get(), lq.get(), MPFR_RNDN);
      acc[k] += d;
    }
  }
  // divide by k!
  {
    BigReal f(1, wctx);
    for (size_t k = 2; k < K; ++k) {
      f *= static_cast<long>(k);
      acc[k] /= f;
    }
  }

  const BigReal Q = aw + plan.n_terms;
  const BigReal lQ = log(Q);
  std::vector<BigComplex> qs(K, BigComplex(wctx));  // Q^{-s}
  qs[0] = expm_real_scaled(c, lQ);
  for (size_t k = 1; k < K; ++k) {
    qs[k] = qs[k - 1] * (-lQ);
    qs[k] /= static_cast<long>(k);
  }

  EmParts out{std::move(acc), std::vector<BigComplex>(K, BigComplex(wctx)), wctx};
  for (size_t k = 0; k < K; ++k) {
    out.E[k] = qs[k] * Q;
    out.S[k] += qs[k] / 2L;
  }

  // Tail. P holds (s)_{2j-1} Q^{-s-1}; the scalar carries B_{2j}/(2j)! Q^{2-2j}.
  std::vector<BigComplex> P = qs;
  for (auto& v : P) v /= Q;
  mul_linear_inplace(P, c, t1, t2);
  const BigReal invQ2 = BigReal(1, wctx) / (Q * Q);
  BigReal qpow(1, wctx);
  mpz_class fact = 2;  // (2j)!
  for (int j = 1; j <= plan.tail_terms; ++j) {
    if (j > 1) {
      fact *= static_cast<unsigned long>((2 * j - 1) * (2 * j));
      qpow *= invQ2;
    }
    mpq_class bq = bernoulli(2 * j) / fact;
    const BigComplex scal(BigReal(bq, wctx) * qpow);
    for (size_t k = 0; k < K; ++k) fma_into(out.S[k], P[k], scal, t1, t2);
    if (j < plan.tail_terms) {
      mul_linear_inplace(P, c + BigComplex(2L * j - 1, wctx), t1, t2);
      mul_linear_inplace(P, c + BigComplex(2L * j, wctx), t1, t2);
    }
  }
  return out;
}

std::vector<BigComplex> rounded(const std::vector<BigComplex>& v, const PrecisionContext& ctx) {
  std::vector<BigComplex> r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(x.to(ctx));
  return r;
}

bool is_one(const BigComplex& c) { return c.im().is_zero() && c.re() == 1L; }

}  // namespace

EulerMaclaurinPlan plan_hurwitz(const BigComplex& center, double a, int order, const PrecisionContext& ctx) {
  const double re = center.re().to_double();
  const double im = center.im().to_double();
  const double absmax = std::hypot(re, im) + 1.0;
  const double sigma_min = re - 1.0;
  const double target = ctx.working_digits() + 3.0;
  const double n_cost = order + 40.0;
  const double j_cost = 3.0 * order + 10.0;

  EulerMaclaurinPlan best;
  double best_cost = std::numeric_limits<double>::infinity();
  double n = std::max(2.0, std::ceil(std::fabs(im) / (2.0 * M_PI)));
  const double n_max = 40.0 * target + 10.0 * std::fabs(im) + 200.0;
  for (; n <= n_max; n = std::ceil(n * 1.08 + 1.0)) {
    if (n * n_cost > best_cost) break;
    const int J = tail_terms_for(absmax, sigma_min, n + a, target);
    if (J < 0) continue;
    const double cost = n * n_cost + J * j_cost;
    if (cost < best_cost) {
      best_cost = cost;
      best.n_terms = static_cast<long>(n);
      best.tail_terms = J;
    }
  }
  if (best.n_terms == 0) throw ConvergenceError("no Euler-Maclaurin plan meets the requested precision");
  const double Q = static_cast<double>(best.n_terms) + a;
  best.extra_digits = static_cast<int>(std::ceil((std::max(0.0, -sigma_min) + 1.0) * std::log10(Q))) + 5;
  return best;
}

PowerSeries zeta_series(const BigComplex& center, int order, const PrecisionContext& ctx) {
  return zeta_series(center, order, ctx, plan_hurwitz(center, 1.0, order, ctx));
}

PowerSeries zeta_series(const BigComplex& center, int order, const PrecisionContext& ctx,
                        const EulerMaclaurinPlan& plan) {
  if (is_one(center)) throw PoleError("zeta series requested at the pole s = 1; use zeta_minus_pole_series");
  EmParts p = em_components(center, BigReal(1, ctx), order, ctx, plan);
  // S + E / (d + x), d = center - 1
  const BigComplex d = center.to(p.wctx) - BigComplex(1, p.wctx);
  const BigComplex id = inv(d);
  BigComplex y(p.wctx);
  for (size_t k = 0; k < p.S.size(); ++k) {
    y = (k == 0 ? p.E[k] : p.E[k] - y) * id;
    p.S[k] += y;
  }
  return PowerSeries(center.to(ctx), rounded(p.S, ctx), ctx);
}

PowerSeries zeta_pole_cancelled_series(const BigComplex& center, int order, const PrecisionContext& ctx) {
  EulerMaclaurinPlan plan = plan_hurwitz(center, 1.0, order, ctx);
  EmParts p = em_components(center, BigReal(1, ctx), order, ctx, plan);
  const BigComplex d = center.to(p.wctx) - BigComplex(1, p.wctx);
  std::vector<BigComplex> r(p.S.size(), BigComplex(p.wctx));
  for (size_t k = 0; k < r.size(); ++k) {
    r[k] = p.S[k] * d + p.E[k];
    if (k > 0) r[k] += p.S[k - 1];
  }
  return PowerSeries(center.to(ctx), rounded(r, ctx), ctx);
}

PowerSeries zeta_minus_pole_series(int order, const PrecisionContext& ctx) {
  const BigComplex one(1, ctx);
  EulerMaclaurinPlan plan = plan_hurwitz(one, 1.0, order + 1, ctx);
  EmParts p = em_components(one, BigReal(1, ctx), order + 1, ctx, plan);
  std::vector<BigComplex> r;
  for (int k = 0; k <= order; ++k) r.push_back((p.S[static_cast<size_t>(k)] + p.E[static_cast<size_t>(k + 1)]).to(ctx));
  return PowerSeries(one, std::move(r), ctx);
}

PowerSeries hurwitz_series(const BigComplex& center, const BigReal& a, int order, const PrecisionContext& ctx) {
  if (a.sign() <= 0) throw DomainError("Hurwitz zeta needs a > 0");
  if (is_one(center)) throw PoleError("Hurwitz zeta has a pole at s = 1");
  EulerMaclaurinPlan plan = plan_hurwitz(center, a.to_double(), order, ctx);
  EmParts p = em_components(center, a, order, ctx, plan);
  const BigComplex d = center.to(p.wctx) - BigComplex(1, p.wctx);
  const BigComplex id = inv(d);
  BigComplex y(p.wctx);
  for (size_t k = 0; k < p.S.size(); ++k) {
    y = (k == 0 ? p.E[k] : p.E[k] - y) * id;
    p.S[k] += y;
  }
  return PowerSeries(center.to(ctx), rounded(p.S, ctx), ctx);
}

BigComplex zeta(const BigComplex& s, const PrecisionContext& ctx) { return zeta_series(s, 0, ctx)[0]; }

BigReal zeta(const BigReal& s) { return zeta(BigComplex(s), s.ctx()).re(); }

BigComplex hurwitz_zeta(const BigComplex& s, const BigReal& a, const PrecisionContext& ctx) {
  return hurwitz_series(s, a, 0, ctx)[0];
}

BigReal hurwitz_zeta(const BigReal& s, const BigReal& a) {
  return hurwitz_zeta(BigComplex(s), a, s.ctx()).re();
}

BigComplex dirichlet_beta(const BigComplex& s, const PrecisionContext& ctx) {
  // removable singularity of the Hurwitz form
  if (is_one(s)) return BigComplex(pi(ctx) / 4L);
  const PrecisionContext w = ctx.widened(5);
  BigComplex sw = s.to(w);
  BigReal q1 = BigReal(1, w) / 4L, q3 = BigReal(3, w) / 4L;
  BigComplex diff = hurwitz_zeta(sw, q1, w) - hurwitz_zeta(sw, q3, w);
  BigComplex f = exp(-sw * BigComplex(log(BigReal(4, w))));
  return (f * diff).to(ctx);
}

BigReal dirichlet_beta(const BigReal& s) { return dirichlet_beta(BigComplex(s), s.ctx()).re(); }

std::vector<BigReal> hurwitz_zeta_integers(const BigReal& a, int k_max, const PrecisionContext& ctx) {
  if (a.sign() <= 0) throw DomainError("Hurwitz zeta needs a > 0");
  std::vector<BigReal> out(static_cast<size_t>(std::max(k_max, 1)) + 1, BigReal(ctx));
  if (k_max < 2) return out;
  // The tail factor grows like (k + 2j)^2 / Q^2, so the largest k sets N.
  EulerMaclaurinPlan plan = plan_hurwitz(BigComplex(BigReal(2, ctx)), a.to_double(), 0, ctx);
  const EulerMaclaurinPlan high = plan_hurwitz(BigComplex(BigReal(k_max, ctx)), a.to_double(), 0, ctx);
  if (high.n_terms > plan.n_terms) plan = high;
  const PrecisionContext w = ctx.widened(plan.extra_digits);
  const BigReal aw = a.to(w);
  const long N = plan.n_terms;
  std::vector<BigReal> inv_q(static_cast<size_t>(N), BigReal(w)), pw(static_cast<size_t>(N), BigReal(w));
  for (long n = 0; n < N; ++n) {
    inv_q[static_cast<size_t>(n)] = BigReal(1, w) / (aw + n);
    pw[static_cast<size_t>(n)] = inv_q[static_cast<size_t>(n)];
  }
  const BigReal Q = aw + N;
  const BigReal invQ = BigReal(1, w) / Q;
  const BigReal invQ2 = invQ * invQ;
  const BigReal eps = ten_pow(-(ctx.working_digits() + 3), w);  // the plan's target
  BigReal qpow = invQ;  // Q^{-(k-1)}
  std::vector<BigReal> bern;  // B_{2j}/(2j)!
  mpz_class fact = 1;
  for (int k = 2; k <= k_max; ++k) {
    BigReal sum(w);
    for (long n = 0; n < N; ++n) {
      pw[static_cast<size_t>(n)] *= inv_q[static_cast<size_t>(n)];
      sum += pw[static_cast<size_t>(n)];
    }
    // qpow = Q^{1-k}
    sum += qpow / static_cast<long>(k - 1);
    BigReal qk = qpow * invQ;  // Q^{-k}
    sum += qk / 2L;
    // R_1 = k Q^{-k-1}; R_{j+1} = R_j (k+2j-1)(k+2j)/Q^2
    BigReal r = qk * invQ * static_cast<long>(k);
    BigReal prev_abs(w);
    for (int j = 1;; ++j) {
      if (static_cast<int>(bern.size()) < j) {
        fact *= static_cast<unsigned long>((2 * j - 1) * (2 * j));
        bern.push_back(BigReal(bernoulli(2 * j) / fact, w));
      }
      BigReal term = bern[static_cast<size_t>(j - 1)] * r;
      sum += term;
      BigReal at = abs(term);
      if (at < eps) break;
      if (j > 2 && at > prev_abs) throw ConvergenceError("Hurwitz tail diverged before reaching precision");
      prev_abs = at;
      r *= invQ2;
      r *= static_cast<long>((k + 2 * j - 1));
      r *= static_cast<long>((k + 2 * j));
    }
    out[static_cast<size_t>(k)] = sum.to(ctx);
    qpow = qk;
  }
  return out;
}

PowerSeries log_gamma_series(const BigReal& center, int order, const PrecisionContext& ctx) {
  if (center.sign() <= 0) throw DomainError("log_gamma_series needs a positive center");
  const BigReal a = center.to(ctx);
  std::vector<BigComplex> c(static_cast<size_t>(order) + 1, BigComplex(ctx));
  c[0] = BigComplex(lngamma(a));
  if (order >= 1) c[1] = BigComplex(digamma(a));
  if (order >= 2) {
    std::vector<BigReal> hz = hurwitz_zeta_integers(a, order, ctx);
    for (int k = 2; k <= order; ++k) {
      BigReal v = hz[static_cast<size_t>(k)] / static_cast<long>(k);
      c[static_cast<size_t>(k)] = BigComplex(k % 2 == 0 ? v : -v);
    }
  }
  return PowerSeries(BigComplex(a), std::move(c), ctx);
}

PowerSeries gamma_series(const BigReal& center, int order, const PrecisionContext& ctx) {
  return exp(log_gamma_series(center, order, ctx));
}

PowerSeries xi_series_about(const BigReal& center, int order, const PrecisionContext& ctx) {
  const BigReal c = center.to(ctx);
  const BigReal ga = BigReal(1, ctx) + c / 2L;
  if (ga.sign() <= 0) throw DomainError("xi series center must exceed -2");
  const BigComplex cc(c);
  PowerSeries f = zeta_pole_cancelled_series(cc, order, ctx);
  PowerSeries g = gamma_series(ga, order, ctx).scaled_variable(BigComplex(BigReal(1, ctx) / 2L)).recentred(cc);
  // pi^{-s/2} = exp(-(c + x) log(pi) / 2)
  const BigReal hl = log(pi(ctx)) / 2L;
  std::vector<BigComplex> h(static_cast<size_t>(order) + 1, BigComplex(ctx));
  h[0] = BigComplex(exp(-(c * hl)));
  for (int k = 1; k <= order; ++k) h[static_cast<size_t>(k)] = h[static_cast<size_t>(k - 1)] * (-hl) / static_cast<long>(k);
  PowerSeries hs(cc, std::move(h), ctx);
  return f * g * hs;
}

PowerSeries xi_series(int order, const PrecisionContext& ctx) { return xi_series_about(BigReal(ctx), order, ctx); }

PowerSeries big_xi_critical_series(int order, const PrecisionContext& ctx) {
  PowerSeries x = xi_series_about(BigReal(1, ctx) / 2L, order, ctx);
  // s = 1/2 + i t: coefficient k picks up i^k; odd ones vanish by symmetry.
  std::vector<BigComplex> c(static_cast<size_t>(order) + 1, BigComplex(ctx));
  for (int k = 0; k <= order; k += 2) {
    BigComplex v = x[k];
    if ((k / 2) % 2 == 1) v = -v;
    c[static_cast<size_t>(k)] = v;
  }
  for (int k = 1; k <= order; k += 2) {
    // keep the (tiny) odd residue visible for parity checks: i^k c_k
    BigComplex v = x[k];
    BigComplex ik = (k % 4 == 1) ? BigComplex(BigReal(ctx), BigReal(1, ctx)) : BigComplex(BigReal(ctx), BigReal(-1, ctx));
    c[static_cast<size_t>(k)] = v * ik;
  }
  return PowerSeries(BigComplex(ctx), std::move(c), ctx);
}

PowerSeries bessel_j_series(const BigReal& nu, int order, const PrecisionContext& ctx) {
  if (nu <= -1L) throw DomainError("Bessel order must exceed -1");
  const BigReal v = nu.to(ctx);
  std::vector<BigComplex> c(static_cast<size_t>(order) + 1, BigComplex(ctx));
  BigReal t(1, ctx);
  c[0] = BigComplex(t);
  for (int n = 1; 2 * n <= order; ++n) {
    t /= -4L * n;
    t /= (v + n);
    c[static_cast<size_t>(2 * n)] = BigComplex(t);
  }
  return PowerSeries(BigComplex(ctx), std::move(c), ctx);
}

PowerSeries sinc_series(int order, const PrecisionContext& ctx) {
  const BigReal p2 = pi(ctx) * pi(ctx);
  std::vector<BigComplex> c(static_cast<size_t>(order) + 1, BigComplex(ctx));
  BigReal t(1, ctx);
  c[0] = BigComplex(t);
  for (int n = 1; 2 * n <= order; ++n) {
    t *= -p2;
    t /= static_cast<long>(2 * n) * (2 * n + 1);
    c[static_cast<size_t>(2 * n)] = BigComplex(t);
  }
  return PowerSeries(BigComplex(ctx), std::move(c), ctx);
}

PowerSeries poly_series(const std::vector<std::string>& coeffs, int order, const PrecisionContext& ctx) {
  if (coeffs.empty()) throw DomainError("polynomial needs at least one coefficient");
  std::vector<BigComplex> c(static_cast<size_t>(order) + 1, BigComplex(ctx));
  for (size_t k = 0; k < coeffs.size() && k <= static_cast<size_t>(order); ++k) {
    c[k] = BigComplex(parse_decimal(coeffs[k], ctx));
  }
  return PowerSeries(BigComplex(ctx), std::move(c), ctx);
}

PowerSeries cached_series(const std::string& key, int order, const PrecisionContext& ctx,
                          const std::function<PowerSeries(int order)>& make) {
  static std::mutex mu;
  static std::map<std::string, PowerSeries> store;
  const std::string full = key + "@" + std::to_string(ctx.digits()) + "/" + std::to_string(ctx.guard());
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = store.find(full);
    if (it != store.end() && it->second.order() >= order) return it->second.truncated(order);
  }
  PowerSeries s = make(order);
  std::lock_guard<std::mutex> lock(mu);
  auto it = store.find(full);
  if (it == store.end() || it->second.order() < s.order()) store[full] = s;
  return s;
}

// ---------------------------------------------------------------- FunctionSpec

FunctionSpec FunctionSpec::riemann_zeta_shifted() {
  FunctionSpec f;
  f.kind = SpecKind::riemann_zeta_shifted;
  f.cancel = "(s-1) removes the pole at s=1";
  return f;
}

FunctionSpec FunctionSpec::xi() {
  FunctionSpec f;
  f.kind = SpecKind::xi;
  f.cancel = "(s-1) Gamma(1+s/2) pi^(-s/2) removes the pole and trivial zeros";
  return f;
}

FunctionSpec FunctionSpec::big_xi_critical_line() {
  FunctionSpec f;
  f.kind = SpecKind::big_xi_critical_line;
  f.parity = Parity::even;
  f.positive_zeros_only = true;
  f.cancel = "xi(1/2+it), zeros at +-t_n";
  return f;
}

FunctionSpec FunctionSpec::bessel_j(const std::string& nu) {
  FunctionSpec f;
  f.kind = SpecKind::bessel_j;
  f.parity = Parity::even;
  f.positive_zeros_only = true;
  f.nu = nu;
  f.cancel = "x^nu removes the zero at the origin";
  return f;
}

FunctionSpec FunctionSpec::sinc() {
  FunctionSpec f;
  f.kind = SpecKind::sinc;
  f.parity = Parity::even;
  f.cancel = "division by pi s removes the zero at the origin";
  return f;
}

FunctionSpec FunctionSpec::polynomial(std::vector<std::string> coeffs) {
  FunctionSpec f;
  f.kind = SpecKind::polynomial;
  f.coeffs = std::move(coeffs);
  f.cancel = "none";
  return f;
}

FunctionSpec FunctionSpec::gamma_shifted(const std::string& center) {
  FunctionSpec f;
  f.kind = SpecKind::gamma_shifted;
  f.center = center;
  f.cancel = "expansion about a positive point avoids the poles";
  return f;
}

FunctionSpec FunctionSpec::user_series(Generator g, Parity parity, std::string cancel) {
  FunctionSpec f;
  f.kind = SpecKind::user_series;
  f.parity = parity;
  f.generator = std::move(g);
  f.cancel = std::move(cancel);
  return f;
}

PowerSeries FunctionSpec::generate(int order, const PrecisionContext& ctx) const {
  switch (kind) {
    case SpecKind::riemann_zeta_shifted:
      return zeta_pole_cancelled_series(BigComplex(ctx), order, ctx);
    case SpecKind::xi:
      return xi_series(order, ctx);
    case SpecKind::big_xi_critical_line:
      return big_xi_critical_series(order, ctx);
    case SpecKind::bessel_j:
      return bessel_j_series(parse_decimal(nu, ctx), order, ctx);
    case SpecKind::sinc:
      return sinc_series(order, ctx);
    case SpecKind::polynomial:
      return poly_series(coeffs, order, ctx);
    case SpecKind::gamma_shifted:
      return gamma_series(parse_decimal(center, ctx), order, ctx);
    case SpecKind::user_series:
      if (!generator) throw UsageError("user series spec without a generator");
      return generator(order, ctx);
  }
  throw UsageError("unknown function spec");
}

std::string FunctionSpec::name() const {
  switch (kind) {
    case SpecKind::riemann_zeta_shifted: return "riemann_zeta_shifted";
    case SpecKind::xi: return "xi";
    case SpecKind::big_xi_critical_line: return "big_xi_critical_line";
    case SpecKind::bessel_j: return "bessel_j";
    case SpecKind::sinc: return "sinc";
    case SpecKind::polynomial: return "polynomial";
    case SpecKind::gamma_shifted: return "gamma_shifted";
    case SpecKind::user_series: return "user_series";
  }
  return "unknown";
}

std::string FunctionSpec::key() const {
  if (kind == SpecKind::user_series) return {};
  std::string k = name();
  if (!nu.empty()) k += ":nu=" + nu;
  if (!center.empty()) k += ":c=" + center;
  for (const auto& c : coeffs) k += ":" + c;
  return k;
}

}  // namespace zetainv
