#include "zetainv/invzeta.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

#include "zetainv/polyroots.hpp"

namespace zetainv {

namespace {

constexpr const char* kJ1Limit = "0.009159890119903461840056038728";

BigReal half(const PrecisionContext& ctx) { return BigReal(1, ctx) / 2L; }

// The log jet shares the zeta jet about 0; w only shifts the constant term.
PowerSeries shifted_log(const BigComplex& w, int m, const PrecisionContext& ctx) {
  PowerSeries g = cached_series("zpc@0", m, ctx, [&](int n) {
    return zeta_pole_cancelled_series(BigComplex(ctx), n, ctx);
  });
  // (zeta(s) - w)(s - 1) = (s - 1) zeta(s) + w - w s
  g[0] += w;
  if (m >= 1) g[1] -= w;
  return log(g);
}

bool real_input(const BigComplex& w) { return w.is_real(ten_pow(-w.ctx().digits() / 2, w.ctx())); }

bool negative_region(const BigComplex& w) {
  const PrecisionContext& ctx = w.ctx();
  return real_input(w) && w.re() > -half(ctx) && w.re() < j1_limit(ctx);
}

// +-R^{-1/m}: for real input the magnitude is real and the sign is chosen by
// region; complex input takes the principal root.
BigComplex signed_root(const BigComplex& r, int m, bool real_w, bool negative) {
  if (r.is_zero()) throw SingularityError("radicand vanishes; w sits on a branch singularity");
  BigComplex s;
  if (real_w && r.is_real(ten_pow(-r.ctx().digits() / 2, r.ctx()))) {
    s = BigComplex(exp(-log(abs(r.re())) / static_cast<long>(m)));
  } else {
    s = inv(nth_root(r, m, 0));
  }
  return negative ? -s : s;
}

bool choose_negative(SignRule rule, bool automatic_negative) {
  switch (rule) {
    case SignRule::positive: return false;
    case SignRule::negative: return true;
    case SignRule::automatic: return automatic_negative;
  }
  return false;
}

// Headroom against cancellation in the log recurrence: F_m(w) ~ |s|^{-m}.
PrecisionContext jet_context(int m, const PrecisionContext& ctx) { return ctx.widened(m + 20); }

}  // namespace

BigReal j1_limit(const PrecisionContext& ctx) { return parse_decimal(kJ1Limit, ctx); }

bool in_singular_strip(const BigComplex& w, const PrecisionContext& ctx) {
  if (!w.is_real(ten_pow(-ctx.digits() / 2, ctx))) return false;
  return w.re() >= j1_limit(ctx) && w.re() <= BigReal(1, ctx);
}

BigComplex inverse_radicand(const BigComplex& w, int m, const PrecisionContext& ctx) {
  if (m < 1) throw DomainError("m must be at least 1");
  const PrecisionContext wc = jet_context(m, ctx);
  BigComplex ww = w.to(wc);
  if ((ww + BigComplex(half(wc))).is_zero()) {
    throw SingularityError("w = -1/2: constant term of the log jet vanishes");
  }
  PowerSeries l = shifted_log(ww, m, wc);
  return (l[m] * static_cast<long>(-m)).to(ctx);
}

BigComplex izeta_limit(const BigComplex& w_in, int m, SignRule sign, const PrecisionContext& ctx) {
  if (m < 2) throw DomainError("izeta_limit needs m >= 2");
  const BigComplex w = w_in.to(ctx);
  if ((w + BigComplex(half(ctx))).is_zero()) {
    const BigComplex eps(ten_pow(-ctx.digits() / 2, ctx));
    BigComplex a = izeta_limit(w - eps, m, sign, ctx);
    BigComplex b = izeta_limit(w + eps, m, sign, ctx);
    return (a + b) / 2L;
  }
  const bool neg = choose_negative(sign, negative_region(w));
  return signed_root(inverse_radicand(w, m, ctx), m, real_input(w), neg);
}

BigComplex izeta_branch2(const BigComplex& w_in, const BigComplex& s1_ref, int m, SignRule sign,
                         const PrecisionContext& ctx) {
  if (m < 1) throw DomainError("izeta_branch2 needs m >= 1");
  const BigComplex w = w_in.to(ctx);
  const int order = 2 * m;
  BigComplex r = inverse_radicand(w, order, ctx) - inv(pow(s1_ref.to(ctx), static_cast<long>(order)));
  const bool real_w = real_input(w);
  if (real_w && (r.re().sign() <= 0 || !r.is_real(ten_pow(-ctx.digits() / 2, ctx)))) {
    BigComplex c = inv(nth_root(r, order, 0));
    throw DominanceViolated("deflated radicand is not positive; raise m or refine s1",
                            format_decimal(c.re(), 30), format_decimal(c.im(), 30));
  }
  return signed_root(r, order, real_w, choose_negative(sign, true));
}

std::vector<BigReal> expansion_coeffs(int m, const PrecisionContext& ctx) {
  if (m < 2) throw DomainError("expansion coefficients need m >= 2");
  // P(w) = (w + 1/2)^m F_m(w) is a polynomial of degree m; sample it on the
  // unit circle and invert the DFT.
  const PrecisionContext wc = jet_context(m, ctx);
  const int n = m + 1;
  const BigReal two_pi = pi(wc) * 2L;
  std::vector<BigComplex> vals(static_cast<size_t>(n), BigComplex(wc));
  for (int k = 0; k <= n / 2; ++k) {
    BigComplex w = polar(BigReal(1, wc), two_pi * k / static_cast<long>(n));
    PowerSeries l = shifted_log(w, m, wc);
    BigComplex p = l[m] * static_cast<long>(-m) * pow(w + BigComplex(half(wc)), static_cast<long>(m));
    vals[static_cast<size_t>(k)] = p;
    if (k != 0) vals[static_cast<size_t>(n - k)] = conj(p);
  }
  std::vector<BigReal> out;
  for (int j = 0; j <= m; ++j) {
    BigReal acc(wc);
    for (int k = 0; k < n; ++k) {
      BigReal theta = two_pi * static_cast<long>((static_cast<long>(j) * k) % n) / static_cast<long>(n);
      const BigComplex& v = vals[static_cast<size_t>(k)];
      acc += v.re() * cos(theta) + v.im() * sin(theta);
    }
    out.push_back(acc / static_cast<long>(n));
  }
  const BigReal lead = out.back();
  for (auto& c : out) c = (c / lead).to(ctx);
  return out;
}

void canonical_order(std::vector<BigComplex>& roots, const BigReal& tol) {
  std::vector<BigComplex> real, cplx;
  for (auto& r : roots) {
    if (abs(r.im()) <= tol) real.emplace_back(r.re());
    else cplx.push_back(r);
  }
  std::sort(real.begin(), real.end(), [](const BigComplex& a, const BigComplex& b) { return a.re() < b.re(); });
  std::sort(cplx.begin(), cplx.end(), [&](const BigComplex& a, const BigComplex& b) {
    BigReal da = abs(a.im()), db = abs(b.im());
    if (abs(da - db) > tol) return da < db;
    return a.im() < b.im();
  });
  // Make each pair exact conjugates of the negative-imaginary member.
  for (size_t i = 0; i + 1 < cplx.size(); i += 2) cplx[i + 1] = conj(cplx[i]);
  roots = std::move(real);
  roots.insert(roots.end(), cplx.begin(), cplx.end());
}

AttractorTable attractor(int m, const PrecisionContext& ctx) {
  if (m < 4 || m % 2 != 0) throw DomainError("attractor needs even m >= 4");
  AttractorTable t;
  t.m = m;
  t.ctx = ctx;
  t.source_poly = expansion_coeffs(m, ctx);
  std::vector<BigComplex> c;
  for (const auto& x : t.source_poly) c.emplace_back(x);
  t.roots = polyroots(c, ctx);
  canonical_order(t.roots, ten_pow(-ctx.digits() / 2, ctx));
  if (static_cast<int>(t.roots.size()) != m) throw ConvergenceError("attractor root count mismatch");
  for (size_t i = 0; i < t.roots.size(); ++i) {
    if (t.roots[i].im().is_zero()) continue;
    if (i + 1 >= t.roots.size() || !(abs(t.roots[i + 1] - conj(t.roots[i])) < ten_pow(-ctx.digits() / 2, ctx))) {
      throw ConvergenceError("attractor roots are not in conjugate pairs");
    }
    ++i;
  }
  return t;
}

// ------------------------------------------------------------------ product

namespace {

BigComplex inverse_product(const BigComplex& w, const AttractorTable& t) {
  const PrecisionContext& ctx = t.ctx;
  BigComplex p(1L, ctx);
  for (const auto& j : t.roots) {
    BigComplex d = w - j;
    if (d.is_zero()) throw SingularityError("w coincides with a tabulated singularity");
    p *= d;
  }
  return inv(p);
}

BigReal residual_at(const BigComplex& s, const BigComplex& w, const PrecisionContext& ctx) {
  return abs(zeta(s.to(ctx), ctx) - w.to(ctx));
}

}  // namespace

BranchResult izeta_product(const BigComplex& w_in, const AttractorTable& t, double threshold) {
  const PrecisionContext& ctx = t.ctx;
  const BigComplex w = w_in.to(ctx);
  const BigComplex a = inverse_product(w, t);
  const BigComplex front = w + BigComplex(half(ctx));
  // Branches are screened cheaply and the winner is re-checked at full precision.
  const PrecisionContext screen(std::min(ctx.digits(), 30));
  const BigReal tx = BigReal::from_double(threshold, screen);
  BranchResult out;
  out.m = t.m;
  out.in_strip = in_singular_strip(w, ctx);
  bool found = false;
  int best = 0;
  double best_log = 1e300;
  for (int lambda = 0; lambda < t.m; ++lambda) {
    BigComplex s = front * nth_root(a, t.m, lambda);
    BigReal e = residual_at(s, w, screen);
    const double le = e.is_zero() ? -1e9 : e.log10_abs();
    if (le < best_log) {
      best_log = le;
      best = lambda;
    }
    if (e < tx) {
      if (!found) {
        found = true;
        out.lambda = lambda;
        out.s = s;
      } else {
        out.ambiguous = true;
      }
    }
  }
  if (!found) {
    throw BranchNotFound("no m-th root branch reproduces w within the threshold", best, best_log);
  }
  if (out.ambiguous) {
    out.lambda = best;
    out.s = front * nth_root(a, t.m, best);
  }
  out.residual = residual_at(out.s, w, ctx);
  return out;
}

std::vector<GridPoint> error_grid(double re_lo, double re_hi, double im_lo, double im_hi, int n_re, int n_im,
                                  const AttractorTable& table, int threads, double threshold) {
  if (n_re < 1 || n_im < 1) throw DomainError("grid needs at least one point per axis");
  std::vector<GridPoint> grid(static_cast<size_t>(n_re) * static_cast<size_t>(n_im));
  auto coord = [](double lo, double hi, int n, int i) { return n == 1 ? lo : lo + (hi - lo) * i / (n - 1); };
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t idx = next++; idx < grid.size(); idx = next++) {
      const int i = static_cast<int>(idx / static_cast<size_t>(n_re));
      const int r = static_cast<int>(idx % static_cast<size_t>(n_re));
      GridPoint& g = grid[idx];
      g.w = BigComplex(BigReal::from_double(coord(re_lo, re_hi, n_re, r), table.ctx),
                       BigReal::from_double(coord(im_lo, im_hi, n_im, i), table.ctx));
      g.in_strip = in_singular_strip(g.w, table.ctx);
      try {
        BranchResult b = izeta_product(g.w, table, threshold);
        g.ok = true;
        g.lambda = b.lambda;
        g.log10_residual = b.residual.is_zero() ? -static_cast<double>(table.ctx.working_digits())
                                                : b.residual.log10_abs();
      } catch (const BranchNotFound& e) {
        g.lambda = e.best_lambda();
        g.log10_residual = e.best_log10_residual();
        g.error = e.kind();
      } catch (const Error& e) {
        g.error = e.kind();
      }
    }
  };
  int n = threads > 0 ? threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (int k = 1; k < n; ++k) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  return grid;
}

std::string grid_to_csv(const std::vector<GridPoint>& grid) {
  std::ostringstream os;
  os << "re,im,ok,lambda,log10_E,in_strip,error\n";
  for (const auto& g : grid) {
    os << format_decimal(g.w.re(), 17) << ',' << format_decimal(g.w.im(), 17) << ',' << (g.ok ? 1 : 0) << ','
       << g.lambda << ',' << g.log10_residual << ',' << (g.in_strip ? 1 : 0) << ',' << g.error << '\n';
  }
  return os.str();
}

BigComplex second_order_approx(const BigComplex& w) {
  const PrecisionContext& ctx = w.ctx();
  std::vector<BigReal> I = expansion_coeffs(2, ctx);
  BigComplex q = w * w + w * I[1] + BigComplex(I[0]);
  if (q.is_zero()) throw SingularityError("w is a root of the second-order expansion");
  const bool neg = negative_region(w);
  BigComplex r = (w + BigComplex(half(ctx))) * inv(sqrt(q));
  return neg ? -r : r;
}

// ------------------------------------------------------------ Z_j and j_1

namespace {

// log[zeta^{-1}(w)/(w + 1/2)] about w = 0 on the branch through s = -2.
PowerSeries log_inverse_ratio(int order, const PrecisionContext& ctx) {
  return cached_series("loginvzeta@0", order, ctx, [&](int n) {
    PowerSeries f = zeta_series(BigComplex(-2L, ctx), n, ctx);
    f[0] = BigComplex(ctx);  // trivial zero
    PowerSeries g = revert(f);
    g[0] = BigComplex(-2L, ctx);
    PowerSeries h = PowerSeries::linear(BigComplex(half(ctx)), BigComplex(1L, ctx), n, BigComplex(ctx), ctx);
    // divide out the negative sign so the principal log stays real
    return log(g * BigComplex(-1L, ctx)) - log(h);
  });
}

}  // namespace

GenZetaTable zj_table(int m_max, const PrecisionContext& ctx) {
  if (m_max < 1) throw DomainError("m_max must be at least 1");
  const PrecisionContext wc = ctx.widened(m_max / 2 + 10);
  PowerSeries l = log_inverse_ratio(m_max, wc);
  GenZetaTable t{FunctionSpec::user_series({}, Parity::none, "zeta^{-1}(w)/(w+1/2)"), ZetaMeaning::singularities_mean,
                 ctx, {}};
  for (int m = 1; m <= m_max; ++m) t.values.emplace(m, BigComplex((l[m] * static_cast<long>(m)).re().to(ctx)));
  return t;
}

BigReal j1_from_table(const AttractorTable& t) {
  // m Z_j(m) with Z_j the mean of j_n^{-m} over the table
  BigComplex z(t.ctx);
  for (const auto& j : t.roots) z += inv(pow(j, static_cast<long>(t.m)));
  if (z.re().sign() <= 0) throw DominanceViolated("m Z_j(m) is not positive");
  return exp(-log(z.re()) / static_cast<long>(t.m));
}

BigReal j1_from_inverse(int m, const PrecisionContext& ctx) { return j1_from_table(attractor(m, ctx)); }

DerivativeResult inverse_derivative(const BigComplex& w_in, const AttractorTable& t) {
  const PrecisionContext& ctx = t.ctx;
  const BigComplex w = w_in.to(ctx);
  BranchResult b = izeta_product(w, t);
  PowerSeries z = zeta_series(b.s, 1, ctx);
  if (abs(z[1]) < ten_pow(-ctx.digits() / 2, ctx)) {
    throw SingularityError("zeta' vanishes at zeta^{-1}(w); the inverse has a branch point here");
  }
  DerivativeResult r;
  r.value = inv(z[1]);
  BigComplex sum(ctx);
  for (const auto& j : t.roots) sum += inv(w - j);
  r.product_route = b.s * (inv(w + BigComplex(half(ctx))) - sum / static_cast<long>(t.m));
  r.relative_gap = abs(r.value - r.product_route) / abs(r.value);
  return r;
}

BigReal gamma_from_inverse(const BigReal& x, const AttractorTable& t) {
  const PrecisionContext& ctx = t.ctx;
  const BigComplex w(x.to(ctx));
  // Principal branch: lambda = 0, real and positive for real x > 1.
  BigComplex s = (w + BigComplex(half(ctx))) * nth_root(inverse_product(w, t), t.m, 0);
  const BigReal xs = x.to(ctx);
  return (s.re() - BigReal(1, ctx) - BigReal(1, ctx) / xs) * xs * xs;
}

std::vector<IdentityCheck> identity_suite(const AttractorTable& t) {
  const PrecisionContext& ctx = t.ctx;
  const long m = t.m;
  const bool documented = t.m >= 50;
  std::vector<IdentityCheck> out;
  auto add = [&](std::string name, BigReal value, BigReal target, int required) {
    IdentityCheck c;
    c.name = std::move(name);
    c.digits = std::max(0, matching_decimals(value, target, ctx.digits()));
    c.required = documented ? required : 0;
    c.pass = c.digits >= c.required;
    c.value = std::move(value);
    c.target = std::move(target);
    out.push_back(std::move(c));
  };
  BigComplex sum(ctx), sum_inv(ctx), sum_log(ctx), prod_half(1L, ctx);
  for (const auto& j : t.roots) {
    sum += j;
    sum_inv += inv(j);
    sum_log += log(j);
    prod_half *= BigComplex(1L, ctx) + inv(j * 2L);
  }
  BigComplex var(ctx);
  const BigComplex h(half(ctx));
  for (const auto& j : t.roots) var += (j - h) * (j - h);
  const BigReal pi_v = pi(ctx);
  const BigReal z3 = zeta(BigReal(3, ctx));
  const BigReal log_sqrt_2pi = log(pi_v * 2L) / 2L;

  add("mean j_n = 1/2", sum.re() / m, half(ctx), 60);
  add("variance of j_n", var.re() / m, parse_decimal("0.15443132980306572121", ctx), 15);
  add("mean log j_n = -2 log 2", sum_log.re() / m, -ln2(ctx) * 2L, 16);
  add("prod j_n^{-1/m} = 4", exp(-sum_log.re() / m), BigReal(4, ctx), 15);
  const BigReal recip_target = (pi_v * pi_v / z3 - BigReal(1, ctx)) * 2L;
  add("mean 1/j_n = 2(pi^2/zeta(3) - 1)", sum_inv.re() / m, recip_target, 13);
  add("zeta(3) from mean 1/j_n", pi_v * pi_v / (sum_inv.re() / (2 * m) + BigReal(1, ctx)), z3, 12);
  add("prod (1 + 1/(2 j_n))^{1/m} = 4 log sqrt(2 pi)", exp(log(abs(prod_half)) / m), log_sqrt_2pi * 4L, 16);
  {
    BigReal p(ctx), x(1, ctx);
    for (const auto& c : t.source_poly) {
      p += c * x;
      x *= -half(ctx);
    }
    add("(sum I_n (-1/2)^n)^{1/m} = log sqrt(2 pi)", exp(log(abs(p)) / m), log_sqrt_2pi, 16);
  }
  const BigReal x = ten_pow(20, ctx);
  const BigReal g = gamma_from_inverse(x, t);
  add("gamma from inverse at 10^20", g, euler_gamma(ctx), 19);
  // 1 + 2 + ... + k - k^2 zeta^{-1}(k)/2 -> -gamma/2
  add("sum of naturals remainder -> -gamma/2", -g / 2L, -euler_gamma(ctx) / 2L, 19);
  add("j_1 of table vs zeta(-e)", t.roots.front().re(), zeta(-exp(BigReal(1, ctx))), 2);
  add("j_1 limit vs zeta(-e)", j1_limit(ctx), zeta(-exp(BigReal(1, ctx))), 7);
  return out;
}

}  // namespace zetainv
