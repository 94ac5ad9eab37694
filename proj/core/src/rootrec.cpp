#include "zetainv/rootrec.hpp"

#include <array>
#include <cmath>

#include "zetainv/polyroots.hpp"

namespace zetainv {

namespace {

BigReal quarter(const PrecisionContext& ctx) { return BigReal(1, ctx) / 4L; }

// x^{-1/m} for x > 0
BigReal inv_root(const BigReal& x, int m) { return exp(-log(x) / static_cast<long>(m)); }

[[noreturn]] void violated(const std::string& why, const BigComplex& cand) {
  throw DominanceViolated(why + "; raise m, add corrections or supply more known roots",
                          format_decimal(cand.re(), 30), format_decimal(cand.im(), 30));
}

// Radicand already halved for symmetric tables.
BigComplex finish(const BigComplex& r, int m, RootTransform transform, bool expect_real) {
  const PrecisionContext& ctx = r.ctx();
  const BigReal tol = ten_pow(-ctx.digits() / 2, ctx);
  if (r.is_zero()) throw NoRoot("Z(m) vanishes; no root to extract");
  const bool real_pos = r.is_real(tol) && r.re().sign() > 0;
  if (!real_pos) {
    BigComplex c = inv(nth_root(r, m, 0));
    if (transform == RootTransform::negate) c = -c;
    if (transform == RootTransform::modsq_t) c = sqrt(c - BigComplex(quarter(ctx)));
    if (expect_real) violated("radicand is not a positive real number", c);
    return c;
  }
  BigReal v = inv_root(r.re(), m);
  switch (transform) {
    case RootTransform::plain:
    case RootTransform::symmetric:
      return BigComplex(v);
    case RootTransform::negate:
      return BigComplex(-v);
    case RootTransform::modsq_t: {
      BigReal x = v - quarter(ctx);
      if (x.sign() < 0) violated("Z^{-1/m} - 1/4 is negative", sqrt(BigComplex(x)));
      return BigComplex(sqrt(x));
    }
  }
  throw UsageError("unknown root transform");
}

// Contribution of one known root to the (halved) radicand.
BigComplex contribution(const BigComplex& root, int m, RootTransform transform) {
  if (transform == RootTransform::modsq_t) {
    BigComplex q = root * root + BigComplex(quarter(root.ctx()));
    return inv(pow(q, static_cast<long>(m)));
  }
  return inv(pow(root, static_cast<long>(m)));
}

BigComplex radicand(const GenZetaTable& z, const std::vector<BigComplex>& known, int m, RootTransform transform,
                    const BigComplex* extra) {
  BigComplex r = z.at(m);
  if (transform == RootTransform::symmetric) r /= 2L;
  for (const auto& k : known) r -= contribution(k.to(r.ctx()), m, transform);
  if (extra) r -= extra->to(r.ctx());
  return r;
}

bool snap_if_integer(BigComplex& root, const BigReal& err) {
  const PrecisionContext& ctx = root.ctx();
  if (!root.im().is_zero()) return false;
  BigReal n = round(root.re());
  BigReal d = abs(root.re() - n);
  BigReal tol = max(err * 10L, ten_pow(-ctx.digits() + 5, ctx));
  if (d <= tol) {
    root = BigComplex(n);
    return true;
  }
  return false;
}

// 2 Re((1/2 + i t)^{-m}) for each t
BigComplex pair_corrections(const std::vector<BigReal>& ts, int m, const PrecisionContext& ctx) {
  BigComplex sum(ctx);
  for (const auto& t : ts) {
    BigComplex rho(quarter(ctx) * 2L, t.to(ctx));
    sum += BigComplex(inv(pow(rho, static_cast<long>(m))).re() * 2L);
  }
  return sum;
}

}  // namespace

BigComplex root_from_radicand(const BigComplex& r, int m, RootTransform transform) {
  BigComplex h = r;
  if (transform == RootTransform::symmetric) h /= 2L;
  return finish(h, m, transform, true);
}

BigComplex extract_principal(const GenZetaTable& z, int m, RootTransform transform) {
  return finish(radicand(z, {}, m, transform, nullptr), m, transform, true);
}

BigComplex extract_next(const GenZetaTable& z, const std::vector<BigComplex>& known, int m, RootTransform transform,
                        const BigComplex* extra_deflation) {
  return finish(radicand(z, known, m, transform, extra_deflation), m, transform, true);
}

namespace {

// Extract `count` roots from one table. Each root's error is estimated from
// the order m-1 (or m-2 for even tables) value. `deflate_with` supplies the
// value used when removing root k (defaults to the extracted one, snapped).
RootList extract_sequence(const GenZetaTable& z, int count, int m, int step, RootTransform transform,
                          const std::function<std::optional<BigComplex>(int)>& deflate_with) {
  RootList out;
  std::vector<BigComplex> known;
  for (int k = 0; k < count; ++k) {
    BigComplex r = extract_next(z, known, m, transform);
    BigReal err(r.ctx());
    try {
      BigComplex r2 = extract_next(z, known, m - step, transform);
      err = abs(r - r2);
    } catch (const DominanceViolated&) {
      err = abs(r);
    } catch (const NoRoot&) {
      err = abs(r);
    }
    std::optional<BigComplex> ref = deflate_with ? deflate_with(k) : std::nullopt;
    BigComplex used = r;
    bool snapped = false;
    if (ref) {
      used = *ref;
    } else {
      snapped = snap_if_integer(used, err);
    }
    out.roots.push_back(r);
    out.errors.push_back(err);
    out.m_used.push_back(m);
    out.snapped.push_back(snapped);
    known.push_back(used);
  }
  return out;
}

}  // namespace

RootList sinc_zeros(int count, int m, const PrecisionContext& ctx) {
  if (count < 1 || m < 2) throw DomainError("sinc_zeros needs count >= 1 and m >= 2");
  GenZetaTable z = log_derivative_zeta(FunctionSpec::sinc(), 2 * m, ctx);
  return extract_sequence(z, count, 2 * m, 2, RootTransform::symmetric, {});
}

RootList bessel_zeros(const std::string& nu, int count, int m, const PrecisionContext& ctx) {
  if (count < 1 || m < 2) throw DomainError("bessel_zeros needs count >= 1 and m >= 2");
  GenZetaTable z = log_derivative_zeta(FunctionSpec::bessel_j(nu), 2 * m, ctx);
  const PrecisionContext ref_ctx = ctx.widened(ctx.working_digits());
  return extract_sequence(z, count, 2 * m, 2, RootTransform::plain, [&](int k) -> std::optional<BigComplex> {
    return BigComplex(reference_bessel_zero(nu, k + 1, ref_ctx).to(ctx));
  });
}

BigReal trivial_zero(int n, int m, const std::vector<BigReal>& corrections, const PrecisionContext& ctx) {
  if (n < 1 || m < 1) throw DomainError("trivial_zero needs n >= 1 and m >= 1");
  const int order = 2 * m;
  GenZetaTable z = log_derivative_zeta(FunctionSpec::riemann_zeta_shifted(), order, ctx);
  std::vector<BigComplex> known;
  for (int k = 1; k < n; ++k) known.emplace_back(BigReal(-2L * k, ctx));
  BigComplex extra = pair_corrections(corrections, order, ctx);
  return extract_next(z, known, order, RootTransform::negate, &extra).re();
}

NontrivialResult nontrivial_zero(int n, int m, NontrivialMethod method, const std::vector<BigReal>& known,
                                 const PrecisionContext& ctx) {
  if (n < 1 || m < 2) throw DomainError("nontrivial_zero needs n >= 1 and m >= 2");
  if (static_cast<int>(known.size()) < n - 1) throw UsageError("t_1..t_{n-1} must be supplied for t_n");
  std::vector<BigComplex> prev;
  for (int k = 0; k < n - 1; ++k) prev.emplace_back(known[static_cast<size_t>(k)].to(ctx));

  auto one = [&](int mm) -> BigReal {
    GenZetaTable t{FunctionSpec::xi(), ZetaMeaning::modulus_squared, ctx, {}};
    switch (method) {
      case NontrivialMethod::modsq_asymptotic:
        t.values.emplace(mm, BigComplex(z_modsq_asymptotic(mm, ctx)));
        return extract_next(t, prev, mm, RootTransform::modsq_t).re();
      case NontrivialMethod::z1_xi: {
        GenZetaTable x = log_derivative_zeta(FunctionSpec::big_xi_critical_line(), 2 * mm, ctx);
        return extract_next(x, prev, 2 * mm, RootTransform::plain).re();
      }
      case NontrivialMethod::z1_hurwitz:
        t.meaning = ZetaMeaning::imaginary_parts;
        t.values.emplace(2 * mm, BigComplex(z1_hurwitz(2 * mm, ctx)));
        return extract_next(t, prev, 2 * mm, RootTransform::plain).re();
    }
    throw UsageError("unknown method");
  };
  // The xi jet of the larger order is generated first so the cache serves both.
  BigReal next = one(m + 1);
  NontrivialResult r{one(m), 0};
  r.stable_digits = matching_decimals(r.t, next, ctx.digits());
  if (r.stable_digits < 0) r.stable_digits = 0;
  return r;
}

BigReal real_part_check(int m, const PrecisionContext& ctx) {
  if (m < 2) throw DomainError("real_part_check needs m >= 2");
  BigReal a = z_modsq_asymptotic(m, ctx);
  BigReal b = z1_voros(2 * m, ctx);
  if (a.sign() <= 0 || b.sign() <= 0) throw DominanceViolated("non-positive series value in real-part check");
  BigReal x = inv_root(a, m) - inv_root(b, m);
  if (x.sign() < 0) return -sqrt(-x);
  return sqrt(x);
}

RootList solve_polynomial(const std::vector<std::string>& coeffs, int m, const PrecisionContext& ctx) {
  int degree = static_cast<int>(coeffs.size()) - 1;
  while (degree > 0 && parse_decimal(coeffs[static_cast<size_t>(degree)], ctx).is_zero()) --degree;
  if (degree < 1) throw DomainError("polynomial must have degree >= 1");
  if (parse_decimal(coeffs[0], ctx).is_zero()) {
    throw ZeroConstantTerm("polynomial vanishes at 0; divide out the root at the origin first");
  }
  if (m < 2) throw DomainError("solve_polynomial needs m >= 2");
  GenZetaTable z = log_derivative_zeta(FunctionSpec::polynomial(coeffs), m, ctx);
  RootList out = extract_sequence(z, degree, m, 1, RootTransform::plain, {});
  // Complex or clustered roots can still give a positive radicand; the
  // candidate is then no root of p.
  std::vector<BigComplex> c;
  for (int k = 0; k <= degree; ++k) c.emplace_back(parse_decimal(coeffs[static_cast<size_t>(k)], ctx));
  for (size_t i = 0; i < out.size(); ++i) {
    const auto [p, dp] = horner(c, out.roots[i]);
    const BigReal slack = abs(dp) * (out.errors[i] * 10L + ten_pow(-ctx.digits() / 2, ctx));
    if (abs(p) > slack || out.errors[i] * 2L >= abs(out.roots[i])) {
      throw DominanceViolated("extracted value is not a root; roots are complex or clustered",
                              format_decimal(out.roots[i].re(), 20), format_decimal(out.roots[i].im(), 20));
    }
  }
  return out;
}

// ------------------------------------------------------------------ inverses

BigReal default_gamma_center(const BigComplex& w, const PrecisionContext& ctx) {
  // Start a little below the increasing-branch solution so it is the nearest
  // root and lies to the right of the center. Coarse double estimate only.
  double x = 2.0;
  const double target = std::log(std::max(1.0001, std::hypot(w.re().to_double(), w.im().to_double())));
  for (int i = 0; i < 200 && std::lgamma(x) < target; ++i) x += 0.25;
  return BigReal::from_double(std::max(1.5, x - 0.75), ctx);
}

BigComplex invert_function(const InverseRequest& req, const PrecisionContext& ctx) {
  if (req.m < 2) throw DomainError("invert_function needs m >= 2");
  const int m = req.m;
  const BigComplex w = req.w.to(ctx);
  BigReal c(ctx);
  bool even = false;
  PowerSeries f = PowerSeries::constant(BigComplex(ctx), m, BigComplex(ctx), ctx);
  switch (req.kind) {
    case InverseKind::gamma: {
      c = req.center.empty() ? default_gamma_center(w, ctx) : parse_decimal(req.center, ctx);
      if (c.sign() <= 0) throw DomainError("gamma expansion center must be positive");
      f = gamma_series(c, m, ctx).recentred(BigComplex(ctx));
      break;
    }
    case InverseKind::cos: {
      std::vector<BigComplex> v(static_cast<size_t>(m) + 1, BigComplex(ctx));
      BigReal t(1, ctx);
      for (int k = 0; k <= m; k += 2) {
        v[static_cast<size_t>(k)] = BigComplex(t);
        t /= -static_cast<long>((k + 1) * (k + 2));
      }
      f = PowerSeries(BigComplex(ctx), std::move(v), ctx);
      even = true;
      break;
    }
    case InverseKind::lambertw: {
      // s e^s = sum s^k / (k-1)!
      std::vector<BigComplex> v(static_cast<size_t>(m) + 1, BigComplex(ctx));
      BigReal t(1, ctx);
      for (int k = 1; k <= m; ++k) {
        v[static_cast<size_t>(k)] = BigComplex(t);
        t /= static_cast<long>(k);
      }
      f = PowerSeries(BigComplex(ctx), std::move(v), ctx);
      break;
    }
    case InverseKind::besselj: {
      mpq_class q = decimal_to_rational(req.nu);
      if (q.get_den() != 1 || q < 0) throw DomainError("inverse Bessel needs a non-negative integer order");
      const long nu = q.get_num().get_si();
      PowerSeries b = bessel_j_series(BigReal(nu, ctx), m, ctx);
      // J_nu(x) = (x/2)^nu / nu! * b(x)
      BigReal scale(1, ctx);
      for (long k = 1; k <= nu; ++k) scale /= 2L * k;
      std::vector<BigComplex> v(static_cast<size_t>(m) + 1, BigComplex(ctx));
      for (long k = 0; k + nu <= m; ++k) v[static_cast<size_t>(k + nu)] = b[static_cast<int>(k)] * scale;
      f = PowerSeries(BigComplex(ctx), std::move(v), ctx);
      even = nu % 2 == 0;
      break;
    }
    case InverseKind::poly:
      f = poly_series(req.coeffs, m, ctx);
      break;
  }
  f[0] -= w;
  FunctionSpec spec = FunctionSpec::user_series([f](int, const PrecisionContext&) { return f; },
                                                even ? Parity::even : Parity::none, "f(c+x) - w");
  GenZetaTable z = log_derivative_zeta(spec, m, ctx);
  BigComplex r = z.at(m);
  if (even) r /= 2L;
  const BigReal tol = ten_pow(-ctx.digits() / 2, ctx);
  BigComplex root = (r.is_real(tol) && r.re().sign() > 0) ? BigComplex(inv_root(r.re(), m)) : inv(nth_root(r, m, 0));
  return root + BigComplex(c);
}

// -------------------------------------------------------------------- primes

std::vector<long> golomb_primes(int count, long s, const PrecisionContext& ctx) {
  if (count < 1) throw DomainError("count must be at least 1");
  if (s < 2) throw DomainError("s must be at least 2");
  std::vector<long> primes;
  long last = 1;
  for (int n = 0; n < count; ++n) {
    // p_{n+1} < 2 p_n, so 1 - Q/zeta ~ p^{-s} needs about s log10(2p) digits.
    const int extra = static_cast<int>(std::ceil(static_cast<double>(s) * std::log10(2.0 * last + 2.0))) + 20;
    const PrecisionContext w = ctx.widened(extra);
    const BigReal sv(s, w);
    BigReal q(1, w);
    for (long p : primes) q /= BigReal(1, w) - pow(BigReal(p, w), -s);
    BigReal x = BigReal(1, w) - q / zeta(sv);
    if (x.sign() <= 0) throw PrecisionError("1 - Q_n/zeta is not positive; increase digits");
    BigReal p = inv_root(x, static_cast<int>(s));
    BigReal r = round(p);
    if (abs(p - r) > BigReal(1, w) / 4L) {
      throw PrecisionError("p_" + std::to_string(n + 1) + " estimate " + format_decimal(p, 20) +
                           " is not near an integer; increase s");
    }
    last = r.to_long();
    primes.push_back(last);
  }
  return primes;
}

// ------------------------------------------------------------ reference zeros

namespace {

constexpr std::array<const char*, 10> kZetaSeeds = {
    "14.134725141734693790", "21.022039638771554993", "25.010857580145688763", "30.424876125859513210",
    "32.935061587739189691", "37.586178158825671257", "40.918719012147495187", "43.327073280914999519",
    "48.005150881167159728", "49.773832477672302182"};

// Precision ladder for Newton: double the digits each step.
std::vector<int> ladder(int from, int to) {
  std::vector<int> d;
  for (int x = std::min(from, to); ; x = std::min(2 * x, to)) {
    d.push_back(x);
    if (x >= to) break;
  }
  d.push_back(to);  // one confirming step at full precision
  return d;
}

}  // namespace

BigReal reference_zeta_zero(int n, const PrecisionContext& ctx) {
  if (n < 1 || n > static_cast<int>(kZetaSeeds.size())) {
    throw DomainError("reference zeta zeros are seeded for n = 1..10");
  }
  const int target = ctx.working_digits() + 10;
  PrecisionContext c0(std::max(kMinDigits, 40));
  BigComplex s(BigReal(1, c0) / 2L, parse_decimal(kZetaSeeds[static_cast<size_t>(n - 1)], c0));
  for (int d : ladder(40, target)) {
    const PrecisionContext c(d, 10);
    s = s.to(c);
    PowerSeries z = zeta_series(s, 1, c);
    s -= z[0] / z[1];
  }
  const BigReal dev = abs(s.re() - BigReal(1, s.ctx()) / 2L);
  if (dev > ten_pow(-ctx.digits() / 2, ctx)) throw ConvergenceError("Newton left the critical line");
  return s.im().to(ctx);
}

namespace {

// f(x) = J_nu(x)/x^nu * Gamma(nu+1) 2^nu and f'(x), by the defining series.
std::pair<BigReal, BigReal> bessel_normalised(const BigReal& nu, const BigReal& x) {
  const PrecisionContext& ctx = x.ctx();
  const BigReal y = x * x / 4L;
  BigReal term(1, ctx), f(1, ctx), df(ctx);
  const BigReal eps = ten_pow(-ctx.working_digits() - 5, ctx);
  for (long k = 1;; ++k) {
    term *= -y;
    term /= k;
    term /= (nu + k);
    f += term;
    // d/dx y^k = k y^{k-1} x / 2
    df += term * k * 2L / x;
    if (abs(term) < eps && k > 2) break;
  }
  return {f, df};
}

}  // namespace

BigReal reference_bessel_zero(const std::string& nu_text, int n, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("Bessel zero index must be at least 1");
  const double nu = parse_decimal(nu_text, PrecisionContext(kMinDigits)).to_double();
  if (nu <= -1) throw DomainError("Bessel order must exceed -1");
  const double mu = 4 * nu * nu;
  const double b = (n + nu / 2 - 0.25) * M_PI;
  double x0 = b - (mu - 1) / (8 * b) - 4 * (mu - 1) * (7 * mu - 31) / (3 * std::pow(8 * b, 3));
  // a few double Newton steps on the cheap path before going multiprecision
  const int guard = static_cast<int>(std::ceil(x0 * 0.87)) + 10;
  const int target = ctx.working_digits() + 10;
  PrecisionContext c0(40, guard);
  BigReal x = BigReal::from_double(x0, c0);
  for (int i = 0; i < 60; ++i) {
    BigReal v = parse_decimal(nu_text, c0);
    auto [f, df] = bessel_normalised(v, x);
    BigReal dx = f / df;
    x -= dx;
    if (abs(dx) < ten_pow(-30, c0)) break;
  }
  for (int d : ladder(40, target)) {
    const PrecisionContext c(d, guard);
    x = x.to(c);
    auto [f, df] = bessel_normalised(parse_decimal(nu_text, c), x);
    x -= f / df;
  }
  return x.to(ctx);
}

}  // namespace zetainv
