#include "zetainv/logderiv.hpp"

#include <cmath>

namespace zetainv {

namespace {

ZetaMeaning meaning_of(SpecKind k) {
  switch (k) {
    case SpecKind::xi: return ZetaMeaning::nontrivial_conjugate_pairs;
    case SpecKind::big_xi_critical_line: return ZetaMeaning::imaginary_parts;
    default: return ZetaMeaning::zeros_minus_poles;
  }
}

PowerSeries log_of_spec(const FunctionSpec& spec, int order, const PrecisionContext& ctx) {
  auto make = [&](int n) {
    PowerSeries f = spec.generate(n, ctx);
    if (spec.parity == Parity::even && !f.is_even(ten_pow(-ctx.digits() + 10, ctx))) {
      throw DomainError("spec " + spec.name() + " is declared even but has odd Taylor coefficients");
    }
    return log(f);
  };
  const std::string key = spec.key();
  if (key.empty()) return make(order);
  return cached_series("log:" + key, order, ctx, make);
}

// log zeta about a real point, cached.
PowerSeries log_zeta_at(const BigReal& center, int order, const PrecisionContext& ctx) {
  return cached_series("logzeta@" + center.str(40), order, ctx, [&](int n) {
    return log(zeta_series(BigComplex(center.to(ctx)), n, ctx));
  });
}

BigReal binom(long n, long k, const PrecisionContext& ctx) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return BigReal(b, ctx);
}

}  // namespace

const BigComplex& GenZetaTable::at(int m) const {
  auto it = values.find(m);
  if (it == values.end()) throw UsageError("Z(" + std::to_string(m) + ") not in table");
  return it->second;
}

GenZetaTable log_derivative_zeta(const FunctionSpec& spec, int m_max, const PrecisionContext& ctx) {
  if (m_max < 1) throw DomainError("m_max must be at least 1");
  PowerSeries l = log_of_spec(spec, m_max, ctx);
  GenZetaTable t{spec, meaning_of(spec.kind), ctx, {}};
  for (int m = 1; m <= m_max; ++m) {
    BigComplex z = l[m] * static_cast<long>(-m);
    if (spec.positive_zeros_only) z /= 2L;
    t.values.emplace(m, std::move(z));
  }
  return t;
}

BigReal z_nt_closed_form(int m, const PrecisionContext& ctx) {
  if (m < 2) throw DomainError("closed form for Z_nt needs m >= 2");
  // Result is about 14.13^{-m}; the O(1) terms cancel down to it.
  const PrecisionContext w = ctx.widened(static_cast<int>(std::ceil(m * 1.16)) + 10);
  PowerSeries l = log_zeta_at(BigReal(w), m, w);
  BigReal zm = zeta(BigReal(m, w));
  BigReal two_m = pow(BigReal(2, w), static_cast<long>(-m));
  BigReal term = two_m * zm;
  if (m % 2 == 0) term = -term;
  BigReal r = BigReal(1, w) + term - l[m].re() * static_cast<long>(m);
  return r.to(ctx);
}

BigReal z_nt(int m, const PrecisionContext& ctx) {
  if (m < 1) throw DomainError("Z_nt needs m >= 1");
  if (m >= 2) return z_nt_closed_form(m, ctx);
  const PrecisionContext w = ctx.widened(5);
  PowerSeries x = xi_series(1, w);
  return (-(x[1] / x[0])).re().to(ctx);
}

BigReal z_modsq_asymptotic(int m, const PrecisionContext& ctx) {
  if (m < 1) throw DomainError("Z_|nt| needs m >= 1");
  const PrecisionContext w = ctx.widened(static_cast<int>(std::ceil(m * 1.2)) + 10);
  BigReal a = z_nt(m, w);
  BigReal b = z_nt(2 * m, w);
  return ((a * a - b) / 2L).to(ctx);
}

BigReal z_modsq_bologna(int m, const PrecisionContext& ctx) {
  if (m < 2) throw DomainError("Bologna formula needs m > 1");
  const PrecisionContext w = ctx.widened(static_cast<int>(std::ceil(m * 2.9)) + 10);
  BigReal sum(w);
  for (int n = 1; n <= m; ++n) sum += binom(2 * m - n - 1, m - 1, w) * z_nt(n, w);
  return sum.to(ctx);
}

std::vector<BigReal> keiper_li_all(int n_max, const PrecisionContext& ctx) {
  if (n_max < 1) throw DomainError("Keiper-Li index must be at least 1");
  const PrecisionContext w = ctx.widened(static_cast<int>(std::ceil(n_max * 0.35)) + 10);
  // log xi(1 + x) = log xi(-x) by the functional equation.
  PowerSeries L = cached_series("logxi@0", n_max, w, [&](int n) { return log(xi_series(n, w)); })
                      .scaled_variable(BigComplex(-1, w));
  std::vector<BigReal> out(static_cast<size_t>(n_max) + 1, BigReal(ctx));
  for (int n = 1; n <= n_max; ++n) {
    BigReal s(w);
    for (int j = 0; j <= n - 1; ++j) s += binom(n - 1, j, w) * L[n - j].re();
    out[static_cast<size_t>(n)] = (s * static_cast<long>(n)).to(ctx);
  }
  return out;
}

BigReal keiper_li(int n, const PrecisionContext& ctx) { return keiper_li_all(n, ctx)[static_cast<size_t>(n)]; }

BigReal z_modsq_keiper_li(int m, const PrecisionContext& ctx) {
  if (m < 1) throw DomainError("Z_|nt| needs m >= 1");
  const PrecisionContext w = ctx.widened(static_cast<int>(std::ceil(m * 2.9)) + 10);
  std::vector<BigReal> lam = keiper_li_all(m, w);
  BigReal sum(w);
  for (int n = 1; n <= m; ++n) {
    BigReal t = binom(2 * m, m - n, w) * lam[static_cast<size_t>(n)];
    if (n % 2 == 1) sum += t;
    else sum -= t;
  }
  return sum.to(ctx);
}

namespace {

void check_even_order(int m) {
  if (m < 2 || m % 2 != 0) {
    throw DomainError("Z_1(m) closed forms exist for even m >= 2 only; odd values have no known formula");
  }
}

// m log|zeta|^{(m)}(1/2)/m!  =  log|zeta|^{(m)}(1/2)/(m-1)!
BigReal log_abs_zeta_half_term(int m, const PrecisionContext& w) {
  PowerSeries l = log_zeta_at(BigReal(1, w) / 2L, m, w);
  return l[m].re() * static_cast<long>(m);
}

}  // namespace

BigReal z1_voros(int m, const PrecisionContext& ctx) {
  check_even_order(m);
  const PrecisionContext w = ctx.widened(static_cast<int>(std::ceil(m * 0.31 + m * 1.16)) + 10);
  BigReal L = log_abs_zeta_half_term(m, w);
  BigReal p2 = pow(BigReal(2, w), static_cast<long>(m));
  BigReal zm = zeta(BigReal(m, w));
  BigReal bm = dirichlet_beta(BigReal(m, w));
  BigReal r = -L / 2L - ((p2 - 1L) * zm + p2 * bm) / 4L + p2;
  if ((m / 2) % 2 == 1) r = -r;
  return r.to(ctx);
}

BigReal z1_hurwitz(int m, const PrecisionContext& ctx) {
  check_even_order(m);
  const PrecisionContext w = ctx.widened(static_cast<int>(std::ceil(m * 0.31 + m * 1.16)) + 10);
  BigReal L = log_abs_zeta_half_term(m, w);
  BigReal p2 = pow(BigReal(2, w), static_cast<long>(m));
  BigReal hz = hurwitz_zeta(BigReal(m, w), BigReal(5, w) / 4L);
  BigReal r = (p2 - L - hz / p2) / 2L;
  if ((m / 2) % 2 == 1) r = -r;
  return r.to(ctx);
}

BigReal z1_xi(int m, const PrecisionContext& ctx) {
  check_even_order(m);
  return log_derivative_zeta(FunctionSpec::big_xi_critical_line(), m, ctx).at(m).re();
}

mpq_class decimal_to_rational(const std::string& text) {
  std::string s = text;
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.erase(0, 1);
  }
  long exp10 = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string::npos) {
    try {
      exp10 = std::stol(s.substr(epos + 1));
    } catch (const std::exception&) {
      throw ParseError("malformed exponent in '" + text + "'");
    }
    s = s.substr(0, epos);
  }
  auto dot = s.find('.');
  std::string digits = s;
  if (dot != std::string::npos) {
    exp10 -= static_cast<long>(s.size() - dot - 1);
    digits = s.substr(0, dot) + s.substr(dot + 1);
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("malformed decimal literal '" + text + "'");
  }
  mpz_class num(digits, 10), p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
  mpq_class q = exp10 >= 0 ? mpq_class(num * p10) : mpq_class(num, p10);
  q.canonicalize();
  return neg ? mpq_class(-q) : q;
}

SneddonResult sneddon_bessel_z(const std::string& nu_text, int m_max, const PrecisionContext& ctx) {
  const mpq_class nu = decimal_to_rational(nu_text);
  if (nu <= -1) throw DomainError("Bessel order must exceed -1");
  // Z(2m+2) = 1/4 sum_{r=1}^m Z(2r) / ((-4)^{m-r} (m-r+1)! (nu+1)_{m-r+1})
  //          + (-1)^m (1/4)^{m+1} / (m! (m+nu+1) (nu+1)_m)
  const int top = m_max / 2;
  std::vector<mpq_class> z(static_cast<size_t>(top) + 1);   // z[r] = Z(2r)
  std::vector<mpq_class> poch(static_cast<size_t>(top) + 2);  // (nu+1)_k
  std::vector<mpz_class> fact(static_cast<size_t>(top) + 2);
  poch[0] = 1;
  fact[0] = 1;
  for (int k = 1; k <= top + 1; ++k) {
    poch[static_cast<size_t>(k)] = poch[static_cast<size_t>(k - 1)] * (nu + k);
    fact[static_cast<size_t>(k)] = fact[static_cast<size_t>(k - 1)] * k;
  }
  for (int m = 0; m + 1 <= top; ++m) {
    mpq_class acc = 0;
    for (int r = 1; r <= m; ++r) {
      const int d = m - r;
      mpz_class p4;
      mpz_ui_pow_ui(p4.get_mpz_t(), 4, static_cast<unsigned long>(d));
      mpq_class den = mpq_class(p4 * fact[static_cast<size_t>(d + 1)]) * poch[static_cast<size_t>(d + 1)];
      mpq_class t = z[static_cast<size_t>(r)] / den;
      acc += (d % 2 == 0) ? t : mpq_class(-t);
    }
    acc /= 4;
    mpz_class p4;
    mpz_ui_pow_ui(p4.get_mpz_t(), 4, static_cast<unsigned long>(m + 1));
    mpq_class last = mpq_class(1) / (mpq_class(p4 * fact[static_cast<size_t>(m)]) * (nu + m + 1) *
                                     poch[static_cast<size_t>(m)]);
    if (m % 2 == 1) last = -last;
    acc += last;
    acc.canonicalize();
    z[static_cast<size_t>(m + 1)] = acc;
  }
  SneddonResult out;
  out.table.spec = FunctionSpec::bessel_j(nu_text);
  out.table.meaning = ZetaMeaning::zeros_minus_poles;
  out.table.ctx = ctx;
  for (int m = 1; m <= m_max; ++m) {
    mpq_class v = (m % 2 == 0) ? z[static_cast<size_t>(m / 2)] : mpq_class(0);
    out.exact.emplace(m, v);
    out.table.values.emplace(m, BigComplex(BigReal(v, ctx)));
  }
  return out;
}

}  // namespace zetainv
