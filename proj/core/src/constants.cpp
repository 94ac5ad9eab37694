#include "zetainv/constants.hpp"

#include <cmath>

namespace zetainv {

namespace {

BigReal factorial(int n, const PrecisionContext& ctx) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return BigReal(f, ctx);
}

// A(k)_{ij} = (-i)^j / j!, rows i = 1..k, columns j = 0..k-1.
std::vector<std::vector<BigReal>> vandermonde(int k, const PrecisionContext& ctx) {
  std::vector<std::vector<BigReal>> a(static_cast<size_t>(k), std::vector<BigReal>(static_cast<size_t>(k), BigReal(ctx)));
  for (int i = 1; i <= k; ++i) {
    BigReal t(1, ctx);
    for (int j = 0; j < k; ++j) {
      a[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] = t;
      t *= -static_cast<long>(i);
      t /= static_cast<long>(j + 1);
    }
  }
  return a;
}

// Gaussian elimination with partial pivoting.
BigReal determinant(std::vector<std::vector<BigReal>> a) {
  const size_t n = a.size();
  const PrecisionContext& ctx = a[0][0].ctx();
  BigReal det(1, ctx);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    for (size_t r = c + 1; r < n; ++r) {
      if (abs(a[r][c]) > abs(a[p][c])) p = r;
    }
    if (a[p][c].is_zero()) return BigReal(ctx);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      BigReal f = a[r][c] / a[c][c];
      if (f.is_zero()) continue;
      for (size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

void check_size(int n, int k) {
  if (k < 4 || k % 4 != 0) throw DomainError("matrix size must be a positive multiple of 4");
  if (n < 0 || n >= k) throw DomainError("index must satisfy 0 <= n < k");
}

// Conditioning of A(k) grows quickly with k; carry 2k extra digits.
PrecisionContext det_context(int k, const PrecisionContext& ctx) { return ctx.widened(2 * k + 10); }

BigReal replaced_column_det(int n, int k, const std::vector<BigReal>& rhs, const PrecisionContext& w) {
  auto a = vandermonde(k, w);
  for (int i = 0; i < k; ++i) a[static_cast<size_t>(i)][static_cast<size_t>(n)] = rhs[static_cast<size_t>(i)];
  return determinant(std::move(a));
}

}  // namespace

std::vector<BigReal> stieltjes_jet(int n_max, const PrecisionContext& ctx) {
  if (n_max < 0) throw DomainError("n_max must be non-negative");
  const PrecisionContext w = ctx.widened(n_max / 2 + 5);
  PowerSeries c = zeta_minus_pole_series(std::max(n_max, 1), w);
  std::vector<BigReal> out;
  for (int n = 0; n <= n_max; ++n) {
    BigReal g = c[n].re() * factorial(n, w);
    if (n % 2 == 1) g = -g;
    out.push_back(g.to(ctx));
  }
  return out;
}

BigReal vandermonde_determinant(int k, const PrecisionContext& ctx) {
  if (k < 1) throw DomainError("matrix size must be positive");
  return determinant(vandermonde(k, det_context(k, ctx))).to(ctx);
}

BigReal stieltjes_determinant(int n, int k, const PrecisionContext& ctx) {
  check_size(n, k);
  const PrecisionContext w = det_context(k, ctx);
  std::vector<BigReal> b;
  for (int i = 1; i <= k; ++i) b.push_back(zeta(BigReal(i + 1, w)) - BigReal(1, w) / static_cast<long>(i));
  return replaced_column_det(n, k, b, w).to(ctx);
}

BigReal eta_determinant(int n, int k, const PrecisionContext& ctx) {
  check_size(n, k);
  const PrecisionContext w = det_context(k, ctx);
  std::vector<BigReal> d;
  for (int i = 1; i <= k; ++i) {
    PowerSeries z = zeta_series(BigComplex(BigReal(i + 1, w)), 1, w);
    d.push_back(-(z[1].re() / z[0].re()) - BigReal(1, w) / static_cast<long>(i));
  }
  // The unknown in column n is (-1)^n n! eta_n.
  BigReal r = replaced_column_det(n, k, d, w) / factorial(n, w);
  if (n % 2 == 1) r = -r;
  return r.to(ctx);
}

std::vector<BigReal> eta_from_stieltjes(const std::vector<BigReal>& g, const PrecisionContext& ctx) {
  std::vector<BigReal> eta;
  for (int n = 0; n < static_cast<int>(g.size()); ++n) {
    BigReal acc = g[static_cast<size_t>(n)] * static_cast<long>(n + 1) / factorial(n, ctx);
    for (int k = 0; k <= n - 1; ++k) {
      BigReal t = eta[static_cast<size_t>(k)] * g[static_cast<size_t>(n - k - 1)] / factorial(n - k - 1, ctx);
      if ((k - 1) % 2 != 0) t = -t;
      acc += t;
    }
    if ((n + 1) % 2 != 0) acc = -acc;
    eta.push_back(acc);
  }
  return eta;
}

std::vector<BigReal> eta_constants(int n_max, EtaMethod method, const PrecisionContext& ctx, int det_size) {
  if (n_max < 0) throw DomainError("n_max must be non-negative");
  switch (method) {
    case EtaMethod::jet: {
      // -zeta'/zeta - 1/(s-1) = -d/ds log((s-1) zeta(s)) about s = 1
      const PrecisionContext w = ctx.widened(n_max / 2 + 5);
      PowerSeries l = log(zeta_pole_cancelled_series(BigComplex(1L, w), n_max + 1, w));
      std::vector<BigReal> out;
      for (int n = 0; n <= n_max; ++n) out.push_back((-l[n + 1].re() * static_cast<long>(n + 1)).to(ctx));
      return out;
    }
    case EtaMethod::coffey: {
      const PrecisionContext w = ctx.widened(n_max + 10);
      std::vector<BigReal> e = eta_from_stieltjes(stieltjes_jet(n_max, w), w);
      for (auto& x : e) x = x.to(ctx);
      return e;
    }
    case EtaMethod::determinant: {
      std::vector<BigReal> out;
      for (int n = 0; n <= n_max; ++n) out.push_back(eta_determinant(n, det_size, ctx));
      return out;
    }
  }
  throw UsageError("unknown eta method");
}

BigReal z_nt_from_eta(int m, const std::vector<BigReal>& etas, const PrecisionContext& ctx) {
  if (m < 1) throw DomainError("Z_nt needs m >= 1");
  if (static_cast<int>(etas.size()) < m) throw UsageError("eta_0..eta_{m-1} required");
  const BigReal one(1, ctx);
  if (m == 1) return one - (etas[0].to(ctx) + log(BigReal(4, ctx) * pi(ctx))) / 2L;
  BigReal r = one - (one - pow(BigReal(2, ctx), static_cast<long>(-m))) * zeta(BigReal(m, ctx));
  const BigReal& e = etas[static_cast<size_t>(m - 1)];
  return m % 2 == 0 ? r + e.to(ctx) : r - e.to(ctx);
}

BigReal t1_expansion_demo(int m, T1Route route, const PrecisionContext& ctx) {
  if (m < 2) throw DomainError("t1 expansion needs m >= 2");
  const PrecisionContext w = ctx.widened(static_cast<int>(std::ceil(m * 2.4)) + 10);
  BigReal modsq(w);
  if (route == T1Route::keiper_li) {
    modsq = z_modsq_keiper_li(m, w);
  } else {
    std::vector<BigReal> etas = route == T1Route::stieltjes ? eta_constants(2 * m - 1, EtaMethod::coffey, w)
                                                            : eta_constants(2 * m - 1, EtaMethod::jet, w);
    BigReal a = z_nt_from_eta(m, etas, w);
    BigReal b = z_nt_from_eta(2 * m, etas, w);
    modsq = (a * a - b) / 2L;
  }
  if (modsq.sign() <= 0) throw DominanceViolated("Z_|nt| estimate is not positive");
  BigReal x = exp(-log(modsq) / static_cast<long>(m)) - BigReal(1, w) / 4L;
  if (x.sign() < 0) throw DominanceViolated("Z_|nt|^{-1/m} - 1/4 is negative");
  return sqrt(x).to(ctx);
}

BigReal eta_von_mangoldt_demo(int n, long k, const PrecisionContext& ctx) {
  if (n < 0 || k < 2) throw DomainError("need n >= 0 and k >= 2");
  // smallest prime factor sieve
  std::vector<int> spf(static_cast<size_t>(k) + 1, 0);
  long double sum = 0, comp = 0;
  for (long l = 2; l <= k; ++l) {
    if (spf[static_cast<size_t>(l)] == 0) {
      for (long q = l; q <= k; q += l) {
        if (spf[static_cast<size_t>(q)] == 0) spf[static_cast<size_t>(q)] = static_cast<int>(l);
      }
    }
    const long p = spf[static_cast<size_t>(l)];
    long r = l;
    while (r % p == 0) r /= p;
    if (r != 1) continue;  // not a prime power
    const long double lg = std::log(static_cast<long double>(l));
    const long double term = std::log(static_cast<long double>(p)) * std::pow(lg, n) / l;
    // Kahan summation
    const long double y = term - comp;
    const long double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  const long double lk = std::log(static_cast<long double>(k));
  long double v = sum - std::pow(lk, n + 1) / (n + 1);
  for (int j = 2; j <= n; ++j) v /= j;
  if (n % 2 == 1) v = -v;
  return BigReal::from_double(static_cast<double>(v), ctx);
}

ConstantsTable constants_table(int k, ConstantsSource source, const PrecisionContext& ctx) {
  if (k < 1) throw DomainError("table size must be at least 1");
  ConstantsTable t;
  t.source = source;
  t.ctx = ctx;
  switch (source) {
    case ConstantsSource::jet:
      t.gammas = stieltjes_jet(k, ctx);
      t.etas = eta_constants(k, EtaMethod::jet, ctx);
      break;
    case ConstantsSource::recurrence:
      t.gammas = stieltjes_jet(k, ctx);
      t.etas = eta_constants(k, EtaMethod::coffey, ctx);
      break;
    case ConstantsSource::determinant: {
      const int size = 4 * ((k + 1 + 3) / 4) + 24;
      for (int n = 0; n <= k; ++n) t.gammas.push_back(stieltjes_determinant(n, size, ctx));
      t.etas = eta_constants(k, EtaMethod::determinant, ctx, size);
      break;
    }
  }
  t.lambdas = keiper_li_all(k, ctx);
  return t;
}

}  // namespace zetainv
