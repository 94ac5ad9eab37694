#include "zetainv/series.hpp"

#include <algorithm>

namespace zetainv {

namespace {

bool same_point(const BigComplex& a, const BigComplex& b) {
  return a.re() == b.re() && a.im() == b.im();
}

void check_compatible(const PowerSeries& a, const PowerSeries& b) {
  if (!same_point(a.center(), b.center())) {
    throw UsageError("power series centred at different points");
  }
  if (!(a.ctx() == b.ctx())) throw UsageError("power series built under different precision contexts");
}

std::vector<BigComplex> zeros(int order, const PrecisionContext& ctx) {
  return std::vector<BigComplex>(static_cast<size_t>(order) + 1, BigComplex(ctx));
}

void check_constant_term(const PowerSeries& a, const char* what) {
  BigReal c0 = abs(a[0]);
  // Low orders only: coefficients of a legitimately small-radius series grow
  // without bound and would swamp a genuine nonzero c0.
  BigReal scale = c0;
  for (int k = 1; k <= std::min(a.order(), 4); ++k) scale = max(scale, abs(a[k]));
  BigReal tol = ten_pow(-a.ctx().digits() / 2, a.ctx()) * scale;
  if (c0.is_zero() || c0 <= tol) {
    throw ZeroConstantTerm(std::string(what) +
                           ": constant term vanishes (uncancelled zero or pole at the expansion centre)");
  }
}

}  // namespace

PowerSeries::PowerSeries(BigComplex center, std::vector<BigComplex> coeffs, const PrecisionContext& ctx)
    : center_(std::move(center)), c_(std::move(coeffs)), ctx_(ctx) {
  if (c_.empty()) throw UsageError("power series needs at least one coefficient");
}

PowerSeries PowerSeries::constant(const BigComplex& c, int order, const BigComplex& center,
                                  const PrecisionContext& ctx) {
  auto v = zeros(order, ctx);
  v[0] = c.to(ctx);
  return PowerSeries(center, std::move(v), ctx);
}

PowerSeries PowerSeries::variable(int order, const BigComplex& center, const PrecisionContext& ctx) {
  auto v = zeros(order, ctx);
  if (order >= 1) v[1] = BigComplex(1, ctx);
  return PowerSeries(center, std::move(v), ctx);
}

PowerSeries PowerSeries::linear(const BigComplex& a, const BigComplex& b, int order,
                                const BigComplex& center, const PrecisionContext& ctx) {
  auto v = zeros(order, ctx);
  v[0] = a.to(ctx);
  if (order >= 1) v[1] = b.to(ctx);
  return PowerSeries(center, std::move(v), ctx);
}

PowerSeries PowerSeries::truncated(int order) const {
  if (order >= this->order()) return *this;
  std::vector<BigComplex> v(c_.begin(), c_.begin() + order + 1);
  return PowerSeries(center_, std::move(v), ctx_);
}

PowerSeries PowerSeries::recentred(const BigComplex& center) const {
  PowerSeries r = *this;
  r.center_ = center;
  return r;
}

PowerSeries PowerSeries::scaled_variable(const BigComplex& a) const {
  PowerSeries r = *this;
  BigComplex p(1, ctx_);
  for (auto& c : r.c_) {
    c *= p;
    p *= a;
  }
  return r;
}

BigComplex PowerSeries::derivative_at(int k) const {
  BigComplex r = (*this)[k];
  BigReal f(1, ctx_);
  for (int i = 2; i <= k; ++i) f *= i;
  return r * f;
}

PowerSeries PowerSeries::derivative() const {
  const int m = std::max(order() - 1, 0);
  auto v = zeros(m, ctx_);
  for (int k = 1; k <= order(); ++k) v[static_cast<size_t>(k - 1)] = c_[static_cast<size_t>(k)] * static_cast<long>(k);
  return PowerSeries(center_, std::move(v), ctx_);
}

BigComplex PowerSeries::evaluate(const BigComplex& x) const {
  BigComplex r = c_.back();
  for (int k = order() - 1; k >= 0; --k) {
    r *= x;
    r += c_[static_cast<size_t>(k)];
  }
  return r;
}

BigReal PowerSeries::max_abs_coeff() const {
  BigReal m(ctx_);
  for (const auto& c : c_) {
    BigReal a = abs(c);
    if (a > m) m = a;
  }
  return m;
}

bool PowerSeries::is_even(const BigReal& tol) const {
  BigReal bound = tol * max_abs_coeff();
  for (size_t k = 1; k < c_.size(); k += 2) {
    if (abs(c_[k]) > bound) return false;
  }
  return true;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  check_compatible(*this, o);
  if (o.order() < order()) c_.resize(static_cast<size_t>(o.order()) + 1);
  for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
  check_compatible(*this, o);
  if (o.order() < order()) c_.resize(static_cast<size_t>(o.order()) + 1);
  for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const BigComplex& a) {
  for (auto& c : c_) c *= a;
  return *this;
}

PowerSeries& PowerSeries::operator*=(const BigReal& a) {
  for (auto& c : c_) c *= a;
  return *this;
}

PowerSeries& PowerSeries::operator/=(const BigComplex& a) {
  BigComplex ia = inv(a);
  for (auto& c : c_) c *= ia;
  return *this;
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  check_compatible(a, b);
  const int m = std::min(a.order(), b.order());
  const auto& ctx = a.ctx();
  auto v = zeros(m, ctx);
  BigReal t1(ctx), t2(ctx);
  for (int k = 0; k <= m; ++k) {
    for (int j = 0; j <= k; ++j) fma_into(v[static_cast<size_t>(k)], a[j], b[k - j], t1, t2);
  }
  return PowerSeries(a.center(), std::move(v), ctx);
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
  check_compatible(a, b);
  check_constant_term(b, "series division");
  const int m = std::min(a.order(), b.order());
  const auto& ctx = a.ctx();
  BigComplex ib0 = inv(b[0]);
  auto q = zeros(m, ctx);
  BigReal t1(ctx), t2(ctx);
  BigComplex acc(ctx);
  for (int k = 0; k <= m; ++k) {
    acc = -a[k];
    for (int j = 1; j <= k; ++j) fma_into(acc, b[j], q[static_cast<size_t>(k - j)], t1, t2);
    q[static_cast<size_t>(k)] = -(acc * ib0);
  }
  return PowerSeries(a.center(), std::move(q), ctx);
}

PowerSeries reciprocal(const PowerSeries& a) {
  return PowerSeries::constant(BigComplex(1, a.ctx()), a.order(), a.center(), a.ctx()) / a;
}

PowerSeries log(const PowerSeries& a) {
  check_constant_term(a, "series log");
  const int m = a.order();
  const auto& ctx = a.ctx();
  BigComplex ia0 = inv(a[0]);
  auto l = zeros(m, ctx);
  l[0] = log(a[0]);
  // k l_k a_0 = k a_k - sum_{j=1}^{k-1} j l_j a_{k-j}
  std::vector<BigComplex> jl(static_cast<size_t>(m) + 1, BigComplex(ctx));
  BigReal t1(ctx), t2(ctx);
  BigComplex acc(ctx);
  for (int k = 1; k <= m; ++k) {
    acc = a[k] * static_cast<long>(k);
    BigComplex s(ctx);
    for (int j = 1; j < k; ++j) fma_into(s, jl[static_cast<size_t>(j)], a[k - j], t1, t2);
    acc -= s;
    acc *= ia0;
    jl[static_cast<size_t>(k)] = acc;
    l[static_cast<size_t>(k)] = acc / static_cast<long>(k);
  }
  return PowerSeries(a.center(), std::move(l), ctx);
}

PowerSeries exp(const PowerSeries& a) {
  const int m = a.order();
  const auto& ctx = a.ctx();
  auto e = zeros(m, ctx);
  e[0] = exp(a[0]);
  std::vector<BigComplex> ja(static_cast<size_t>(m) + 1, BigComplex(ctx));
  for (int j = 1; j <= m; ++j) ja[static_cast<size_t>(j)] = a[j] * static_cast<long>(j);
  BigReal t1(ctx), t2(ctx);
  for (int k = 1; k <= m; ++k) {
    BigComplex s(ctx);
    for (int j = 1; j <= k; ++j) fma_into(s, ja[static_cast<size_t>(j)], e[static_cast<size_t>(k - j)], t1, t2);
    e[static_cast<size_t>(k)] = s / static_cast<long>(k);
  }
  return PowerSeries(a.center(), std::move(e), ctx);
}

PowerSeries pow(const PowerSeries& a, const BigComplex& p) {
  check_constant_term(a, "series power");
  const int m = a.order();
  const auto& ctx = a.ctx();
  auto b = zeros(m, ctx);
  b[0] = pow(a[0], p);
  BigComplex ia0 = inv(a[0]);
  BigComplex p1 = p + BigComplex(1, ctx);
  std::vector<BigComplex> ja(static_cast<size_t>(m) + 1, BigComplex(ctx));
  for (int j = 1; j <= m; ++j) ja[static_cast<size_t>(j)] = a[j] * static_cast<long>(j);
  BigReal t1(ctx), t2(ctx);
  // Miller: k a_0 b_k = sum_{j=1}^k ((p+1) j - k) a_j b_{k-j}
  for (int k = 1; k <= m; ++k) {
    BigComplex s1(ctx), s2(ctx);
    for (int j = 1; j <= k; ++j) {
      fma_into(s1, ja[static_cast<size_t>(j)], b[static_cast<size_t>(k - j)], t1, t2);
      fma_into(s2, a[j], b[static_cast<size_t>(k - j)], t1, t2);
    }
    BigComplex v = p1 * s1 - s2 * static_cast<long>(k);
    b[static_cast<size_t>(k)] = v * ia0 / static_cast<long>(k);
  }
  return PowerSeries(a.center(), std::move(b), ctx);
}

PowerSeries compose(const PowerSeries& f, const PowerSeries& g) {
  const int m = std::min(f.order(), g.order());
  const auto& ctx = f.ctx();
  PowerSeries gg = g.truncated(m);
  PowerSeries r = PowerSeries::constant(f[m], m, g.center(), ctx);
  for (int k = m - 1; k >= 0; --k) {
    r = r * gg;
    r[0] += f[k];
  }
  return r;
}

PowerSeries revert(const PowerSeries& f) {
  const int m = f.order();
  const auto& ctx = f.ctx();
  if (m < 1) throw DomainError("series reversion needs order >= 1");
  BigReal tol = ten_pow(-ctx.digits() / 2, ctx) * f.max_abs_coeff();
  if (abs(f[0]) > tol) throw DomainError("series reversion needs a vanishing constant term");
  if (abs(f[1]) <= tol) throw SingularityError("series reversion needs a nonzero linear term");
  const BigComplex zero(ctx);
  PowerSeries fz = f;
  fz[0] = BigComplex(ctx);
  PowerSeries w = PowerSeries::variable(m, zero, ctx);
  PowerSeries g = w / f[1];
  PowerSeries df = fz.derivative();
  // Newton on series: each step doubles the number of correct terms.
  for (int correct = 2; ; correct *= 2) {
    PowerSeries fg = compose(fz.recentred(zero), g);
    PowerSeries dfg = compose(df.recentred(zero), g.truncated(m));
    // df has order m-1; pad to m for the division
    if (dfg.order() < m) {
      std::vector<BigComplex> v = dfg.coeffs();
      v.resize(static_cast<size_t>(m) + 1, BigComplex(ctx));
      dfg = PowerSeries(zero, std::move(v), ctx);
    }
    g -= (fg - w) / dfg;
    if (correct > m) break;
  }
  return g;
}

}  // namespace zetainv
