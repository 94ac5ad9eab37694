#include "zetainv/mpcore.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>

namespace zetainv {

namespace {

constexpr double kLog2Of10 = 3.32192809488736234787;
constexpr mpfr_rnd_t R = MPFR_RNDN;

mpfr_prec_t bits_for(int working_digits) {
  return static_cast<mpfr_prec_t>(std::ceil(working_digits * kLog2Of10)) + 64;
}

const PrecisionContext& wider(const PrecisionContext& a, const PrecisionContext& b) {
  return a.bits() >= b.bits() ? a : b;
}

template <class F>
BigReal unary(const BigReal& x, F f) {
  BigReal r(x.ctx());
  f(r.get(), x.get());
  return r;
}

}  // namespace

PrecisionContext::PrecisionContext(int digits, int guard)
    : digits_(digits), guard_(guard), bits_(0) {
  if (digits < kMinDigits) {
    throw DomainError("precision must be at least " + std::to_string(kMinDigits) + " digits, got " +
                      std::to_string(digits));
  }
  if (guard < 0) throw DomainError("guard digits must be non-negative");
  bits_ = bits_for(digits + guard);
}

// ---------------------------------------------------------------- BigReal

BigReal::BigReal() : BigReal(PrecisionContext{}) {}

BigReal::BigReal(const PrecisionContext& ctx) : ctx_(ctx) {
  mpfr_init2(v_, ctx.bits());
  mpfr_set_zero(v_, 1);
}

BigReal::BigReal(long v, const PrecisionContext& ctx) : ctx_(ctx) {
  mpfr_init2(v_, ctx.bits());
  mpfr_set_si(v_, v, R);
}

BigReal::BigReal(const mpq_class& q, const PrecisionContext& ctx) : ctx_(ctx) {
  mpfr_init2(v_, ctx.bits());
  mpfr_set_q(v_, q.get_mpq_t(), R);
}

BigReal::BigReal(const mpz_class& z, const PrecisionContext& ctx) : ctx_(ctx) {
  mpfr_init2(v_, ctx.bits());
  mpfr_set_z(v_, z.get_mpz_t(), R);
}

BigReal BigReal::from_double(double v, const PrecisionContext& ctx) {
  BigReal r(ctx);
  mpfr_set_d(r.v_, v, R);
  return r;
}

BigReal::BigReal(const BigReal& o) : ctx_(o.ctx_) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, R);
}

BigReal::BigReal(BigReal&& o) noexcept : ctx_(o.ctx_) {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

BigReal& BigReal::operator=(const BigReal& o) {
  if (this != &o) {
    if (mpfr_get_prec(v_) != mpfr_get_prec(o.v_)) mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, R);
    ctx_ = o.ctx_;
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& o) noexcept {
  mpfr_swap(v_, o.v_);
  std::swap(ctx_, o.ctx_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

void BigReal::adopt_precision(const BigReal& o) {
  if (o.ctx_.bits() > ctx_.bits()) {
    mpfr_prec_round(v_, o.ctx_.bits(), R);
    ctx_ = o.ctx_;
  }
}

BigReal BigReal::to(const PrecisionContext& ctx) const {
  BigReal r(ctx);
  mpfr_set(r.v_, v_, R);
  return r;
}

double BigReal::to_double() const { return mpfr_get_d(v_, R); }
long BigReal::to_long() const { return mpfr_get_si(v_, R); }
int BigReal::sign() const { return mpfr_sgn(v_); }
bool BigReal::is_zero() const { return mpfr_zero_p(v_) != 0; }
bool BigReal::is_finite() const { return mpfr_number_p(v_) != 0; }
bool BigReal::is_integer() const { return mpfr_integer_p(v_) != 0; }

double BigReal::log10_abs() const {
  if (mpfr_zero_p(v_)) return -std::numeric_limits<double>::infinity();
  long e = 0;
  double m = mpfr_get_d_2exp(&e, v_, R);
  return std::log10(std::fabs(m)) + static_cast<double>(e) * 0.30102999566398119521;
}

long BigReal::exponent10() const {
  if (mpfr_zero_p(v_)) return std::numeric_limits<long>::min() / 2;
  return static_cast<long>(std::floor(log10_abs()));
}

std::string BigReal::str(int sig) const { return format_decimal(*this, sig > 0 ? sig : ctx_.digits()); }

BigReal BigReal::operator-() const {
  BigReal r(*this);
  mpfr_neg(r.v_, r.v_, R);
  return r;
}

BigReal& BigReal::operator+=(const BigReal& o) {
  adopt_precision(o);
  mpfr_add(v_, v_, o.v_, R);
  return *this;
}
BigReal& BigReal::operator-=(const BigReal& o) {
  adopt_precision(o);
  mpfr_sub(v_, v_, o.v_, R);
  return *this;
}
BigReal& BigReal::operator*=(const BigReal& o) {
  adopt_precision(o);
  mpfr_mul(v_, v_, o.v_, R);
  return *this;
}
BigReal& BigReal::operator/=(const BigReal& o) {
  adopt_precision(o);
  mpfr_div(v_, v_, o.v_, R);
  return *this;
}
BigReal& BigReal::operator*=(long v) {
  mpfr_mul_si(v_, v_, v, R);
  return *this;
}
BigReal& BigReal::operator/=(long v) {
  mpfr_div_si(v_, v_, v, R);
  return *this;
}

BigReal operator+(BigReal a, long b) {
  mpfr_add_si(a.v_, a.v_, b, R);
  return a;
}
BigReal operator-(BigReal a, long b) {
  mpfr_sub_si(a.v_, a.v_, b, R);
  return a;
}

bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

bool operator==(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

std::partial_ordering operator<=>(const BigReal& a, long b) {
  if (mpfr_nan_p(a.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp_si(a.v_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::ostream& operator<<(std::ostream& os, const BigReal& x) { return os << x.str(); }

// ---------------------------------------------------------------- decimal I/O

BigReal parse_decimal(std::string_view text, const PrecisionContext& ctx) {
  std::string s(text);
  // trim
  auto b = s.find_first_not_of(" \t\r\n");
  auto e = s.find_last_not_of(" \t\r\n");
  if (b == std::string::npos) throw ParseError("empty decimal literal");
  s = s.substr(b, e - b + 1);

  size_t i = 0;
  if (s[i] == '+' || s[i] == '-') ++i;
  size_t int_digits = 0, frac_digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++int_digits;
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++frac_digits;
  }
  if (int_digits + frac_digits == 0) throw ParseError("malformed decimal literal '" + s + "'");
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    size_t exp_digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++exp_digits;
    if (exp_digits == 0) throw ParseError("malformed exponent in '" + s + "'");
  }
  if (i != s.size()) throw ParseError("malformed decimal literal '" + s + "'");

  BigReal r(ctx);
  if (mpfr_set_str(r.get(), s.c_str(), 10, R) != 0) {
    throw ParseError("malformed decimal literal '" + s + "'");
  }
  return r;
}

std::string format_decimal(const BigReal& x, int sig) {
  if (sig < 1) sig = 1;
  if (mpfr_nan_p(x.get())) return "nan";
  if (mpfr_inf_p(x.get())) return x.sign() < 0 ? "-inf" : "inf";
  if (x.is_zero()) return "0";
  mpfr_exp_t e = 0;
  char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(sig), x.get(), R);
  std::string digits(raw);
  mpfr_free_str(raw);
  std::string sgn;
  if (digits[0] == '-') {
    sgn = "-";
    digits.erase(0, 1);
  }
  const long n = static_cast<long>(digits.size());
  std::string out;
  if (e <= 0 && e > -25) {
    out = "0." + std::string(static_cast<size_t>(-e), '0') + digits;
  } else if (e > 0 && e <= 50) {
    if (e >= n) {
      out = digits + std::string(static_cast<size_t>(e - n), '0');
    } else {
      out = digits.substr(0, static_cast<size_t>(e)) + "." + digits.substr(static_cast<size_t>(e));
    }
  } else {
    out = digits.substr(0, 1);
    if (n > 1) out += "." + digits.substr(1);
    out += "e" + std::to_string(static_cast<long>(e) - 1);
  }
  return sgn + out;
}

std::string format_fixed(const BigReal& x, int places) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rf", places, x.get());
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

// ---------------------------------------------------------------- functions

BigReal pi(const PrecisionContext& ctx) {
  BigReal r(ctx);
  mpfr_const_pi(r.get(), R);
  return r;
}
BigReal euler_gamma(const PrecisionContext& ctx) {
  BigReal r(ctx);
  mpfr_const_euler(r.get(), R);
  return r;
}
BigReal catalan(const PrecisionContext& ctx) {
  BigReal r(ctx);
  mpfr_const_catalan(r.get(), R);
  return r;
}
BigReal ln2(const PrecisionContext& ctx) {
  BigReal r(ctx);
  mpfr_const_log2(r.get(), R);
  return r;
}

BigReal abs(const BigReal& x) { return unary(x, [](mpfr_ptr r, mpfr_srcptr a) { mpfr_abs(r, a, R); }); }
BigReal sqrt(const BigReal& x) { return unary(x, [](mpfr_ptr r, mpfr_srcptr a) { mpfr_sqrt(r, a, R); }); }
BigReal exp(const BigReal& x) { return unary(x, [](mpfr_ptr r, mpfr_srcptr a) { mpfr_exp(r, a, R); }); }
BigReal log(const BigReal& x) { return unary(x, [](mpfr_ptr r, mpfr_srcptr a) { mpfr_log(r, a, R); }); }
BigReal log10(const BigReal& x) { return unary(x, [](mpfr_ptr r, mpfr_srcptr a) { mpfr_log10(r, a, R); }); }
BigReal sin(const BigReal& x) { return unary(x, [](mpfr_ptr r, mpfr_srcptr a) { mpfr_sin(r, a, R); }); }
BigReal cos(const BigReal& x) { return unary(x, [](mpfr_ptr r, mpfr_srcptr a) { mpfr_cos(r, a, R); }); }
BigReal floor(const BigReal& x) { return unary(x, [](mpfr_ptr r, mpfr_srcptr a) { mpfr_floor(r, a); }); }
BigReal round(const BigReal& x) { return unary(x, [](mpfr_ptr r, mpfr_srcptr a) { mpfr_round(r, a); }); }
BigReal gamma(const BigReal& x) { return unary(x, [](mpfr_ptr r, mpfr_srcptr a) { mpfr_gamma(r, a, R); }); }
BigReal digamma(const BigReal& x) {
  return unary(x, [](mpfr_ptr r, mpfr_srcptr a) { mpfr_digamma(r, a, R); });
}
BigReal lngamma(const BigReal& x) {
  return unary(x, [](mpfr_ptr r, mpfr_srcptr a) {
    int s = 0;
    mpfr_lgamma(r, &s, a, R);
  });
}

BigReal pow(const BigReal& x, const BigReal& y) {
  BigReal r(wider(x.ctx(), y.ctx()));
  mpfr_pow(r.get(), x.get(), y.get(), R);
  return r;
}
BigReal pow(const BigReal& x, long n) {
  BigReal r(x.ctx());
  mpfr_pow_si(r.get(), x.get(), n, R);
  return r;
}
BigReal root(const BigReal& x, unsigned long n) {
  BigReal r(x.ctx());
  mpfr_rootn_ui(r.get(), x.get(), n, R);
  return r;
}
BigReal atan2(const BigReal& y, const BigReal& x) {
  BigReal r(wider(x.ctx(), y.ctx()));
  mpfr_atan2(r.get(), y.get(), x.get(), R);
  return r;
}
BigReal min(const BigReal& a, const BigReal& b) { return a <= b ? a : b; }
BigReal max(const BigReal& a, const BigReal& b) { return a >= b ? a : b; }

BigReal ten_pow(long e, const PrecisionContext& ctx) {
  BigReal r(10, ctx);
  mpfr_pow_si(r.get(), r.get(), e, R);
  return r;
}

int matching_decimals(const BigReal& a, const BigReal& b, int cap) {
  BigReal d = abs(a - b);
  if (d.is_zero()) return cap;
  double l = -d.log10_abs();
  return static_cast<int>(std::clamp(std::floor(l), -1.0e6, static_cast<double>(cap)));
}

int matching_digits(const BigReal& a, const BigReal& b, int cap) {
  if (b.is_zero()) return matching_decimals(a, b, cap);
  BigReal d = abs(a - b);
  if (d.is_zero()) return cap;
  double l = b.log10_abs() - d.log10_abs();
  return static_cast<int>(std::clamp(std::floor(l), -1.0e6, static_cast<double>(cap)));
}

// ---------------------------------------------------------------- BigComplex

bool BigComplex::is_real(const BigReal& tol) const {
  BigReal scale = max(BigReal(1, ctx()), abs(re_));
  return abs(im_) <= tol * scale;
}

std::string BigComplex::str(int sig) const {
  if (im_.is_zero()) return re_.str(sig);
  std::string i = abs(im_).str(sig);
  return re_.str(sig) + (im_.sign() < 0 ? " - " : " + ") + i + "i";
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}
BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}
BigComplex& BigComplex::operator*=(const BigComplex& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    im_ *= o.re_;  // keeps precision bookkeeping; value stays zero
    return *this;
  }
  BigReal a = re_ * o.re_ - im_ * o.im_;
  BigReal b = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(a);
  im_ = std::move(b);
  return *this;
}
BigComplex& BigComplex::operator/=(const BigComplex& o) {
  if (o.is_zero()) throw SingularityError("complex division by zero");
  if (o.im_.is_zero()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  BigReal n = norm(o);
  BigReal a = (re_ * o.re_ + im_ * o.im_) / n;
  BigReal b = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(a);
  im_ = std::move(b);
  return *this;
}
BigComplex& BigComplex::operator*=(const BigReal& o) {
  re_ *= o;
  im_ *= o;
  return *this;
}
BigComplex& BigComplex::operator/=(const BigReal& o) {
  re_ /= o;
  im_ /= o;
  return *this;
}
BigComplex& BigComplex::operator*=(long v) {
  re_ *= v;
  im_ *= v;
  return *this;
}
BigComplex& BigComplex::operator/=(long v) {
  re_ /= v;
  im_ /= v;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const BigComplex& z) { return os << z.str(); }

void fma_into(BigComplex& acc, const BigComplex& a, const BigComplex& b, BigReal& t1, BigReal& t2) {
  const bool ar = mpfr_zero_p(a.im().get()), br = mpfr_zero_p(b.im().get());
  if (ar && br) {
    mpfr_mul(t1.get(), a.re().get(), b.re().get(), R);
    mpfr_add(acc.re().get(), acc.re().get(), t1.get(), R);
    return;
  }
  mpfr_mul(t1.get(), a.re().get(), b.re().get(), R);
  if (!ar && !br) {
    mpfr_mul(t2.get(), a.im().get(), b.im().get(), R);
    mpfr_sub(t1.get(), t1.get(), t2.get(), R);
  }
  mpfr_add(acc.re().get(), acc.re().get(), t1.get(), R);
  if (!br) {
    mpfr_mul(t1.get(), a.re().get(), b.im().get(), R);
    mpfr_add(acc.im().get(), acc.im().get(), t1.get(), R);
  }
  if (!ar) {
    mpfr_mul(t2.get(), a.im().get(), b.re().get(), R);
    mpfr_add(acc.im().get(), acc.im().get(), t2.get(), R);
  }
}

void mul_into(BigComplex& out, const BigComplex& a, const BigComplex& b, BigReal& t1, BigReal& t2) {
  mpfr_set_zero(out.re().get(), 1);
  mpfr_set_zero(out.im().get(), 1);
  fma_into(out, a, b, t1, t2);
}

BigComplex conj(const BigComplex& z) { return {z.re(), -z.im()}; }

BigReal abs(const BigComplex& z) {
  BigReal r(wider(z.re().ctx(), z.im().ctx()));
  mpfr_hypot(r.get(), z.re().get(), z.im().get(), R);
  return r;
}

BigReal norm(const BigComplex& z) { return z.re() * z.re() + z.im() * z.im(); }

BigReal arg(const BigComplex& z) { return atan2(z.im(), z.re()); }

BigComplex polar(const BigReal& r, const BigReal& theta) {
  BigReal s(theta.ctx()), c(theta.ctx());
  mpfr_sin_cos(s.get(), c.get(), theta.get(), R);
  return {r * c, r * s};
}

BigComplex exp(const BigComplex& z) {
  if (z.im().is_zero()) return BigComplex(exp(z.re()), BigReal(z.ctx()));
  return polar(exp(z.re()), z.im());
}

BigComplex log(const BigComplex& z) {
  if (z.is_zero()) throw SingularityError("log of zero");
  if (z.im().is_zero() && z.re().sign() > 0) return BigComplex(log(z.re()), BigReal(z.ctx()));
  return {log(abs(z)), arg(z)};
}

BigComplex sqrt(const BigComplex& z) {
  if (z.im().is_zero()) {
    if (z.re().sign() >= 0) return BigComplex(sqrt(z.re()), BigReal(z.ctx()));
    return {BigReal(z.ctx()), sqrt(-z.re())};
  }
  BigReal r = abs(z);
  if (z.re().sign() >= 0) {
    BigReal t = sqrt((r + z.re()) / 2);
    return {t, z.im() / (t * 2)};
  }
  BigReal t = sqrt((r - z.re()) / 2);
  BigReal re = abs(z.im()) / (t * 2);
  return {re, z.im().sign() < 0 ? -t : t};
}

BigComplex inv(const BigComplex& z) { return BigComplex(1, z.ctx()) / z; }

BigComplex pow(const BigComplex& z, const BigComplex& p) {
  if (z.is_zero()) {
    if (p.re().sign() > 0) return BigComplex(z.ctx());
    throw SingularityError("zero raised to a non-positive power");
  }
  return exp(p * log(z));
}

BigComplex pow(const BigComplex& z, long n) {
  if (n < 0) return inv(pow(z, -n));
  BigComplex result(1, z.ctx()), base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

BigComplex nth_root(const BigComplex& z, long m, long lambda) {
  if (m <= 0) throw DomainError("root order must be positive");
  if (z.is_zero()) return BigComplex(z.ctx());
  BigReal r = root(abs(z), static_cast<unsigned long>(m));
  BigReal theta = (arg(z) + pi(z.ctx()) * 2 * lambda) / m;
  if (lambda == 0 && z.im().is_zero() && z.re().sign() > 0) return BigComplex(r, BigReal(z.ctx()));
  return polar(r, theta);
}

BigComplex parse_complex(std::string_view re, std::string_view im, const PrecisionContext& ctx) {
  return {parse_decimal(re, ctx), im.empty() ? BigReal(ctx) : parse_decimal(im, ctx)};
}

}  // namespace zetainv
