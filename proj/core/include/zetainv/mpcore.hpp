#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "zetainv/errors.hpp"

namespace zetainv {

inline constexpr int kDefaultGuard = 20;
inline constexpr int kMinDigits = 30;

// Decimal working precision. Values are computed with digits + guard and
// reported at digits.
class PrecisionContext {
 public:
  explicit PrecisionContext(int digits = 50, int guard = kDefaultGuard);

  int digits() const noexcept { return digits_; }
  int guard() const noexcept { return guard_; }
  int working_digits() const noexcept { return digits_ + guard_; }
  mpfr_prec_t bits() const noexcept { return bits_; }

  PrecisionContext with_digits(int digits) const { return PrecisionContext(digits, guard_); }
  PrecisionContext with_guard(int guard) const { return PrecisionContext(digits_, guard); }
  // Same reported digits, more internal headroom.
  PrecisionContext widened(int extra_digits) const {
    return PrecisionContext(digits_, guard_ + extra_digits);
  }

  friend bool operator==(const PrecisionContext& a, const PrecisionContext& b) noexcept {
    return a.digits_ == b.digits_ && a.guard_ == b.guard_;
  }

 private:
  int digits_;
  int guard_;
  mpfr_prec_t bits_;
};

class BigReal {
 public:
  BigReal();
  explicit BigReal(const PrecisionContext& ctx);
  BigReal(long v, const PrecisionContext& ctx);
  BigReal(const mpq_class& q, const PrecisionContext& ctx);
  BigReal(const mpz_class& z, const PrecisionContext& ctx);
  // Exact binary value of a double; only for seeds and tolerances.
  static BigReal from_double(double v, const PrecisionContext& ctx);

  BigReal(const BigReal& o);
  BigReal(BigReal&& o) noexcept;
  BigReal& operator=(const BigReal& o);
  BigReal& operator=(BigReal&& o) noexcept;
  ~BigReal();

  const PrecisionContext& ctx() const noexcept { return ctx_; }
  mpfr_srcptr get() const noexcept { return v_; }
  mpfr_ptr get() noexcept { return v_; }

  // Same value re-rounded to another context.
  BigReal to(const PrecisionContext& ctx) const;

  double to_double() const;
  long to_long() const;  // rounds to nearest
  int sign() const;
  bool is_zero() const;
  bool is_finite() const;
  bool is_integer() const;
  // floor(log10|x|), or a very negative number for zero.
  long exponent10() const;
  // log10|x| as a double (safe for tiny values that underflow doubles).
  double log10_abs() const;

  // `sig` significant digits (defaults to ctx.digits()).
  std::string str(int sig = 0) const;

  BigReal operator-() const;
  BigReal& operator+=(const BigReal& o);
  BigReal& operator-=(const BigReal& o);
  BigReal& operator*=(const BigReal& o);
  BigReal& operator/=(const BigReal& o);
  BigReal& operator*=(long v);
  BigReal& operator/=(long v);

  friend BigReal operator+(BigReal a, const BigReal& b) { return a += b; }
  friend BigReal operator-(BigReal a, const BigReal& b) { return a -= b; }
  friend BigReal operator*(BigReal a, const BigReal& b) { return a *= b; }
  friend BigReal operator/(BigReal a, const BigReal& b) { return a /= b; }
  friend BigReal operator*(BigReal a, long b) { return a *= b; }
  friend BigReal operator*(long b, BigReal a) { return a *= b; }
  friend BigReal operator/(BigReal a, long b) { return a /= b; }
  friend BigReal operator+(BigReal a, long b);
  friend BigReal operator-(BigReal a, long b);

  friend bool operator==(const BigReal& a, const BigReal& b);
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);
  friend bool operator==(const BigReal& a, long b);
  friend std::partial_ordering operator<=>(const BigReal& a, long b);

 private:
  void adopt_precision(const BigReal& o);
  mpfr_t v_;
  PrecisionContext ctx_;
};

std::ostream& operator<<(std::ostream& os, const BigReal& x);

// Parse a signed decimal literal with optional exponent ("-1.5e-3").
BigReal parse_decimal(std::string_view text, const PrecisionContext& ctx);
// Fixed notation when the decimal exponent is moderate, otherwise d.ddde±X.
std::string format_decimal(const BigReal& x, int sig_digits);
// Fixed notation with exactly `places` digits after the point.
std::string format_fixed(const BigReal& x, int places);

// Constants and elementary functions (MPFR correctly rounded at ctx).
BigReal pi(const PrecisionContext& ctx);
BigReal euler_gamma(const PrecisionContext& ctx);
BigReal catalan(const PrecisionContext& ctx);
BigReal ln2(const PrecisionContext& ctx);
BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal log10(const BigReal& x);
BigReal pow(const BigReal& x, const BigReal& y);
BigReal pow(const BigReal& x, long n);
BigReal root(const BigReal& x, unsigned long n);  // real n-th root, sign kept for odd n
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal floor(const BigReal& x);
BigReal round(const BigReal& x);
BigReal lngamma(const BigReal& x);  // log|Γ(x)|
BigReal gamma(const BigReal& x);
BigReal digamma(const BigReal& x);
BigReal min(const BigReal& a, const BigReal& b);
BigReal max(const BigReal& a, const BigReal& b);
BigReal ten_pow(long e, const PrecisionContext& ctx);  // 10^e

// Number of agreeing decimal places, floor(-log10|a-b|), capped at cap.
int matching_decimals(const BigReal& a, const BigReal& b, int cap = 100000);
// Agreeing significant digits relative to b.
int matching_digits(const BigReal& a, const BigReal& b, int cap = 100000);

class BigComplex {
 public:
  BigComplex() = default;
  explicit BigComplex(const PrecisionContext& ctx) : re_(ctx), im_(ctx) {}
  BigComplex(long v, const PrecisionContext& ctx) : re_(v, ctx), im_(ctx) {}
  BigComplex(BigReal re) : re_(std::move(re)), im_(re_.ctx()) {}  // NOLINT implicit
  BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {}

  const BigReal& re() const noexcept { return re_; }
  const BigReal& im() const noexcept { return im_; }
  BigReal& re() noexcept { return re_; }
  BigReal& im() noexcept { return im_; }
  const PrecisionContext& ctx() const noexcept { return re_.ctx(); }

  BigComplex to(const PrecisionContext& ctx) const { return {re_.to(ctx), im_.to(ctx)}; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  // |im| <= tol * max(1, |re|)
  bool is_real(const BigReal& tol) const;
  std::string str(int sig = 0) const;

  BigComplex operator-() const { return {-re_, -im_}; }
  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);
  BigComplex& operator*=(const BigReal& o);
  BigComplex& operator/=(const BigReal& o);
  BigComplex& operator*=(long v);
  BigComplex& operator/=(long v);

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  friend BigComplex operator*(BigComplex a, const BigReal& b) { return a *= b; }
  friend BigComplex operator*(const BigReal& b, BigComplex a) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigReal& b) { return a /= b; }
  friend BigComplex operator*(BigComplex a, long b) { return a *= b; }
  friend BigComplex operator*(long b, BigComplex a) { return a *= b; }
  friend BigComplex operator/(BigComplex a, long b) { return a /= b; }

  friend bool operator==(const BigComplex& a, const BigComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  // Equal to a real when the imaginary part is exactly zero.
  friend bool operator==(const BigComplex& a, const BigReal& b) {
    return a.im_.is_zero() && a.re_ == b;
  }

 private:
  BigReal re_, im_;
};

std::ostream& operator<<(std::ostream& os, const BigComplex& z);

// Fused acc += a*b for complex values, using caller-owned scratch.
void fma_into(BigComplex& acc, const BigComplex& a, const BigComplex& b, BigReal& t1, BigReal& t2);
// out = a*b without temporaries beyond the scratch.
void mul_into(BigComplex& out, const BigComplex& a, const BigComplex& b, BigReal& t1, BigReal& t2);

BigComplex conj(const BigComplex& z);
BigReal abs(const BigComplex& z);
BigReal norm(const BigComplex& z);  // |z|^2
BigReal arg(const BigComplex& z);
BigComplex exp(const BigComplex& z);
BigComplex log(const BigComplex& z);  // principal
BigComplex sqrt(const BigComplex& z);  // principal
BigComplex pow(const BigComplex& z, const BigComplex& p);  // exp(p log z)
BigComplex pow(const BigComplex& z, long n);
BigComplex inv(const BigComplex& z);
// |z|^{1/m} exp(i (arg z + 2 pi lambda)/m); lambda = 0 is the principal root.
BigComplex nth_root(const BigComplex& z, long m, long lambda = 0);
BigComplex polar(const BigReal& r, const BigReal& theta);
BigComplex parse_complex(std::string_view re, std::string_view im, const PrecisionContext& ctx);

// Exact Bernoulli number B_k (B_1 = -1/2). Thread-safe cache.
mpq_class bernoulli(int k);

}  // namespace zetainv
