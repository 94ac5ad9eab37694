#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "zetainv/logderiv.hpp"

namespace zetainv {

enum class SignRule { automatic, positive, negative };

// lim j_1(m), the left end of the singular strip.
BigReal j1_limit(const PrecisionContext& ctx);
// Im w = 0 (to 10^{-digits/2}) and j_1 <= Re w <= 1: the principal branch is
// not trustworthy here.
bool in_singular_strip(const BigComplex& w, const PrecisionContext& ctx);

// F_m(w) = -m [s^m] log((zeta(s) - w)(s - 1)) about s = 0.
BigComplex inverse_radicand(const BigComplex& w, int m, const PrecisionContext& ctx);

// s_1 = +-F_m(w)^{-1/m}. Automatic sign: negative for real w in (-1/2, j_1),
// positive elsewhere. w = -1/2 is taken as the mean of w = -1/2 +- 10^{-digits/2}.
BigComplex izeta_limit(const BigComplex& w, int m, SignRule sign, const PrecisionContext& ctx);

// Second solution from order 2m, deflated by s1_ref (which must be known far
// better than the result). Automatic sign is negative: for real w the second
// solution lies on the negative axis.
BigComplex izeta_branch2(const BigComplex& w, const BigComplex& s1_ref, int m, SignRule sign,
                         const PrecisionContext& ctx);

// I_0(m)..I_m(m): [zeta^{-1}(w)/(w + 1/2)]^{-m} ~ sum I_n(m) w^n, I_m(m) = 1.
// Equivalently the coefficients of (w + 1/2)^m F_m(w), a degree-m polynomial.
std::vector<BigReal> expansion_coeffs(int m, const PrecisionContext& ctx);

// Zeros j_n of sum I_n(m) w^n: real ones ascending, then conjugate pairs by
// increasing |Im|, negative imaginary part first.
struct AttractorTable {
  int m = 0;
  std::vector<BigComplex> roots;
  std::vector<BigReal> source_poly;
  PrecisionContext ctx;

  // `# zetainv-attractor m=<m> digits=<d>` then one root per line.
  void save(const std::filesystem::path& path) const;
  std::string to_text() const;
  static AttractorTable from_text(const std::string& text);
  static AttractorTable load(const std::filesystem::path& path);
};

void canonical_order(std::vector<BigComplex>& roots, const BigReal& tol);

// m even, m >= 4. Checks root count, conjugate pairing and polynomial residuals.
AttractorTable attractor(int m, const PrecisionContext& ctx);

struct BranchResult {
  BigComplex s;
  int lambda = 0;
  BigReal residual;  // |zeta(s) - w|
  int m = 0;
  bool ambiguous = false;  // more than one branch passed the threshold
  bool in_strip = false;
};

// s = (w + 1/2) prod (w - j_n)^{-1/m} on the first m-th root branch lambda
// with |zeta(s) - w| < threshold. BranchNotFound otherwise.
BranchResult izeta_product(const BigComplex& w, const AttractorTable& table, double threshold = 1e-3);

struct GridPoint {
  BigComplex w;
  bool ok = false;
  int lambda = -1;
  double log10_residual = 0;  // best residual seen, also for failures
  bool in_strip = false;
  std::string error;
};

// n_re x n_im points over [re_lo, re_hi] x [im_lo, im_hi], row-major in Im.
std::vector<GridPoint> error_grid(double re_lo, double re_hi, double im_lo, double im_hi, int n_re, int n_im,
                                  const AttractorTable& table, int threads = 0, double threshold = 1e-3);
std::string grid_to_csv(const std::vector<GridPoint>& grid);

// +-(w + 1/2)[w^2 + I_1(2) w + I_0(2)]^{-1/2}, sign as izeta_limit.
BigComplex second_order_approx(const BigComplex& w);

// Z_j(m) = (1/(m-1)!) d^m/dw^m log[zeta^{-1}(w)/(w + 1/2)] at w = 0, from the
// reverted Taylor series of zeta about -2.
GenZetaTable zj_table(int m_max, const PrecisionContext& ctx);
// [m Z_j(m)]^{-1/m} with the inverse represented by its order-m product, so
// m Z_j(m) = sum j_n(m)^{-m}. Converges slowly to j1_limit().
BigReal j1_from_table(const AttractorTable& table);
BigReal j1_from_inverse(int m, const PrecisionContext& ctx);

struct DerivativeResult {
  BigComplex value;          // 1/zeta'(s)
  BigComplex product_route;  // s [1/(w + 1/2) - (1/m) sum 1/(w - j_n)]
  BigReal relative_gap;
};
DerivativeResult inverse_derivative(const BigComplex& w, const AttractorTable& table);

struct IdentityCheck {
  std::string name;
  BigReal value;
  BigReal target;
  int digits = 0;    // matching decimals
  int required = 0;  // pass threshold
  bool pass = false;
};
std::vector<IdentityCheck> identity_suite(const AttractorTable& table);

// gamma ~ [zeta^{-1}(x) - (1 + 1/x)] x^2 for large x, inverse by the table.
BigReal gamma_from_inverse(const BigReal& x, const AttractorTable& table);

}  // namespace zetainv
