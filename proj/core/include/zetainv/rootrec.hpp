#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zetainv/logderiv.hpp"

namespace zetainv {

// How Z(m)^{-1/m} is turned into a root.
enum class RootTransform {
  plain,      // Z^{-1/m}
  negate,     // -Z^{-1/m} (trivial zeros, negative branch)
  symmetric,  // (Z/2)^{-1/m}, table sums over +-z pairs
  modsq_t,    // (Z^{-1/m} - 1/4)^{1/2}, Z sums over 1/4 + t^2
};

struct RootList {
  std::vector<BigComplex> roots;
  std::vector<BigReal> errors;  // estimated |root - true root|
  std::vector<int> m_used;
  std::vector<bool> snapped;    // rounded to the nearest integer before deflating

  size_t size() const { return roots.size(); }
};

// Apply `transform` to a deflated radicand R at order m. Real even-order
// transforms require R > 0; otherwise DominanceViolated carries the complex
// candidate from the principal root.
BigComplex root_from_radicand(const BigComplex& radicand, int m, RootTransform transform);

BigComplex extract_principal(const GenZetaTable& z, int m, RootTransform transform);
// Deflates Z(m) by the known roots (in the table's own variable) and by
// optional extra terms already expressed as Z contributions.
BigComplex extract_next(const GenZetaTable& z, const std::vector<BigComplex>& known, int m,
                        RootTransform transform, const BigComplex* extra_deflation = nullptr);

// Zeros of sin(pi s)/(pi s): z_1..z_count at derivative order 2m.
RootList sinc_zeros(int count, int m, const PrecisionContext& ctx);
// Zeros of J_nu: the first is extracted, later ones deflate by reference zeros
// refined to 4x digits (x_{nu,k} must be known much better than the next one).
RootList bessel_zeros(const std::string& nu, int count, int m, const PrecisionContext& ctx);

// n-th trivial zero at derivative order 2m, deflating by -2, ..., -2(n-1)
// exactly and by the conjugate pairs 1/2 +- i t_k of `corrections`.
BigReal trivial_zero(int n, int m, const std::vector<BigReal>& corrections, const PrecisionContext& ctx);

enum class NontrivialMethod { modsq_asymptotic, z1_xi, z1_hurwitz };

struct NontrivialResult {
  BigReal t;
  int stable_digits = 0;  // decimals shared with the m+1 (modsq) or m+2 (Z1) estimate
};

// t_n. For modsq_asymptotic m is the series index; for the Z1 methods the
// derivative order is 2m. `known` holds t_1..t_{n-1} at high precision.
NontrivialResult nontrivial_zero(int n, int m, NontrivialMethod method, const std::vector<BigReal>& known,
                                 const PrecisionContext& ctx);

// [((Z_nt(m)^2 - Z_nt(2m))/2)^{-1/m} - Z_1(2m)^{-1/m}]^{1/2}, tending to the
// real part 1/2 of the first zero. A negative radicand is returned negated
// (as -sqrt|.|) so the failure stays visible.
BigReal real_part_check(int m, const PrecisionContext& ctx);

// Positive real roots of a polynomial (coefficients lowest degree first) by
// recursive extraction. Roots within their error estimate of an integer are
// snapped and flagged before deflation.
RootList solve_polynomial(const std::vector<std::string>& coeffs, int m, const PrecisionContext& ctx);

// Principal solution of f(s) = w for the built-in families.
enum class InverseKind { gamma, besselj, cos, lambertw, poly };

struct InverseRequest {
  InverseKind kind = InverseKind::gamma;
  BigComplex w;
  int m = 80;
  std::string nu = "0";               // besselj: integer order
  std::string center;                 // gamma: positive expansion point, empty = automatic
  std::vector<std::string> coeffs;    // poly: p(s), lowest degree first
};

// Expansion about s = c (c = 0 except gamma): Z(m) of f(c+x) - w, then
// c + (Z(m) [/2 for even targets])^{-1/m}.
BigComplex invert_function(const InverseRequest& req, const PrecisionContext& ctx);
// The expansion point used for gamma when none is given.
BigReal default_gamma_center(const BigComplex& w, const PrecisionContext& ctx);

// p_1..p_count from (1 - Q_n(s)/zeta(s))^{-1/s}.
std::vector<long> golomb_primes(int count, long s, const PrecisionContext& ctx);

// Reference zeros by Newton iteration (independent of the recurrences).
// Imaginary part of the n-th zeta zero on the critical line, n = 1..10 seeded
// from a table, refined as a complex zero of zeta.
BigReal reference_zeta_zero(int n, const PrecisionContext& ctx);
// n-th positive zero of J_nu, McMahon seed, Newton on the series.
BigReal reference_bessel_zero(const std::string& nu, int n, const PrecisionContext& ctx);

}  // namespace zetainv
