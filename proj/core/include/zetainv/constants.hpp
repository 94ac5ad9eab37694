#pragma once

#include <vector>

#include "zetainv/logderiv.hpp"

namespace zetainv {

// zeta(s) = 1/(s-1) + sum (-1)^n gamma_n (s-1)^n / n!
std::vector<BigReal> stieltjes_jet(int n_max, const PrecisionContext& ctx);

// Determinant of the k x k system fitting zeta(s) - 1/(s-1) at s = 2..k+1
// with column n replaced by the right-hand side. k must be a multiple of 4
// (then det A = +1 exactly and no division is needed).
BigReal stieltjes_determinant(int n, int k, const PrecisionContext& ctx);
// det A(k) itself, (-1)^{k(k-1)/2}.
BigReal vandermonde_determinant(int k, const PrecisionContext& ctx);

enum class EtaMethod { jet, coffey, determinant };

// -zeta'(s)/zeta(s) = 1/(s-1) + sum eta_n (s-1)^n. The determinant route uses
// k = `det_size` (multiple of 4).
std::vector<BigReal> eta_constants(int n_max, EtaMethod method, const PrecisionContext& ctx, int det_size = 32);
BigReal eta_determinant(int n, int k, const PrecisionContext& ctx);
// Coffey's recurrence from gamma_0..gamma_n_max.
std::vector<BigReal> eta_from_stieltjes(const std::vector<BigReal>& gammas, const PrecisionContext& ctx);

// Z_nt(m) = 1 - (1 - 2^{-m}) zeta(m) + (-1)^m eta_{m-1} for m >= 2,
// Z_nt(1) = 1 - eta_0/2 - log(4 pi)/2.
BigReal z_nt_from_eta(int m, const std::vector<BigReal>& etas, const PrecisionContext& ctx);

enum class T1Route {
  stieltjes,  // gammas -> etas (Coffey) -> Z_nt -> asymptotic Z_|nt|
  eta_jet,    // etas from the jet -> Z_nt -> asymptotic Z_|nt|
  keiper_li,  // exact Z_|nt| = sum (-1)^{n+1} C(2m, m-n) lambda_n
};

// [Z_|nt|(m)^{-1/m} - 1/4]^{1/2} with Z_|nt| assembled along `route`.
BigReal t1_expansion_demo(int m, T1Route route, const PrecisionContext& ctx);

// Partial sum (-1)^n/n! [sum_{l<=k} Lambda(l) log^n(l)/l - log^{n+1}(k)/(n+1)].
// Converges very slowly; a demonstration only.
BigReal eta_von_mangoldt_demo(int n, long k_terms, const PrecisionContext& ctx);

enum class ConstantsSource { jet, determinant, recurrence };

struct ConstantsTable {
  std::vector<BigReal> gammas;   // gamma_0..gamma_K
  std::vector<BigReal> etas;     // eta_0..eta_K
  std::vector<BigReal> lambdas;  // lambda_1..lambda_K at index 1..K (index 0 unused)
  ConstantsSource source = ConstantsSource::jet;
  PrecisionContext ctx;
};

ConstantsTable constants_table(int k, ConstantsSource source, const PrecisionContext& ctx);

}  // namespace zetainv
