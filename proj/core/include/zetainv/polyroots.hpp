#pragma once

#include <vector>

#include "zetainv/mpcore.hpp"

namespace zetainv {

// All roots of sum c_k x^k (lowest degree first) by Aberth-Ehrlich
// iteration at twice the working digits. Each root satisfies
// |p(root)| < 10^{-digits/2} max|c_k|; ConvergenceError otherwise.
std::vector<BigComplex> polyroots(const std::vector<BigComplex>& coeffs, const PrecisionContext& ctx);

// p(x) and p'(x) by Horner.
std::pair<BigComplex, BigComplex> horner(const std::vector<BigComplex>& coeffs, const BigComplex& x);

}  // namespace zetainv
