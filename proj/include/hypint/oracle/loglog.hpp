#pragma once

#include "hypint/hiprec/real.hpp"
#include "hypint/oracle/quadrature.hpp"

namespace hypint {

enum class LogLogKind { kBeta, kZeta };

// Integral over (1, inf) of W_N(x) log log x with the weight
//   beta: (-1)^N sum_{k<N} sum_{j<=k} C(2k+1, k-j) (-1)^{j+1} (2j+1)^{2N-1}
//           ((2k+1)x^4 - 2(2k+3)x^2 + 2k+1) x^{2k} / (x^2+1)^{2k+3}
//   zeta: (-1)^N sum_{1<=k<=N} sum_{1<=j<=k} C(2k, k-j) (-1)^j (2j)^{2N}
//           (2k x^4 - 2(2k+2)x^2 + 2k) x^{2k-1} / (x^2+1)^{2k+2}
// evaluated after x = e^t. The results are
//   beta: 2^{2N-1} (2N-1)! beta(2N) / pi^{2N-1}
//   zeta: (2^{2N+1} - 1) (2N)! zeta(2N+1) / (2 pi^{2N}).
QuadratureResult integrate_loglog(LogLogKind kind, int n, const PrecisionContext& ctx,
                                  const QuadratureOptions& opts = {});
Real loglog_expected(LogLogKind kind, int n, const PrecisionContext& ctx);

// Blagouchine's two integrals in their original normalization:
//   (x^4 - 6x^2 + 1)/(x^2+1)^3 log log x     -> 2 beta(2) / pi
//   (x^4 - 4x^2 + 1) x/(x^2+1)^4 log log x   -> 7 zeta(3) / (8 pi^2)
QuadratureResult blagouchine_beta2(const PrecisionContext& ctx);
QuadratureResult blagouchine_zeta3(const PrecisionContext& ctx);

// 2^L times the integral over (1, inf) of
// (L x^4 - 2(L+2) x^2 + L) x^{L-1} / (x^2+1)^{L+2} log log x, L > 0; equals
// the integral of tanh x / x sech^L x over (0, inf).
QuadratureResult loglog_tanh_sech(const Real& l, const PrecisionContext& ctx);

}  // namespace hypint
