// SPDX-License-Identifier: Apache-2.0

#include "risfbl/num/gaussian.hpp"

#include <cmath>

#include "risfbl/common.hpp"

namespace risfbl::num {

double gaussian_q(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

namespace {

// Acklam's inverse normal CDF approximation (~1.15e-9 relative error).
double inv_norm_cdf_acklam(double p) {
  static const double a1 = -39.69683028665376, a2 = 220.9460984245205,
                      a3 = -275.9285104469687, a4 = 138.3577518672690,
                      a5 = -30.66479806614716, a6 = 2.506628277459239;
  static const double b1 = -54.47609879822406, b2 = 161.5858368580409,
                      b3 = -155.6989798598866, b4 = 66.80131188771972,
                      b5 = -13.28068155288572;
  static const double c1 = -7.784894002430293e-03, c2 = -3.223964580411365e-01,
                      c3 = -2.400758277161838, c4 = -2.549732539343734,
                      c5 = 4.374664141464968, c6 = 2.938163982698783;
  static const double d1 = 7.784695709041462e-03, d2 = 3.224671290700398e-01,
                      d3 = 2.445134137142996, d4 = 3.754408661907416;
  const double plow = 0.02425, phigh = 1 - plow;
  double q;
  if (p < plow) {
    q = std::sqrt(-2 * std::log(p));
    return (((((c1 * q + c2) * q + c3) * q + c4) * q + c5) * q + c6) /
           ((((d1 * q + d2) * q + d3) * q + d4) * q + 1);
  }
  if (p > phigh) {
    q = std::sqrt(-2 * std::log(1 - p));
    return -(((((c1 * q + c2) * q + c3) * q + c4) * q + c5) * q + c6) /
           ((((d1 * q + d2) * q + d3) * q + d4) * q + 1);
  }
  q = p - 0.5;
  const double r = q * q;
  return (((((a1 * r + a2) * r + a3) * r + a4) * r + a5) * r + a6) * q /
         (((((b1 * r + b2) * r + b3) * r + b4) * r + b5) * r + 1);
}

// inverse_q restricted to p in (0, 0.5]; the result is nonnegative and both
// Acklam's low branch and erfc keep full precision in that right tail.
double inverse_q_upper(double p) {
  double x = -inv_norm_cdf_acklam(p);
  for (int i = 0; i < 2; ++i) {
    const double phi = std::exp(-0.5 * x * x) / std::sqrt(kTwoPi);
    if (!(phi > 0.0)) break;
    x += (gaussian_q(x) - p) / phi;
  }
  return x;
}

}  // namespace

double inverse_q(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("inverse_q: p must lie in (0, 1)");
  }
  if (p == 0.5) return 0.0;
  // Q(x) = p  <=>  Q(-x) = 1 - p.
  return (p < 0.5) ? inverse_q_upper(p) : -inverse_q_upper(1.0 - p);
}

}  // namespace risfbl::num
