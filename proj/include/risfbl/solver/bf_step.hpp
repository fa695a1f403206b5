// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "risfbl/num/hermitian.hpp"
#include "risfbl/rate/rate_model.hpp"
#include "risfbl/solver/weights.hpp"

namespace risfbl::solver {

/// Concave quadratic minorant of the weighted short-blocklength objective
/// in the beamformers at fixed phases:
///   value(w) = const_term + 2 sum_k Re<linear_k, w_k> - sum_k w_k^H quad w_k.
/// The quadratic part is one PSD matrix shared by every user; the minorant
/// matches the true weighted objective at the expansion point.
struct SurrogateQuadratic {
  double const_term;
  std::vector<CVec> linear;   // coefficient of w_k, length M each
  num::HermitianMatrix quad;  // M x M PSD

  double value(const std::vector<CVec>& w) const;
};

/// Dispersion floor used inside the 1/sqrt(dispersion) coefficients; keeps
/// the bound direction while avoiding blow-up for nearly dead users.
inline constexpr double kDispersionFloor = 1e-12;

/// Assemble the minorant at the design's current point. Requires every
/// user's SINR to be strictly positive there; throws DegenerateExpansion
/// otherwise.
SurrogateQuadratic build_bf_surrogate(const channel::EffectiveLinks& links,
                                      const rate::Design& design,
                                      const Weights& weights, double a);

/// Maximize the minorant under the sum-power budget. Returns the ridgeless
/// solution when it is feasible, otherwise the ridge-regularized solution
/// with the multiplier bisected so the power meets the budget within
/// 1e-10 * P.
std::vector<CVec> solve_bf_qp(const SurrogateQuadratic& surr, double P);

/// One beamforming descent step: build + solve. The weighted objective at
/// the returned design is never below its value at the input design.
rate::Design bf_iteration(const channel::EffectiveLinks& links,
                          const rate::Design& design, const Weights& weights,
                          double a, double P);

}  // namespace risfbl::solver
