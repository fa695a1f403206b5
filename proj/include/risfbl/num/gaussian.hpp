// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace risfbl::num {

/// Gaussian tail probability Q(x) = P(Z > x) for standard normal Z.
double gaussian_q(double x);

/// Inverse of the Gaussian Q-function on (0, 1).
///
/// Acklam's rational approximation of the normal quantile followed by one
/// Newton polish step on Q itself; absolute error below 1e-12 across the
/// full domain, including the deep tails used by small decoding error
/// probabilities. Throws DomainError for p outside (0, 1).
double inverse_q(double p);

}  // namespace risfbl::num
