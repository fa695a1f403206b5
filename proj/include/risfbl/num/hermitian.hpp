// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "risfbl/common.hpp"

namespace risfbl::num {

/// A validated Hermitian matrix. Construction rejects inputs whose
/// anti-Hermitian part exceeds 1e-12 relative to the matrix norm and then
/// symmetrizes, so downstream code may assume exact Hermitian structure
/// and real eigenvalues.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(CMat entries);

  Eigen::Index dim() const { return entries_.rows(); }
  const CMat& matrix() const { return entries_; }

 private:
  CMat entries_;
};

struct DominantEigen {
  double value = 0.0;      // dominant eigenvalue estimate
  double residual = 0.0;   // ||A v - value * v|| at the returned iterate
};

/// Largest eigenvalue of a Hermitian PSD matrix by power iteration
/// (deterministic all-ones start, residual tolerance 1e-10 relative,
/// 10,000-iteration cap). Accurate to 1e-8 relative; on spectra whose two
/// leading eigenvalues coincide to 1e-12 either may be returned.
double lambda_max(const HermitianMatrix& a);

/// Same iteration, but also reports the final residual so callers that
/// need a certified upper bound can add it as a margin.
DominantEigen dominant_eigen(const HermitianMatrix& a);

/// Conservative upper bound on lambda_max, suitable for majorization
/// surrogates that require bound validity rather than eigenvalue accuracy.
double lambda_max_upper_bound(const HermitianMatrix& a);

/// Principal Hermitian square root of a PSD matrix; eigenvalues that are
/// negative by rounding (> -1e-10 relative) are clamped to zero.
CMat hermitian_sqrt_psd(const CMat& a);

}  // namespace risfbl::num
