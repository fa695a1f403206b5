// SPDX-License-Identifier: Apache-2.0

#include "risfbl/num/hermitian.hpp"

#include <cmath>

namespace risfbl::num {

HermitianMatrix::HermitianMatrix(CMat entries) {
  if (entries.rows() != entries.cols() || entries.rows() == 0) {
    throw ContractViolation("HermitianMatrix: square nonempty matrix required");
  }
  const double scale = entries.norm();
  const double skew = (entries - entries.adjoint()).norm();
  if (skew > 1e-12 * std::max(scale, 1.0)) {
    throw ContractViolation("HermitianMatrix: input is not Hermitian");
  }
  entries_ = 0.5 * (entries + entries.adjoint().eval());
}

namespace {

DominantEigen power_iterate(const CMat& a) {
  const Eigen::Index n = a.rows();
  CVec v = CVec::Ones(n) / std::sqrt(static_cast<double>(n));
  double lambda = 0.0;
  double residual = 0.0;
  constexpr int kMaxIters = 10000;
  constexpr double kTol = 1e-10;
  for (int it = 0; it < kMaxIters; ++it) {
    CVec av = a * v;
    lambda = std::real(v.dot(av));
    residual = (av - lambda * v).norm();
    if (residual <= kTol * std::max(std::abs(lambda), 1e-300)) break;
    const double norm = av.norm();
    if (norm == 0.0) {  // v in the null space of a PSD matrix: lambda >= 0 trivially
      lambda = 0.0;
      residual = 0.0;
      break;
    }
    v = av / norm;
  }
  return {lambda, residual};
}

}  // namespace

DominantEigen dominant_eigen(const HermitianMatrix& a) {
  return power_iterate(a.matrix());
}

double lambda_max(const HermitianMatrix& a) { return dominant_eigen(a).value; }

double lambda_max_upper_bound(const HermitianMatrix& a) {
  const DominantEigen e = dominant_eigen(a);
  // A converged iterate underestimates the dominant eigenvalue by at most
  // the residual norm; pad by it (plus rounding headroom) so the result is
  // usable as a majorizer.
  return e.value + 2.0 * e.residual + 1e-12 * std::max(std::abs(e.value), 1.0);
}

CMat hermitian_sqrt_psd(const CMat& a) {
  Eigen::SelfAdjointEigenSolver<CMat> eig(a);
  if (eig.info() != Eigen::Success) {
    throw ContractViolation("hermitian_sqrt_psd: eigendecomposition failed");
  }
  RVec vals = eig.eigenvalues();
  const double floor = -1e-10 * std::max(vals.cwiseAbs().maxCoeff(), 1.0);
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    if (vals[i] < floor) {
      throw ContractViolation("hermitian_sqrt_psd: matrix is not PSD");
    }
    vals[i] = std::sqrt(std::max(vals[i], 0.0));
  }
  return eig.eigenvectors() * vals.asDiagonal() *
         eig.eigenvectors().adjoint();
}

}  // namespace risfbl::num
