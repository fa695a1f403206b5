// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace risfbl {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CRowVec = Eigen::RowVectorXcd;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kLog2E = 1.4426950408889634073599246810018921374;

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// Input violates a documented precondition (e.g. non-Hermitian matrix).
class ContractViolation : public Error {
 public:
  explicit ContractViolation(const std::string& what) : Error(what) {}
};

/// Root bracketing failed: no sign change on the supplied interval.
class BracketingError : public Error {
 public:
  explicit BracketingError(const std::string& what) : Error(what) {}
};

/// A surrogate was requested at an expansion point with zero SINR.
class DegenerateExpansion : public Error {
 public:
  explicit DegenerateExpansion(const std::string& what) : Error(what) {}
};

/// Weight update requested on a rate vector with a nonpositive entry.
class NonpositiveRate : public Error {
 public:
  explicit NonpositiveRate(const std::string& what) : Error(what) {}
};

/// A channel realization for which no feasible design could be produced.
class InfeasibleRealization : public Error {
 public:
  explicit InfeasibleRealization(const std::string& what) : Error(what) {}
};

}  // namespace risfbl
