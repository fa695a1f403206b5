// SPDX-License-Identifier: Apache-2.0

#include "risfbl/solver/bf_step.hpp"

#include <cmath>

#include "risfbl/num/bisect.hpp"

namespace risfbl::solver {

double SurrogateQuadratic::value(const std::vector<CVec>& w) const {
  double v = const_term;
  const CMat& psi = quad.matrix();
  for (std::size_t k = 0; k < w.size(); ++k) {
    v += 2.0 * std::real(linear[k].dot(w[k]));  // dot conjugates the left arg
    v -= std::real(w[k].dot(psi * w[k]));
  }
  return v;
}

SurrogateQuadratic build_bf_surrogate(const channel::EffectiveLinks& links,
                                      const rate::Design& design,
                                      const Weights& weights, double a) {
  const int K = links.K;
  const int M = links.M;
  const double sigma = links.sigma;

  std::vector<CVec> b(static_cast<std::size_t>(K), CVec::Zero(M));
  CMat psi = CMat::Zero(M, M);
  double const_term = 0.0;

  const CVec phasor = design.theta.phasor();
  for (int k = 0; k < K; ++k) {
    const double gamma = weights.gamma[k];
    const CRowVec h = links.effective(k, phasor);
    // Received amplitudes at the expansion point.
    CVec ell(K);
    for (int j = 0; j < K; ++j) {
      ell[j] = (h * design.w[static_cast<std::size_t>(j)])(0);
    }
    const double sig = std::norm(ell[k]);
    if (!(sig > 0.0)) {
      throw DegenerateExpansion("build_bf_surrogate: zero SINR at expansion point");
    }
    double alpha = sigma;
    for (int j = 0; j < K; ++j) {
      if (j != k) alpha += std::norm(ell[j]);
    }
    const double beta = alpha + sig;
    const double g = sig / alpha;
    const double r = std::log1p(g);

    // Shannon part of the bound.
    const double c1 = 1.0 / alpha - 1.0 / beta;
    const double a1 = r - g - sigma * c1;
    b[static_cast<std::size_t>(k)] +=
        (gamma / alpha) * std::conj(ell[k]) * h.adjoint();

    double c2 = 0.0;
    double a2 = 0.0;
    if (a != 0.0) {
      // Dispersion part; the expansion dispersion is floored inside the
      // 1/sqrt terms (bound direction is preserved for any positive value).
      const double ups = std::max(2.0 * g / (1.0 + g), kDispersionFloor);
      const double sq = std::sqrt(ups);
      a2 = a * sq / 2.0 * (1.0 + 2.0 / ups) +
           a * sigma * alpha / (beta * sq) * (-2.0 / alpha + 1.0 / beta);
      c2 = a * alpha / (beta * beta * sq);
      const Complex coeff(a / (beta * sq));
      for (int j = 0; j < K; ++j) {
        if (j == k) continue;
        b[static_cast<std::size_t>(j)] +=
            gamma * coeff * std::conj(ell[j]) * h.adjoint();
      }
    }

    const_term += gamma * (a1 - a2);
    psi.noalias() += (gamma * (c1 + c2)) * (h.adjoint() * h);
  }

  return SurrogateQuadratic{const_term, std::move(b),
                            num::HermitianMatrix(std::move(psi))};
}

namespace {

std::vector<CVec> ridge_solve(const CMat& psi, const std::vector<CVec>& b,
                              double mu) {
  const Eigen::Index M = psi.rows();
  CMat shifted = psi;
  shifted.diagonal().array() += mu;
  Eigen::LLT<CMat> llt(shifted);
  if (llt.info() != Eigen::Success) {
    throw ContractViolation("solve_bf_qp: ridge factorization failed");
  }
  std::vector<CVec> w(b.size(), CVec::Zero(M));
  for (std::size_t k = 0; k < b.size(); ++k) w[k] = llt.solve(b[k]);
  return w;
}

double total_power(const std::vector<CVec>& w) {
  double p = 0.0;
  for (const auto& wk : w) p += wk.squaredNorm();
  return p;
}

}  // namespace

std::vector<CVec> solve_bf_qp(const SurrogateQuadratic& surr, double P) {
  if (!(P > 0.0)) throw DomainError("solve_bf_qp: power budget must be positive");
  const CMat& psi = surr.quad.matrix();
  const Eigen::Index M = psi.rows();

  double b_norm2 = 0.0;
  for (const auto& bk : surr.linear) b_norm2 += bk.squaredNorm();
  if (b_norm2 == 0.0) {
    return std::vector<CVec>(surr.linear.size(), CVec::Zero(M));
  }

  // Ridgeless branch: valid when the quadratic part is positive definite
  // and the stationary point already satisfies the budget.
  Eigen::LLT<CMat> llt(psi);
  if (llt.info() == Eigen::Success) {
    std::vector<CVec> w(surr.linear.size(), CVec::Zero(M));
    for (std::size_t k = 0; k < surr.linear.size(); ++k) {
      w[k] = llt.solve(surr.linear[k]);
    }
    if (total_power(w) <= P) return w;
  }

  constexpr double kMuFloor = 1e-12;
  {
    auto w = ridge_solve(psi, surr.linear, kMuFloor);
    if (total_power(w) <= P) return w;
  }
  const double mu_hi =
      std::sqrt(b_norm2 / P) + num::lambda_max(surr.quad);
  const double mu = num::bisect_root(
      [&](double m) { return total_power(ridge_solve(psi, surr.linear, m)) - P; },
      kMuFloor, mu_hi, 1e-10 * P);
  return ridge_solve(psi, surr.linear, mu);
}

rate::Design bf_iteration(const channel::EffectiveLinks& links,
                          const rate::Design& design, const Weights& weights,
                          double a, double P) {
  const SurrogateQuadratic surr = build_bf_surrogate(links, design, weights, a);
  rate::Design next;
  next.w = solve_bf_qp(surr, P);
  next.theta = design.theta;
  // The input point is feasible for the same quadratic program, so a solved
  // step can only tie it; numerical ties fall back to the input.
  if (surr.value(next.w) < surr.value(design.w)) return design;
  return next;
}

}  // namespace risfbl::solver
