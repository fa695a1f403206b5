// SPDX-License-Identifier: Apache-2.0

#include "risfbl/rate/rate_model.hpp"

#include <algorithm>
#include <cmath>

#include "risfbl/num/gaussian.hpp"

namespace risfbl::rate {

double Design::total_power() const {
  double p = 0.0;
  for (const auto& wk : w) p += wk.squaredNorm();
  return p;
}

void Design::check_power(double budget) const {
  if (total_power() > budget * (1.0 + 1e-9)) {
    throw ContractViolation("Design: power budget exceeded");
  }
}

UserLink alpha_beta(const channel::EffectiveLinks& links, int k, const Design& d) {
  const CRowVec h = links.effective(k, d.theta);
  UserLink ul;
  ul.alpha = links.sigma;
  for (int j = 0; j < links.K; ++j) {
    const double p = std::norm((h * d.w[static_cast<std::size_t>(j)])(0));
    if (j == k) {
      ul.signal = p;
    } else {
      ul.alpha += p;
    }
  }
  ul.beta = ul.alpha + ul.signal;
  return ul;
}

double sinr(const channel::EffectiveLinks& links, int k, const Design& d) {
  const UserLink ul = alpha_beta(links, k, d);
  return ul.signal / ul.alpha;
}

double dispersion(double g) {
  if (!(g >= 0.0)) throw DomainError("dispersion: SINR must be nonnegative");
  return 2.0 * g / (1.0 + g);
}

double a_coeff(const channel::SystemParams& params) {
  if (!(params.B * params.t_t > 0.0)) {
    throw DomainError("a_coeff: blocklength B * t_t must be positive");
  }
  return num::inverse_q(params.eps_c) / std::sqrt(params.B * params.t_t);
}

double urllc_rate(const channel::EffectiveLinks& links, int k, const Design& d,
                  double a) {
  const double g = sinr(links, k, d);
  return std::log1p(g) - a * std::sqrt(dispersion(g));
}

Metrics metrics(const RVec& rates) {
  Metrics m;
  const Eigen::Index K = rates.size();
  if (K == 0) return m;
  m.am = rates.mean();
  double min_r = rates.minCoeff();
  double max_r = rates.maxCoeff();
  m.rr = (max_r > 0.0) ? std::max(min_r, 0.0) / max_r : 0.0;
  m.urv = (rates.array() - m.am).square().sum() / static_cast<double>(K);
  if (min_r <= 0.0) {
    m.gm = 0.0;
  } else {
    m.gm = std::exp(rates.array().log().mean());
  }
  return m;
}

double to_bps(double nats) { return nats * kLog2E; }

RateReport evaluate(const channel::EffectiveLinks& links, const Design& d,
                    double a) {
  const int K = links.K;
  RateReport r;
  r.per_user_shannon.resize(K);
  r.per_user_urllc.resize(K);
  r.sinr.resize(K);
  r.dispersion.resize(K);
  r.a_coeff = a;
  for (int k = 0; k < K; ++k) {
    const UserLink ul = alpha_beta(links, k, d);
    const double g = ul.signal / ul.alpha;
    const double v = dispersion(g);
    r.sinr[k] = g;
    r.dispersion[k] = v;
    r.per_user_shannon[k] = std::log1p(g);
    r.per_user_urllc[k] = r.per_user_shannon[k] - a * std::sqrt(v);
  }
  const Metrics m = metrics(r.per_user_urllc);
  r.gm = m.gm;
  r.am = m.am;
  r.rr = m.rr;
  r.urv = m.urv;
  return r;
}

}  // namespace risfbl::rate
