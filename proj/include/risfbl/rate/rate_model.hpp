// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "risfbl/channel/channel_set.hpp"
#include "risfbl/common.hpp"

namespace risfbl::rate {

/// Decision variables: one beamforming vector per user plus the phase
/// vector of the reflecting elements.
struct Design {
  std::vector<CVec> w;          // K vectors of length M
  channel::PhaseVector theta;   // N angles

  double total_power() const;
  /// Throws if the sum power exceeds budget * (1 + 1e-9).
  void check_power(double budget) const;
};

struct UserLink {
  double alpha = 0.0;   // interference-plus-noise power
  double beta = 0.0;    // total received power plus noise
  double signal = 0.0;  // |H_k w_k|^2
};

/// alpha_k and beta_k for user k at the given design.
UserLink alpha_beta(const channel::EffectiveLinks& links, int k, const Design& d);

/// Effective SINR |H_k w_k|^2 / alpha_k.
double sinr(const channel::EffectiveLinks& links, int k, const Design& d);

/// Channel dispersion 2 g / (1 + g), in [0, 2).
double dispersion(double g);

/// Rate penalty coefficient Qinv(eps_c) / sqrt(B t_t).
double a_coeff(const channel::SystemParams& params);

/// Short-blocklength achievable rate ln(1 + g) - a sqrt(dispersion), in
/// nats/s/Hz; a = 0 recovers the Shannon rate.
double urllc_rate(const channel::EffectiveLinks& links, int k, const Design& d,
                  double a);

struct Metrics {
  double gm = 0.0;   // geometric mean (0 if any rate <= 0)
  double am = 0.0;   // arithmetic mean
  double rr = 0.0;   // min/max ratio, clamped into [0, 1]
  double urv = 0.0;  // population variance
};

/// Fairness metrics of a rate vector. The GM is evaluated through the mean
/// of logs to stay stable for large K.
Metrics metrics(const RVec& rates);

/// nats/s/Hz -> bps/Hz.
double to_bps(double nats);

/// Per-user rate summary of one design.
struct RateReport {
  RVec per_user_shannon;  // nats/s/Hz
  RVec per_user_urllc;    // nats/s/Hz
  RVec sinr;
  RVec dispersion;
  double gm = 0.0, am = 0.0, rr = 0.0, urv = 0.0;  // of the per_user_urllc vector
  double a_coeff = 0.0;
};

RateReport evaluate(const channel::EffectiveLinks& links, const Design& d,
                    double a);

}  // namespace risfbl::rate
