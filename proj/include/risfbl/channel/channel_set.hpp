// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "risfbl/channel/params.hpp"
#include "risfbl/common.hpp"
#include "risfbl/num/rng.hpp"

namespace risfbl::channel {

/// Reflecting-element phase angles, each reduced modulo 2*pi into [0, 2*pi).
class PhaseVector {
 public:
  PhaseVector() = default;
  explicit PhaseVector(RVec angles);

  Eigen::Index size() const { return theta_.size(); }
  double operator[](Eigen::Index n) const { return theta_[n]; }
  const RVec& angles() const { return theta_; }

  /// Entry-wise e^{j theta}.
  CVec phasor() const;

  static PhaseVector zeros(Eigen::Index n) {
    return PhaseVector(RVec::Zero(n));
  }

 private:
  RVec theta_;
};

double wrap_angle(double theta);

/// One realization of every channel quantity between the BS, the surface
/// and the users. Immutable after generation; shareable across threads.
struct ChannelSet {
  int M = 0, K = 0, N = 0;
  CMat H_BR;                    // N x M, unit-modulus LoS entries
  std::vector<CRowVec> h_R;     // K small-scale rows, length N
  std::vector<CMat> R_R;        // K spatial correlation matrices, N x N
  double beta_BR = 0.0;         // linear BS->RIS path gain
  std::vector<double> beta_R;   // K linear RIS->user path gains
  std::vector<CRowVec> h_eff_base;  // K composed rows sqrt(b_BR b_Rk) h_Rk R^(1/2)

  /// Effective BS->user channel h_eff_base_k diag(e^{j theta}) H_BR.
  CRowVec effective_channel(int k, const PhaseVector& theta) const;

  /// Contribution of element n alone: h_eff_base_k(n) * row n of H_BR.
  CRowVec per_pre_channel(int k, int n) const;
};

/// Linear gain of the RIS->user link: 10^((G_RIS - 33.05 - 30 log10 d)/10).
double path_loss_ris_user(double d, double G_RIS_dbi);

/// Linear gain of the BS->RIS link: 10^((G_BS + G_RIS - 35.9 - 22 log10 d)/10).
double path_loss_bs_ris(double d, double G_BS_dbi, double G_RIS_dbi);

/// Draw user drops uniformly over the placement rectangle.
Geometry random_geometry(const SystemParams& params, const PlacementConfig& area,
                         num::RngStream& rng);

/// Generate one channel realization. Draw order is fixed (H_BR row angles,
/// then per-user Rician components) so a given stream reproduces the same
/// set bit-exactly.
ChannelSet gen_channels(const SystemParams& params, const Geometry& geom,
                        num::RngStream& rng);

/// Evaluation-ready view of a ChannelSet: per-user N x M matrices whose
/// row n is the element-n channel, rescaled so the noise power is one.
/// The effective channel at phases theta is phasor(theta)^T * per_pre[k].
struct EffectiveLinks {
  std::vector<CMat> per_pre;  // K matrices, N x M
  double sigma = 1.0;         // noise power after rescaling
  int M = 0, K = 0, N = 0;

  EffectiveLinks() = default;
  EffectiveLinks(const ChannelSet& cs, double noise_power);

  CRowVec effective(int k, const PhaseVector& theta) const;
  CRowVec effective(int k, const CVec& phasor) const;
};

}  // namespace risfbl::channel
