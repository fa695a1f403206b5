// SPDX-License-Identifier: Apache-2.0

#include "risfbl/channel/channel_set.hpp"

#include <cmath>

#include "risfbl/num/hermitian.hpp"

namespace risfbl::channel {

double wrap_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;  // fmod can round up to the period itself
  return t;
}

PhaseVector::PhaseVector(RVec angles) : theta_(std::move(angles)) {
  for (Eigen::Index n = 0; n < theta_.size(); ++n) {
    theta_[n] = wrap_angle(theta_[n]);
  }
}

CVec PhaseVector::phasor() const {
  CVec v(theta_.size());
  for (Eigen::Index n = 0; n < theta_.size(); ++n) {
    v[n] = Complex(std::cos(theta_[n]), std::sin(theta_[n]));
  }
  return v;
}

double path_loss_ris_user(double d, double G_RIS_dbi) {
  if (!(d > 0.0)) throw DomainError("path_loss_ris_user: distance must be positive");
  return std::pow(10.0, (G_RIS_dbi - 33.05 - 30.0 * std::log10(d)) / 10.0);
}

double path_loss_bs_ris(double d, double G_BS_dbi, double G_RIS_dbi) {
  if (!(d > 0.0)) throw DomainError("path_loss_bs_ris: distance must be positive");
  return std::pow(10.0, (G_BS_dbi + G_RIS_dbi - 35.9 - 22.0 * std::log10(d)) / 10.0);
}

Geometry random_geometry(const SystemParams& params, const PlacementConfig& area,
                         num::RngStream& rng) {
  Geometry geom;
  geom.user_pos.resize(static_cast<std::size_t>(params.K));
  for (auto& pos : geom.user_pos) {
    const double x = rng.uniform(area.x_min, area.x_max);
    const double y = rng.uniform(area.y_min, area.y_max);
    pos = {x, y, area.height};
  }
  geom.validate();
  return geom;
}

namespace {

inline Complex unit_phasor(double angle) {
  return {std::cos(angle), std::sin(angle)};
}

// Spatial correlation towards user k: entries e^{j pi (n - n') sin(az) sin(el)}
// with the azimuth/elevation of the RIS->user direction.
CMat correlation_matrix(int N, const Vec3& ris, const Vec3& user) {
  const double dx = user[0] - ris[0];
  const double dy = user[1] - ris[1];
  const double dz = user[2] - ris[2];
  const double r = std::sqrt(dx * dx + dy * dy + dz * dz);
  const double azimuth = std::atan2(dy, dx);
  const double elevation = std::acos(dz / r);  // polar angle from vertical
  const double slope = kPi * std::sin(azimuth) * std::sin(elevation);
  CMat R(N, N);
  for (int n = 0; n < N; ++n) {
    for (int m = 0; m < N; ++m) {
      R(n, m) = unit_phasor(slope * static_cast<double>(n - m));
    }
  }
  return R;
}

}  // namespace

ChannelSet gen_channels(const SystemParams& params, const Geometry& geom,
                        num::RngStream& rng) {
  params.validate();
  geom.validate();
  if (static_cast<int>(geom.user_pos.size()) != params.K) {
    throw DomainError("gen_channels: geometry has wrong user count");
  }

  ChannelSet cs;
  cs.M = params.M;
  cs.K = params.K;
  cs.N = params.N;

  // LoS BS->RIS matrix: one (theta, phi) pair per row.
  cs.H_BR.resize(params.N, params.M);
  for (int n = 0; n < params.N; ++n) {
    const double theta = rng.uniform(0.0, kPi);
    const double phi = rng.uniform(0.0, kTwoPi);
    const double theta_bar = kPi - theta;
    const double phi_bar = kPi + phi;
    const double ris_side = std::sin(theta_bar) * std::sin(phi_bar);
    const double bs_side = std::sin(theta) * std::sin(phi);
    for (int m = 0; m < params.M; ++m) {
      cs.H_BR(n, m) =
          unit_phasor(kPi * (static_cast<double>(n) * ris_side +
                             static_cast<double>(m) * bs_side));
    }
  }

  // Rician small-scale RIS->user rows, K-factor 3 (linear). The LoS part is
  // a unit-modulus row with a random per-user phase ramp.
  constexpr double kRicianK = 3.0;
  const double los_scale = std::sqrt(kRicianK / (1.0 + kRicianK));
  const double nlos_scale = std::sqrt(1.0 / (1.0 + kRicianK));
  cs.h_R.resize(static_cast<std::size_t>(params.K));
  cs.R_R.resize(static_cast<std::size_t>(params.K));
  cs.beta_R.resize(static_cast<std::size_t>(params.K));
  cs.h_eff_base.resize(static_cast<std::size_t>(params.K));

  cs.beta_BR = path_loss_bs_ris(geom.dist_bs_ris(), params.G_BS, params.G_RIS);

  for (int k = 0; k < params.K; ++k) {
    const double ramp = rng.uniform(0.0, kTwoPi);
    const double offset = rng.uniform(0.0, kTwoPi);
    CRowVec h(params.N);
    for (int n = 0; n < params.N; ++n) {
      h[n] = los_scale * unit_phasor(offset + ramp * static_cast<double>(n));
    }
    for (int n = 0; n < params.N; ++n) {
      h[n] += nlos_scale * rng.complex_normal();
    }
    cs.h_R[static_cast<std::size_t>(k)] = std::move(h);

    cs.R_R[static_cast<std::size_t>(k)] = correlation_matrix(
        params.N, geom.ris_pos, geom.user_pos[static_cast<std::size_t>(k)]);
    cs.beta_R[static_cast<std::size_t>(k)] =
        path_loss_ris_user(geom.dist_ris_user(k), params.G_RIS);
  }

  // Compose sqrt(beta_BR beta_Rk) h_Rk R_Rk^(1/2).
  for (int k = 0; k < params.K; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    const CMat root = num::hermitian_sqrt_psd(cs.R_R[ku]);
    cs.h_eff_base[ku] =
        std::sqrt(cs.beta_BR * cs.beta_R[ku]) * (cs.h_R[ku] * root);
  }
  return cs;
}

CRowVec ChannelSet::effective_channel(int k, const PhaseVector& theta) const {
  if (k < 0 || k >= K) throw DomainError("effective_channel: user index out of range");
  if (theta.size() != N) throw DomainError("effective_channel: phase vector size mismatch");
  const CVec v = theta.phasor();
  return (h_eff_base[static_cast<std::size_t>(k)].transpose().cwiseProduct(v))
             .transpose() *
         H_BR;
}

CRowVec ChannelSet::per_pre_channel(int k, int n) const {
  if (k < 0 || k >= K) throw DomainError("per_pre_channel: user index out of range");
  if (n < 0 || n >= N) throw DomainError("per_pre_channel: element index out of range");
  return h_eff_base[static_cast<std::size_t>(k)][n] * H_BR.row(n);
}

EffectiveLinks::EffectiveLinks(const ChannelSet& cs, double noise_power)
    : sigma(1.0), M(cs.M), K(cs.K), N(cs.N) {
  if (!(noise_power > 0.0)) {
    throw DomainError("EffectiveLinks: noise power must be positive");
  }
  const double scale = 1.0 / std::sqrt(noise_power);
  per_pre.resize(static_cast<std::size_t>(cs.K));
  for (int k = 0; k < cs.K; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    per_pre[ku] =
        (scale * cs.h_eff_base[ku]).transpose().asDiagonal() * cs.H_BR;
  }
}

CRowVec EffectiveLinks::effective(int k, const PhaseVector& theta) const {
  return effective(k, theta.phasor());
}

CRowVec EffectiveLinks::effective(int k, const CVec& phasor) const {
  return phasor.transpose() * per_pre[static_cast<std::size_t>(k)];
}

}  // namespace risfbl::channel
