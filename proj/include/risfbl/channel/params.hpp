// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "risfbl/common.hpp"

namespace risfbl::channel {

/// Scenario scalars, all in linear units except the antenna gains (dBi).
struct SystemParams {
  int M = 10;              // BS antennas
  int K = 10;              // users
  int N = 100;             // reflecting elements
  double P = 0.1;          // transmit power budget, watts
  double sigma = 3.981071705534973e-15;  // total noise power, watts
  double B = 1e6;          // bandwidth, Hz
  double t_t = 1e-4;       // transmission duration, seconds
  double eps_c = 1e-5;     // decoding error probability
  double G_BS = 5.0;       // BS antenna gain, dBi
  double G_RIS = 5.0;      // RIS element gain, dBi
  double nu_t = 1e-3;      // relative convergence tolerance
  std::uint64_t seed = 1;

  void validate() const;
};

using Vec3 = std::array<double, 3>;

/// Node positions in meters.
struct Geometry {
  Vec3 bs_pos{20.0, 0.0, 25.0};
  Vec3 ris_pos{0.0, 30.0, 40.0};
  std::vector<Vec3> user_pos;

  void validate() const;
  double dist_bs_ris() const;
  double dist_ris_user(int k) const;
};

/// Placement region for random user drops. The rectangle is a config
/// default, not a physical constant.
struct PlacementConfig {
  double x_min = 20.0, x_max = 80.0;
  double y_min = 0.0, y_max = 60.0;
  double height = 1.5;
};

double distance(const Vec3& a, const Vec3& b);

/// Total noise power in watts for a density of `dbm_per_hz` over bandwidth B.
double noise_power_watts(double dbm_per_hz, double bandwidth_hz);

double dbm_to_watts(double dbm);

}  // namespace risfbl::channel
