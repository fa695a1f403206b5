// SPDX-License-Identifier: Apache-2.0

#include "risfbl/channel/params.hpp"

#include <cmath>

namespace risfbl::channel {

void SystemParams::validate() const {
  if (M < 1 || K < 1 || N < 1) {
    throw DomainError("SystemParams: M, K, N must be at least 1");
  }
  if (!(P > 0.0)) throw DomainError("SystemParams: P must be positive");
  if (!(sigma > 0.0)) throw DomainError("SystemParams: sigma must be positive");
  if (!(eps_c > 0.0 && eps_c < 1.0)) {
    throw DomainError("SystemParams: eps_c must lie in (0, 1)");
  }
  if (!(B * t_t > 0.0)) throw DomainError("SystemParams: B * t_t must be positive");
  if (!(nu_t > 0.0)) throw DomainError("SystemParams: nu_t must be positive");
}

double distance(const Vec3& a, const Vec3& b) {
  const double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

void Geometry::validate() const {
  if (!(dist_bs_ris() > 0.0)) {
    throw DomainError("Geometry: BS and RIS positions coincide");
  }
  for (int k = 0; k < static_cast<int>(user_pos.size()); ++k) {
    if (!(dist_ris_user(k) > 0.0)) {
      throw DomainError("Geometry: user coincides with the RIS");
    }
  }
}

double Geometry::dist_bs_ris() const { return distance(bs_pos, ris_pos); }

double Geometry::dist_ris_user(int k) const {
  return distance(ris_pos, user_pos.at(static_cast<std::size_t>(k)));
}

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double noise_power_watts(double dbm_per_hz, double bandwidth_hz) {
  return dbm_to_watts(dbm_per_hz + 10.0 * std::log10(bandwidth_hz));
}

}  // namespace risfbl::channel
