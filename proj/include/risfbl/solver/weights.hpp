// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "risfbl/common.hpp"

namespace risfbl::solver {

/// Per-user weights of the weighted-sum inner problem. The geometric-mean
/// rule produces entries >= 1 with the best-rate user at exactly 1; the
/// sum-rate variant fixes every entry to 1.
struct Weights {
  RVec gamma;

  static Weights ones(Eigen::Index K) { return {RVec::Ones(K)}; }
};

/// gamma_k = (max rate) / rate_k. Throws NonpositiveRate when any entry is
/// not strictly positive (the caller falls back to the warm start).
Weights update_weights(const RVec& rates);

}  // namespace risfbl::solver
