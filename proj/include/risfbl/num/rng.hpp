// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "risfbl/common.hpp"

namespace risfbl::num {

/// Seedable deterministic random stream (xoshiro256++ seeded via splitmix64).
///
/// Identical (seed, stream_id) pairs reproduce identical draw sequences
/// bit-exactly on every platform; all transforms below are implemented in
/// terms of the raw 64-bit output, never through std:: distributions.
/// A stream is single-owner: one stream per worker, never shared.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t next_u64();

  /// Uniform on [0, 1), 53-bit resolution.
  double uniform01();

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi);

  /// Standard normal via Box-Muller (two uniforms per pair; sine branch
  /// discarded in the scalar call so draw counts stay predictable).
  double normal();

  /// Circularly-symmetric complex normal CN(0, 1); consumes one
  /// Box-Muller pair.
  Complex complex_normal();

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

 private:
  std::uint64_t s_[4];
  std::uint64_t seed_;
  std::uint64_t stream_id_;
};

}  // namespace risfbl::num
