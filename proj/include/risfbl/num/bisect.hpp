// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <utility>

#include "risfbl/common.hpp"

namespace risfbl::num {

/// Bisection root finder for a continuous monotone function with a sign
/// change on [lo, hi]. Stops when |f(mid)| <= tol or the bracket width
/// shrinks below tol * max(1, |mid|). Throws BracketingError when f(lo)
/// and f(hi) share a sign.
template <typename F>
double bisect_root(F&& f, double lo, double hi, double tol) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::signbit(flo) == std::signbit(fhi)) {
    throw BracketingError("bisect_root: no sign change on bracket");
  }
  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (lo + hi);
    const double fmid = f(mid);
    if (std::abs(fmid) <= tol) return mid;
    if (std::signbit(fmid) == std::signbit(flo)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
    if (hi - lo <= tol * std::max(1.0, std::abs(mid))) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace risfbl::num
