#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "berger/types.hpp"

namespace berger {

struct NoRootInRange : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RootConfig {
  Scalar scan_step = std::numbers::pi / 2000.0;
  Scalar tol = 1e-12;
  Scalar tau_cap = 4.0 * std::numbers::pi;
};

// First positive root of a continuous scalar function: left-to-right
// bracketing from scan_step, then bisection.  The target family (the ell
// functions) has no double roots, so a sign change always brackets.
template <class F>
Scalar first_positive_root(F&& f, const RootConfig& cfg) {
  Scalar a = cfg.scan_step;
  Scalar fa = f(a);
  if (fa == 0.0) return a;
  for (Scalar b = a + cfg.scan_step; b <= cfg.tau_cap + cfg.scan_step; b += cfg.scan_step) {
    Scalar fb = f(b);
    if (fa * fb <= 0.0) {
      while (b - a > cfg.tol) {
        const Scalar m = 0.5 * (a + b);
        const Scalar fm = f(m);
        if (fa * fm <= 0.0) {
          b = m;
        } else {
          a = m;
          fa = fm;
        }
      }
      return 0.5 * (a + b);
    }
    a = b;
    fa = fb;
  }
  throw NoRootInRange("first_positive_root: no sign change in (0, " +
                      std::to_string(cfg.tau_cap) + "]");
}

}  // namespace berger
