#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "berger/algebra.hpp"
#include "berger/metric.hpp"
#include "berger/types.hpp"

namespace berger {

// Closed-form geodesic through the identity of SU_2 with initial covector c:
//   q0 = cos(tau) cos(a) - h3bar sin(tau) sin(a)
//   (q1, q2) = sin(tau) R_{-a} (h1bar, h2bar)
//   q3 = cos(tau) sin(a) + h3bar sin(tau) cos(a),   a = tau eta h3bar.
inline SpherePoint exp_su2(const InitialCovector& c, Scalar tau, Scalar eta) {
  const Scalar a = tau * eta * c.h3bar;
  const Scalar ct = std::cos(tau), st = std::sin(tau);
  const Scalar ca = std::cos(a), sa = std::sin(a);
  const Scalar h1 = c.h1bar(), h2 = c.h2bar();
  return SpherePoint(ct * ca - c.h3bar * st * sa,
                     st * (ca * h1 + sa * h2),
                     st * (-sa * h1 + ca * h2),
                     ct * sa + c.h3bar * st * ca);
}

// Exponential map of the lens space, arclength parametrized.
inline LensPoint exp_lens(const InitialCovector& c, Scalar t, const MetricParams& params) {
  const Scalar tau = tau_of_t(t, c.h3bar, params);
  return canonicalize(exp_su2(c, tau, params.eta()), params.p, params.q);
}

inline std::vector<std::pair<Scalar, LensPoint>> geodesic_trace(const InitialCovector& c,
                                                                Scalar t_max, int n,
                                                                const MetricParams& params) {
  if (n < 2) throw std::invalid_argument("geodesic_trace: need n >= 2 samples");
  if (!(t_max > 0.0)) throw std::invalid_argument("geodesic_trace: t_max must be positive");
  std::vector<std::pair<Scalar, LensPoint>> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    const Scalar t = t_max * i / (n - 1);
    out.emplace_back(t, exp_lens(c, t, params));
  }
  return out;
}

}  // namespace berger
