#pragma once

#include <cmath>

#include "berger/types.hpp"

namespace berger {

// |h| on the level surface H = 1/2:  |h| = sqrt(I1) / sqrt(1 + eta h3bar^2).
inline Scalar covector_norm(Scalar h3bar, const MetricParams& params) {
  return std::sqrt(params.I1) / std::sqrt(1.0 + params.eta() * h3bar * h3bar);
}

// Arclength t and the trigonometric parameter tau are proportional along a
// fixed geodesic: t = 2 I1 tau / |h|.  In this scaling the parametrization
// of exp_su2 is unit speed in the Berger metric.
inline Scalar t_of_tau(Scalar tau, Scalar h3bar, const MetricParams& params) {
  return 2.0 * params.I1 * tau / covector_norm(h3bar, params);
}

inline Scalar tau_of_t(Scalar t, Scalar h3bar, const MetricParams& params) {
  return t * covector_norm(h3bar, params) / (2.0 * params.I1);
}

}  // namespace berger
