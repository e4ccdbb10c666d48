#pragma once

#include <cmath>
#include <numbers>
#include <utility>

#include "berger/metric.hpp"
#include "berger/roots.hpp"
#include "berger/types.hpp"

namespace berger {

// First Maxwell / conjugate / cut data at one covector, all tau values in the
// trigonometric parameter, t_cut in arclength.
struct CutData {
  Scalar tau_ell_minus;
  Scalar tau_ell_plus;
  Scalar tau_ell;
  Scalar tau_conj;
  Scalar t_cut;
  Regime regime;
  Scalar h3bar;
};

namespace detail {

// q3 along the geodesic; the p = 1 stratum function.
inline Scalar q3_along(Scalar tau, Scalar h3bar, Scalar eta) {
  const Scalar a = tau * eta * h3bar;
  return std::cos(tau) * std::sin(a) + h3bar * std::sin(tau) * std::cos(a);
}

}  // namespace detail

// ell_-(tau) = cos(tau) sin(tau eta h3bar - pi/p) + h3bar sin(tau) cos(tau eta h3bar - pi/p);
// ell_+ is the +pi/p twin.  For p = 1 both degenerate to q3(tau).
inline Scalar ell_minus(Scalar tau, Scalar h3bar, Scalar eta, int p) {
  if (p == 1) return detail::q3_along(tau, h3bar, eta);
  const Scalar a = tau * eta * h3bar - std::numbers::pi / p;
  return std::cos(tau) * std::sin(a) + h3bar * std::sin(tau) * std::cos(a);
}

inline Scalar ell_plus(Scalar tau, Scalar h3bar, Scalar eta, int p) {
  if (p == 1) return detail::q3_along(tau, h3bar, eta);
  const Scalar a = tau * eta * h3bar + std::numbers::pi / p;
  return std::cos(tau) * std::sin(a) + h3bar * std::sin(tau) * std::cos(a);
}

// Scan horizon for the ell family.  The extreme roots grow like
// (p-1)pi/(p(1+eta)) as eta -> -1, so the cap has to follow that scale.
inline RootConfig ell_root_config(int p, Scalar eta) {
  RootConfig cfg;
  const Scalar pi = std::numbers::pi;
  cfg.tau_cap = p == 1 ? pi + 2.0 * pi / (1.0 + eta)
                       : pi + 2.0 * (p - 1) * pi / (p * (1.0 + eta));
  return cfg;
}

inline Scalar tau_ell_minus(Scalar h3bar, Scalar eta, int p) {
  const Scalar pi = std::numbers::pi;
  // closed forms at the poles, where the numeric root outruns any fixed cap
  if (h3bar == 1.0) return pi / (p * (1.0 + eta));
  if (h3bar == -1.0) return p == 1 ? pi / (1.0 + eta) : (p - 1) * pi / (p * (1.0 + eta));
  if (p == 1 && h3bar == 0.0) {
    // q3 vanishes identically on the axis; the continuity limit of the first
    // root of q3/h3bar is the first root of sin(tau) + eta tau cos(tau)
    if (eta <= 0.0) return pi;
    Scalar a = pi / 2.0, b = pi;
    for (int i = 0; i < 100; ++i) {
      const Scalar m = 0.5 * (a + b);
      (std::sin(m) + eta * m * std::cos(m) > 0.0 ? a : b) = m;
    }
    return 0.5 * (a + b);
  }
  return first_positive_root(
      [=](Scalar tau) { return ell_minus(tau, h3bar, eta, p); }, ell_root_config(p, eta));
}

inline Scalar tau_ell_plus(Scalar h3bar, Scalar eta, int p) {
  // ell_+(tau; x) = -ell_-(tau; -x), so the first roots coincide
  return tau_ell_minus(-h3bar, eta, p);
}

inline Scalar tau_ell(Scalar h3bar, Scalar eta, int p) {
  return h3bar >= 0.0 ? tau_ell_minus(h3bar, eta, p) : tau_ell_plus(h3bar, eta, p);
}

// Smallest positive root of -tau eta (1-h3bar^2) cos(tau) - (1+eta h3bar^2) sin(tau),
// capped at pi.  For eta <= 0 the cap is attained for every h3bar.
inline Scalar conjugate_tau(Scalar h3bar, Scalar eta) {
  const Scalar pi = std::numbers::pi;
  if (eta <= 0.0) return pi;
  const Scalar s = 1.0 - h3bar * h3bar;
  if (s == 0.0) return pi;
  // no root in (0, pi/2]: both terms are strictly negative there
  const Scalar w = 1.0 + eta * h3bar * h3bar;
  Scalar a = pi / 2.0, b = pi;
  for (int i = 0; i < 100; ++i) {
    const Scalar m = 0.5 * (a + b);
    (-m * eta * s * std::cos(m) - w * std::sin(m) < 0.0 ? a : b) = m;
  }
  return 0.5 * (a + b);
}

// First Maxwell time in tau units with its stratum tag.  The pi branch (the
// rotation symmetry) takes over only in the deep-oblate regime.
inline std::pair<Scalar, Regime> maxwell_tau(Scalar h3bar, const MetricParams& params) {
  const Scalar eta = params.eta();
  const Scalar threshold = -Scalar(params.p - 1) / params.p;
  if (eta < threshold && std::abs(h3bar) >= (params.p - 1) / (params.p * std::abs(eta)))
    return {std::numbers::pi, Regime::RotationStratum};
  return {tau_ell(h3bar, eta, params.p), Regime::BoundaryStratum};
}

inline CutData cut_time(Scalar h3bar, const MetricParams& params) {
  const Scalar eta = params.eta();
  CutData d;
  d.h3bar = h3bar;
  d.tau_ell_minus = tau_ell_minus(h3bar, eta, params.p);
  d.tau_ell_plus = tau_ell_plus(h3bar, eta, params.p);
  d.tau_ell = h3bar >= 0.0 ? d.tau_ell_minus : d.tau_ell_plus;
  d.tau_conj = conjugate_tau(h3bar, eta);
  const auto [tau_max, regime] = maxwell_tau(h3bar, params);
  d.regime = regime;
  d.t_cut = t_of_tau(tau_max, h3bar, params);
  return d;
}

}  // namespace berger
