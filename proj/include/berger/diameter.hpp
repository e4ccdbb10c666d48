#pragma once

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "berger/times.hpp"
#include "berger/types.hpp"

namespace berger {

enum class CriticalKind { Min, Max };

struct CriticalPoint {
  Scalar h3bar;
  CriticalKind kind;
};

struct DiameterBound {
  Scalar value;
  char case_tag;  // 'a'..'e' per the (p, eta) partition
  bool exact;     // exact diameter for the homogeneous spaces L(p;1)
  Scalar argmax_h3bar;
};

// Interior critical points of t_cut on (0,1).  Critical points require the
// first root of ell_- to sit at tau = pi/2, which for p > 1 and eta > 0
// never happens away from the axis (tau_ell^- decreases strictly from pi/2),
// so the only smooth critical points are the deep-oblate minimum and the
// p = 1 prolate maximum.
inline std::vector<CriticalPoint> critical_points(const MetricParams& params) {
  const Scalar eta = params.eta();
  const int p = params.p;
  std::vector<CriticalPoint> out;
  if (p == 1) {
    if (eta > 1.0) out.push_back(CriticalPoint{1.0 / eta, CriticalKind::Max});
    return out;
  }
  const Scalar threshold = -Scalar(p - 1) / p;
  if (eta < threshold && p > 2)
    out.push_back(CriticalPoint{(p - 2) / (p * std::abs(eta)), CriticalKind::Min});
  return out;
}

// Lower bound for the diameter (exact for q = 1), case-split on (p, eta).
inline DiameterBound diameter_bound(const MetricParams& params) {
  const Scalar pi = std::numbers::pi;
  const Scalar eta = params.eta();
  const int p = params.p;
  const Scalar sI1 = std::sqrt(params.I1);
  const bool exact = params.q == 1;
  const Scalar threshold = -Scalar(p - 1) / p;

  if (eta < threshold) {
    // candidates: h3bar = 0 vs the regime corner h3bar = (p-1)/(p|eta|);
    // the corner wins iff (3 eta + 4) p^2 - 8 p + 4 <= 0
    const Scalar s = (3.0 * eta + 4.0) * p * p - 8.0 * p + 4.0;
    if (s <= 0.0) {
      const Scalar corner = (p - 1) / (p * std::abs(eta));
      return {2.0 * pi * sI1 * std::sqrt(1.0 + Scalar(p - 1) * (p - 1) / (p * p * eta)), 'a',
              exact, corner};
    }
    return {pi * sI1, 'a', exact, 0.0};
  }
  if (eta < 0.0) {
    if (p < 2.0 / std::sqrt(1.0 + eta))
      return {2.0 * pi * std::sqrt(params.I3) / p, 'b', exact, 1.0};
    return {pi * sI1, 'b', exact, 0.0};
  }
  if (eta == 0.0) {
    return {p == 1 ? 2.0 * pi * sI1 : pi * sI1, 'c', exact, 0.0};
  }
  if (p > 1) {
    if (p < 2.0 / std::sqrt(1.0 + eta))
      return {2.0 * pi * std::sqrt(params.I3) / p, 'd', exact, 1.0};
    return {pi * sI1, 'd', exact, 0.0};
  }
  if (eta <= 1.0) return {2.0 * pi * std::sqrt(params.I3), 'e', exact, 1.0};
  return {pi * params.I1 / std::sqrt(params.I1 - params.I3), 'e', exact, 1.0 / eta};
}

// Grid maximum of t_cut over [0,1] (evenness restricts the search), with a
// golden-section polish around the best cell.
inline std::pair<Scalar, Scalar> cut_time_max_numeric(const MetricParams& params, int n) {
  if (n < 100) throw std::invalid_argument("cut_time_max_numeric: need n >= 100");
  auto tc = [&](Scalar x) { return cut_time(x, params).t_cut; };
  Scalar best = -1.0, best_x = 0.0;
  for (int i = 0; i <= n; ++i) {
    const Scalar x = Scalar(i) / n;
    const Scalar v = tc(x);
    if (v > best) {
      best = v;
      best_x = x;
    }
  }
  Scalar a = std::max(0.0, best_x - 1.0 / n);
  Scalar b = std::min(1.0, best_x + 1.0 / n);
  const Scalar gr = (std::sqrt(5.0) - 1.0) / 2.0;
  Scalar x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  Scalar f1 = tc(x1), f2 = tc(x2);
  for (int it = 0; it < 80 && b - a > 1e-12; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = tc(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = tc(x1);
    }
  }
  const Scalar xm = 0.5 * (a + b);
  const Scalar fm = tc(xm);
  if (fm > best) {
    best = fm;
    best_x = xm;
  }
  return {best, best_x};
}

}  // namespace berger
