#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "berger/geodesic.hpp"
#include "berger/times.hpp"
#include "berger/types.hpp"

namespace berger {

struct NotReached : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoPartner : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleConfig {
  int n_h3 = 181;
  int n_phi = 256;
  Scalar tau_step = std::numbers::pi / 512.0;
  Scalar eps_match = 1e-3;
  Scalar t_refine_tol = 1e-6;
  Scalar t_horizon = 4.0 * std::numbers::pi;
  Scalar eps_slack = 2e-2;
  int n_seeds = 16;
};

struct CutPointReport {
  bool optimal_before;
  bool beaten_after;
  Scalar margin;
};

namespace oracle_detail {

inline std::vector<SpherePoint> deck_images(const SpherePoint& x, const MetricParams& params) {
  std::vector<SpherePoint> imgs;
  imgs.reserve(params.p);
  for (int k = 0; k < params.p; ++k) imgs.push_back(deck_transform(x, k, params.p, params.q));
  return imgs;
}

inline Scalar dist2_to_images(const SpherePoint& x, const std::vector<SpherePoint>& imgs) {
  Scalar best = std::numeric_limits<Scalar>::infinity();
  for (const auto& im : imgs) best = std::min(best, (x - im).squaredNorm());
  return best;
}

struct Approach {
  Scalar dist;
  Scalar t;
};

// Closest approach of the geodesic with covector (h3, phi) to the orbit of
// the target, over arclength [0, t_cap].  Incremental rotations keep the
// march cheap; accumulated drift over a few thousand steps is far below the
// matching tolerance.
inline Approach closest_approach(Scalar h3, Scalar phi, const std::vector<SpherePoint>& imgs,
                                 const MetricParams& params, Scalar t_cap,
                                 const OracleConfig& cfg, bool refine) {
  const Scalar eta = params.eta();
  const Scalar tau_cap = tau_of_t(t_cap, h3, params);
  const InitialCovector c(h3, phi);
  const Scalar h1 = c.h1bar(), h2 = c.h2bar();
  const Scalar rate = eta * h3;  // a = rate * tau

  auto point_at = [&](Scalar ct, Scalar st, Scalar ca, Scalar sa) {
    return SpherePoint(ct * ca - h3 * st * sa, st * (ca * h1 + sa * h2),
                       st * (-sa * h1 + ca * h2), ct * sa + h3 * st * ca);
  };

  const int n = std::max(2, static_cast<int>(std::ceil(tau_cap / cfg.tau_step)) + 1);
  const Scalar dtau = tau_cap / (n - 1);
  const Scalar cdt = std::cos(dtau), sdt = std::sin(dtau);
  const Scalar cda = std::cos(rate * dtau), sda = std::sin(rate * dtau);

  Scalar ct = 1.0, st = 0.0, ca = 1.0, sa = 0.0;
  Scalar best2 = dist2_to_images(point_at(ct, st, ca, sa), imgs);
  int best_i = 0;
  for (int i = 1; i < n; ++i) {
    const Scalar nct = ct * cdt - st * sdt, nst = st * cdt + ct * sdt;
    const Scalar nca = ca * cda - sa * sda, nsa = sa * cda + ca * sda;
    ct = nct;
    st = nst;
    ca = nca;
    sa = nsa;
    const Scalar d2 = dist2_to_images(point_at(ct, st, ca, sa), imgs);
    if (d2 < best2) {
      best2 = d2;
      best_i = i;
    }
  }
  Scalar best_tau = best_i * dtau;
  if (refine) {
    auto dist_at = [&](Scalar tau) {
      return dist2_to_images(exp_su2(c, tau, eta), imgs);
    };
    Scalar a = std::max(0.0, (best_i - 1) * dtau);
    Scalar b = std::min(tau_cap, (best_i + 1) * dtau);
    const Scalar gr = (std::sqrt(5.0) - 1.0) / 2.0;
    Scalar x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    Scalar f1 = dist_at(x1), f2 = dist_at(x2);
    while (b - a > 1e-12) {
      if (f1 > f2) {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + gr * (b - a);
        f2 = dist_at(x2);
      } else {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - gr * (b - a);
        f1 = dist_at(x1);
      }
    }
    best_tau = 0.5 * (a + b);
    best2 = dist_at(best_tau);
  }
  return Approach{std::sqrt(best2), t_of_tau(best_tau, h3, params)};
}

struct Seed {
  Scalar dist;
  int i;
  int j;
};

struct Shot {
  Scalar dist;
  Scalar t;
  Scalar h3;
  Scalar phi;
};

// Local coordinate descent in (h3bar, phi) from one starting covector, with a
// golden-section inner search in tau.
inline Shot refine_from(const std::vector<SpherePoint>& imgs, const MetricParams& params,
                        Scalar t_cap, const OracleConfig& cfg, Scalar h3, Scalar phi) {
  const Scalar two_pi = 2.0 * std::numbers::pi;
  const Scalar dh = 2.0 / (cfg.n_h3 - 1);
  const Scalar dp = two_pi / cfg.n_phi;
  const Scalar gr = (std::sqrt(5.0) - 1.0) / 2.0;
  auto objective = [&](Scalar x, Scalar f) {
    return closest_approach(std::clamp(x, -1.0, 1.0), f, imgs, params, t_cap, cfg, true);
  };
  Approach cur = objective(h3, phi);
  // Axis-aligned descent zigzags slowly down diagonal valleys; enough rounds
  // are needed to close the last ~one-grid-cell gap to below eps_match.
  for (int round = 0; round < 10; ++round) {
    for (int dim = 0; dim < 2; ++dim) {
      const Scalar span = (dim == 0 ? dh : dp) / (round + 1);
      Scalar a = (dim == 0 ? h3 : phi) - span;
      Scalar b = (dim == 0 ? h3 : phi) + span;
      auto eval = [&](Scalar v) {
        return dim == 0 ? objective(v, phi).dist : objective(h3, v).dist;
      };
      Scalar x1 = b - gr * (b - a), x2 = a + gr * (b - a);
      Scalar f1 = eval(x1), f2 = eval(x2);
      for (int it = 0; it < 40 && b - a > 1e-11; ++it) {
        if (f1 > f2) {
          a = x1;
          x1 = x2;
          f1 = f2;
          x2 = a + gr * (b - a);
          f2 = eval(x2);
        } else {
          b = x2;
          x2 = x1;
          f2 = f1;
          x1 = b - gr * (b - a);
          f1 = eval(x1);
        }
      }
      (dim == 0 ? h3 : phi) = 0.5 * (a + b);
      h3 = std::clamp(h3, -1.0, 1.0);
    }
    cur = objective(h3, phi);
  }
  return Shot{cur.dist, cur.t, std::clamp(h3, -1.0, 1.0), phi};
}

// Approaches over the covector grid, then local golden-section descent in
// (h3bar, phi) around each leading seed.  Returns all refined seeds (several
// distinct geodesics can hit the same orbit; the earliest arrival is not
// always the closest approach).  Deterministic: fixed grids, fixed seed
// order, no randomness.
inline std::vector<Shot> refined_shots(const std::vector<SpherePoint>& imgs,
                                       const MetricParams& params, Scalar t_cap,
                                       const OracleConfig& cfg) {
  const Scalar two_pi = 2.0 * std::numbers::pi;
  std::vector<Scalar> dists(static_cast<size_t>(cfg.n_h3) * cfg.n_phi);
  for (int i = 0; i < cfg.n_h3; ++i) {
    const Scalar h3 = -1.0 + 2.0 * i / (cfg.n_h3 - 1);
    for (int j = 0; j < cfg.n_phi; ++j) {
      const Scalar phi = two_pi * j / cfg.n_phi;
      dists[static_cast<size_t>(i) * cfg.n_phi + j] =
          closest_approach(h3, phi, imgs, params, t_cap, cfg, false).dist;
    }
  }
  std::vector<Seed> order;
  order.reserve(dists.size());
  for (int i = 0; i < cfg.n_h3; ++i)
    for (int j = 0; j < cfg.n_phi; ++j)
      order.push_back(Seed{dists[static_cast<size_t>(i) * cfg.n_phi + j], i, j});
  std::sort(order.begin(), order.end(), [](const Seed& a, const Seed& b) {
    if (a.dist != b.dist) return a.dist < b.dist;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });
  std::vector<Seed> seeds;
  for (const Seed& s : order) {
    bool close = false;
    for (const Seed& t : seeds) {
      const int dj = std::abs(s.j - t.j);
      if (std::abs(s.i - t.i) <= 3 && std::min(dj, cfg.n_phi - dj) <= 3) {
        close = true;
        break;
      }
    }
    if (!close) seeds.push_back(s);
    if (static_cast<int>(seeds.size()) >= cfg.n_seeds) break;
  }

  std::vector<Shot> shots;
  shots.reserve(seeds.size());
  for (const Seed& s : seeds)
    shots.push_back(refine_from(imgs, params, t_cap, cfg, -1.0 + 2.0 * s.i / (cfg.n_h3 - 1),
                                two_pi * s.j / cfg.n_phi));
  std::sort(shots.begin(), shots.end(),
            [](const Shot& a, const Shot& b) { return a.dist < b.dist; });
  return shots;
}

// Earliest arclength at which the geodesic enters the eps ball around the
// target orbit, or +inf.
inline Scalar first_entry_time(Scalar h3, Scalar phi, const std::vector<SpherePoint>& imgs,
                               const MetricParams& params, Scalar t_cap,
                               const OracleConfig& cfg) {
  const Scalar eta = params.eta();
  const InitialCovector c(h3, phi);
  const Scalar eps2 = cfg.eps_match * cfg.eps_match;
  const Scalar tau_cap = tau_of_t(t_cap, h3, params);
  // stride well below the ball-crossing width so no entry is stepped over
  const Scalar stride = std::min(cfg.tau_step, cfg.eps_match / 4.0);
  const int n = std::max(2, static_cast<int>(std::ceil(tau_cap / stride)) + 1);
  const Scalar dtau = tau_cap / (n - 1);
  Scalar prev = 0.0;
  for (int i = 0; i <= n - 1; ++i) {
    const Scalar tau = i * dtau;
    if (dist2_to_images(exp_su2(c, tau, eta), imgs) < eps2) {
      // bisect the entry point
      Scalar a = prev, b = tau;
      while (b - a > cfg.t_refine_tol) {
        const Scalar m = 0.5 * (a + b);
        (dist2_to_images(exp_su2(c, m, eta), imgs) < eps2 ? b : a) = m;
      }
      return t_of_tau(b, h3, params);
    }
    prev = tau;
  }
  return std::numeric_limits<Scalar>::infinity();
}

// Earliest arrival over all refined shots that actually hit the orbit.
inline Scalar min_arrival(const std::vector<Shot>& shots, const std::vector<SpherePoint>& imgs,
                          const MetricParams& params, Scalar t_cap, const OracleConfig& cfg) {
  Scalar best = std::numeric_limits<Scalar>::infinity();
  for (const Shot& s : shots) {
    if (s.dist >= cfg.eps_match) continue;
    best = std::min(best, first_entry_time(s.h3, s.phi, imgs, params, t_cap, cfg));
  }
  return best;
}

}  // namespace oracle_detail

// Minimal geodesic arclength from o to the target orbit, by dense shooting.
inline Scalar brute_distance(const LensPoint& target, const MetricParams& params,
                             const OracleConfig& cfg) {
  using namespace oracle_detail;
  const auto imgs = deck_images(target.rep, params);
  if (dist2_to_images(identity_point(), imgs) < cfg.eps_match * cfg.eps_match) return 0.0;
  const auto shots = refined_shots(imgs, params, cfg.t_horizon, cfg);
  if (shots.empty() || shots.front().dist >= cfg.eps_match)
    throw NotReached("brute_distance: no geodesic entered the matching ball; grid too coarse");
  const Scalar t = min_arrival(shots, imgs, params, cfg.t_horizon, cfg);
  if (!std::isfinite(t))
    throw NotReached("brute_distance: refined geodesics lost the matching ball");
  return t;
}

// Certifies cut-point semantics at one covector: no connection more than
// eps_slack shorter exists to the point just before t_cut, and one exists to
// the point just after.
inline CutPointReport verify_cut_point(const InitialCovector& c, const MetricParams& params,
                                       Scalar delta, const OracleConfig& cfg) {
  using namespace oracle_detail;
  if (!(delta > 0.0 && delta < 0.2))
    throw std::invalid_argument("verify_cut_point: delta must lie in (0, 0.2)");
  const Scalar tc = cut_time(c.h3bar, params).t_cut;

  auto arrival_to = [&](Scalar t) {
    const auto imgs =
        deck_images(exp_su2(c, tau_of_t(t, c.h3bar, params), params.eta()), params);
    auto shots = refined_shots(imgs, params, t, cfg);
    // Competitors at a cut point live in the symmetry families h3bar =
    // +-c.h3bar; their basins can be narrow, so seed those two rows densely
    // on top of the generic grid.
    const Scalar two_pi = 2.0 * std::numbers::pi;
    const int n_row = 4 * cfg.n_phi;
    for (int sgn = 0; sgn < 2; ++sgn) {
      const Scalar h3r = sgn == 0 ? c.h3bar : -c.h3bar;
      if (sgn == 1 && c.h3bar == 0.0) break;
      std::vector<std::pair<Scalar, int>> row(n_row);
      for (int j = 0; j < n_row; ++j)
        row[j] = {closest_approach(h3r, two_pi * j / n_row, imgs, params, t, cfg, false).dist,
                  j};
      std::sort(row.begin(), row.end());
      std::vector<int> picked;
      for (const auto& [dist, j] : row) {
        bool close = false;
        for (int k : picked) {
          const int dj = std::abs(j - k);
          if (std::min(dj, n_row - dj) < n_row / 16) close = true;
        }
        if (!close) picked.push_back(j);
        if (picked.size() >= 4) break;
      }
      for (int j : picked)
        shots.push_back(refine_from(imgs, params, t, cfg, h3r, two_pi * j / n_row));
    }
    // the emitting geodesic arrives at t itself, so the minimum is finite
    return std::min(min_arrival(shots, imgs, params, t, cfg), t);
  };

  const Scalar t_before = (1.0 - delta) * tc;
  const Scalar t_after = (1.0 + delta) * tc;
  const Scalar arr_before = arrival_to(t_before);
  const Scalar arr_after = arrival_to(t_after);

  CutPointReport r;
  r.optimal_before = arr_before >= t_before - cfg.eps_slack;
  r.beaten_after = arr_after < t_after - cfg.eps_slack;
  r.margin = std::min(arr_before - (t_before - cfg.eps_slack),
                      (t_after - cfg.eps_slack) - arr_after);
  return r;
}

// Searches the symmetry families (h3bar, phi') and (-h3bar, phi') for a
// distinct geodesic of the same length reaching the same lens point at time
// t (default: the first Maxwell time of c).
inline std::pair<InitialCovector, Scalar> find_maxwell_partner(
    const InitialCovector& c, const MetricParams& params, const OracleConfig& cfg,
    Scalar t = std::numeric_limits<Scalar>::quiet_NaN()) {
  using namespace oracle_detail;
  if (params.p < 2) throw std::invalid_argument("find_maxwell_partner: p must be >= 2");
  if (std::isnan(t)) t = cut_time(c.h3bar, params).t_cut;
  const Scalar eta = params.eta();
  const auto imgs = deck_images(exp_su2(c, tau_of_t(t, c.h3bar, params), eta), params);
  const Scalar two_pi = 2.0 * std::numbers::pi;
  const Scalar dp = two_pi / cfg.n_phi;
  const Scalar excl = 1.5 * dp;

  auto mismatch = [&](Scalar h3, Scalar phi) {
    return std::sqrt(
        dist2_to_images(exp_su2(InitialCovector(h3, phi), tau_of_t(t, h3, params), eta), imgs));
  };
  auto is_self = [&](Scalar h3, Scalar phi) {
    if (h3 != c.h3bar && !(c.h3bar == 0.0 && h3 == 0.0)) return false;
    const Scalar d = std::abs(std::remainder(phi - c.phi, two_pi));
    return d < excl;
  };

  Scalar best = std::numeric_limits<Scalar>::infinity();
  Scalar best_h3 = c.h3bar, best_phi = c.phi;
  for (int sgn = 0; sgn < 2; ++sgn) {
    const Scalar h3 = sgn == 0 ? c.h3bar : -c.h3bar;
    if (sgn == 1 && c.h3bar == 0.0) break;
    for (int j = 0; j < cfg.n_phi; ++j) {
      const Scalar phi = dp * j;
      if (is_self(h3, phi)) continue;
      const Scalar m = mismatch(h3, phi);
      if (m < best) {
        best = m;
        best_h3 = h3;
        best_phi = phi;
      }
    }
  }
  // polish phi on the winning family
  const Scalar gr = (std::sqrt(5.0) - 1.0) / 2.0;
  Scalar a = best_phi - dp, b = best_phi + dp;
  Scalar x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  Scalar f1 = mismatch(best_h3, x1), f2 = mismatch(best_h3, x2);
  for (int it = 0; it < 80 && b - a > 1e-13; ++it) {
    if (f1 > f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = mismatch(best_h3, x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = mismatch(best_h3, x1);
    }
  }
  const Scalar phi_star = 0.5 * (a + b);
  if (!is_self(best_h3, phi_star)) {
    const Scalar m = mismatch(best_h3, phi_star);
    if (m < best) {
      best = m;
      best_phi = phi_star;
    }
  }
  if (best > cfg.eps_match)
    throw NoPartner("find_maxwell_partner: no equal-length partner within eps_match");
  Scalar phi_norm = std::fmod(best_phi, two_pi);
  if (phi_norm < 0.0) phi_norm += two_pi;
  return {InitialCovector(best_h3, phi_norm), best};
}

}  // namespace berger
