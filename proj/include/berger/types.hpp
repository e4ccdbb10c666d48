#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace berger {

using Scalar = double;

// Point on S^3, stored as (q0, q1, q2, q3) with z = q0 + i q3, w = q1 + i q2.
using SpherePoint = Eigen::Vector4d;

inline SpherePoint identity_point() { return SpherePoint(1.0, 0.0, 0.0, 0.0); }

// Axisymmetric metric on the lens space L(p;q): moments (I1, I1, I3).
struct MetricParams {
  int p;
  int q;
  Scalar I1;
  Scalar I3;

  MetricParams(int p_, int q_, Scalar I1_, Scalar I3_) : p(p_), q(q_), I1(I1_), I3(I3_) {
    if (p < 1) throw std::invalid_argument("MetricParams: p must be >= 1");
    if (q == 0) throw std::invalid_argument("MetricParams: q must be nonzero");
    if (std::gcd(std::abs(p), std::abs(q)) != 1)
      throw std::invalid_argument("MetricParams: p and q must be coprime");
    if (!(I1 > 0.0) || !(I3 > 0.0))
      throw std::invalid_argument("MetricParams: moments must be positive");
  }

  // Oblateness of the metric; eta -> -1 is the sub-Riemannian limit.
  Scalar eta() const { return I1 / I3 - 1.0; }

  static MetricParams from_eta(int p, int q, Scalar I1, Scalar eta) {
    if (!(eta > -1.0)) throw std::invalid_argument("MetricParams: eta must exceed -1");
    return MetricParams(p, q, I1, I1 / (1.0 + eta));
  }
};

// Canonical Z_p-orbit representative inside the model domain L.
struct LensPoint {
  SpherePoint rep;
  int p;
  int q;
};

// Point of the level surface C = {H = 1/2}, parametrized by the normalized
// vertical component h3bar in [-1,1] and the azimuth phi.
struct InitialCovector {
  Scalar h3bar;
  Scalar phi;

  InitialCovector(Scalar h3bar_, Scalar phi_) : h3bar(h3bar_), phi(phi_) {
    if (!(std::abs(h3bar) <= 1.0))
      throw std::invalid_argument("InitialCovector: |h3bar| must be <= 1");
  }

  Scalar h1bar() const { return std::sqrt(1.0 - h3bar * h3bar) * std::cos(phi); }
  Scalar h2bar() const { return std::sqrt(1.0 - h3bar * h3bar) * std::sin(phi); }
};

enum class Regime { BoundaryStratum, RotationStratum };
enum class Stratum { BoundarySurface, IntervalSegment };

inline const char* to_string(Regime r) {
  return r == Regime::BoundaryStratum ? "boundary" : "rotation";
}
inline const char* to_string(Stratum s) {
  return s == Stratum::BoundarySurface ? "surface" : "interval";
}

}  // namespace berger
