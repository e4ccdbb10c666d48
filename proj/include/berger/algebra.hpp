#pragma once

#include <cmath>
#include <numbers>
#include <utility>

#include "berger/types.hpp"

namespace berger {

inline constexpr Scalar kOrbitTol = 1e-10;

// Z_p deck action: [k] o (z, w) = (eps^k z, eps^{kq} w), eps = e^{i 2pi/p}.
inline SpherePoint deck_transform(const SpherePoint& x, int k, int p, int q) {
  const Scalar a = 2.0 * std::numbers::pi * k / p;       // acts on z = q0 + i q3
  const Scalar b = 2.0 * std::numbers::pi * k * q / p;   // acts on w = q1 + i q2
  const Scalar ca = std::cos(a), sa = std::sin(a);
  const Scalar cb = std::cos(b), sb = std::sin(b);
  return SpherePoint(ca * x[0] - sa * x[3],
                     cb * x[1] - sb * x[2],
                     sb * x[1] + cb * x[2],
                     sa * x[0] + ca * x[3]);
}

// Linear forms whose product cuts out the gluing surface dL:
//   ell_-(q) = q3 cos(pi/p) - q0 sin(pi/p),  ell_+(q) = q3 cos(pi/p) + q0 sin(pi/p).
inline std::pair<Scalar, Scalar> boundary_defect(const SpherePoint& x, int p) {
  if (p < 2)
    throw std::invalid_argument("boundary_defect: p must be >= 2 (for p = 1 use q3^2)");
  const Scalar c = std::cos(std::numbers::pi / p);
  const Scalar s = std::sin(std::numbers::pi / p);
  return {x[3] * c - x[0] * s, x[3] * c + x[0] * s};
}

inline bool in_model_domain(const SpherePoint& x, int p, Scalar tol = kOrbitTol) {
  if (p == 1) return true;
  const Scalar s = std::sin(std::numbers::pi / p);
  return x[0] >= -tol &&
         x[1] * x[1] + x[2] * x[2] + x[3] * x[3] / (s * s) <= 1.0 + tol;
}

// Canonical orbit representative inside L.  The unique deck image with
// arg(z) in [-pi/p, pi/p) is chosen, so the rule-(1) gluing boundary resolves
// to the q3 <= 0 sheet.  On the equatorial circle z = 0 the image with
// arg(w) in [0, 2pi/p) is taken instead.
inline LensPoint canonicalize(const SpherePoint& x, int p, int q) {
  if (p == 1) return LensPoint{x, p, q};
  const Scalar two_pi = 2.0 * std::numbers::pi;
  int k;
  if (std::hypot(x[0], x[3]) < 1e-14) {
    // equatorial boundary: pick k by the argument of w
    k = 0;
    Scalar best = two_pi;
    const Scalar b = std::atan2(x[2], x[1]);
    for (int j = 0; j < p; ++j) {
      Scalar ang = std::fmod(b + two_pi * j * q / p, two_pi);
      if (ang < 0.0) ang += two_pi;
      if (ang < best) {
        best = ang;
        k = j;
      }
    }
  } else {
    const Scalar m = std::atan2(x[3], x[0]) * p / two_pi;
    k = -static_cast<int>(std::floor(m + 0.5));
    k = ((k % p) + p) % p;
  }
  return LensPoint{deck_transform(x, k, p, q), p, q};
}

// Distance between Z_p-orbits measured in the ambient R^4 chord.
inline Scalar lens_chordal_distance(const SpherePoint& a, const SpherePoint& b, int p, int q) {
  Scalar best2 = std::numeric_limits<Scalar>::infinity();
  for (int k = 0; k < p; ++k) {
    const Scalar d2 = (a - deck_transform(b, k, p, q)).squaredNorm();
    if (d2 < best2) best2 = d2;
  }
  return std::sqrt(best2);
}

}  // namespace berger
