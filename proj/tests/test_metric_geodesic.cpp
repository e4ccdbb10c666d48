#include <doctest.h>

#include <numbers>
#include <random>

#include "berger/geodesic.hpp"

using namespace berger;

namespace {
const Scalar pi = std::numbers::pi;
}

TEST_CASE("covector norm") {
  const MetricParams flat(2, 1, 1.0, 1.0);
  CHECK(covector_norm(0.0, flat) == doctest::Approx(1.0).epsilon(1e-15));
  const MetricParams pr = MetricParams::from_eta(2, 1, 1.0, 3.0);
  CHECK(covector_norm(1.0, pr) == doctest::Approx(0.5).epsilon(1e-14));
  const MetricParams mixed = MetricParams::from_eta(2, 1, 4.0, 3.0);
  CHECK(covector_norm(0.5, mixed) == doctest::Approx(2.0 / std::sqrt(1.75)).epsilon(1e-14));
  for (int i = 0; i <= 50; ++i) {
    const Scalar x = -1.0 + 2.0 * i / 50.0;
    CHECK(covector_norm(x, mixed) == doctest::Approx(covector_norm(-x, mixed)).epsilon(1e-15));
  }
}

TEST_CASE("tau <-> t round trip") {
  const MetricParams params = MetricParams::from_eta(3, 1, 2.0, 0.7);
  for (Scalar x : {-0.9, 0.0, 0.4, 1.0})
    for (Scalar tau : {0.0, 0.3, 1.7, 3.0})
      CHECK(tau_of_t(t_of_tau(tau, x, params), x, params) ==
            doctest::Approx(tau).epsilon(1e-13));
  // tau = pi at h3bar = 1, eta = 3 winds the fiber angle twice: two loops of
  // Berger length 2 pi sqrt(I3) each
  const MetricParams pr = MetricParams::from_eta(2, 1, 1.0, 3.0);
  CHECK(t_of_tau(pi, 1.0, pr) == doctest::Approx(4.0 * pi).epsilon(1e-13));
}

TEST_CASE("exp_su2 closed forms") {
  CHECK((exp_su2(InitialCovector(0.3, 1.1), 0.0, 0.5) - identity_point()).norm() < 1e-15);
  CHECK((exp_su2(InitialCovector(0.0, 0.0), pi / 2.0, 0.7) - SpherePoint(0, 1, 0, 0)).norm() <
        1e-14);
  // h3bar = 1 collapses to the fiber circle at speed 1 + eta
  for (Scalar tau : {0.2, 1.0, 2.5}) {
    const SpherePoint x = exp_su2(InitialCovector(1.0, 0.4), tau, 0.8);
    CHECK(x[0] == doctest::Approx(std::cos(tau * 1.8)).epsilon(1e-13));
    CHECK(x[3] == doctest::Approx(std::sin(tau * 1.8)).epsilon(1e-13));
    CHECK(std::abs(x[1]) + std::abs(x[2]) < 1e-14);
  }
  // eta = 0: great circles
  for (Scalar tau : {0.3, 1.2, 2.9}) {
    const SpherePoint x = exp_su2(InitialCovector(0.6, 2.0), tau, 0.0);
    CHECK(x[0] == doctest::Approx(std::cos(tau)).epsilon(1e-13));
    CHECK(x.tail<3>().norm() == doctest::Approx(std::abs(std::sin(tau))).epsilon(1e-13));
  }
}

TEST_CASE("exp_su2 symmetries") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<Scalar> uh(-1.0, 1.0), uphi(0.0, 2.0 * pi), ut(0.0, 3.0);
  for (int it = 0; it < 100; ++it) {
    const Scalar h3 = uh(rng), phi = uphi(rng), tau = ut(rng), eta = uh(rng) * 1.9 + 1.0;
    const SpherePoint x = exp_su2(InitialCovector(h3, phi), tau, eta);
    CHECK(x.norm() == doctest::Approx(1.0).epsilon(1e-13));
    // rotation equivariance in phi
    const Scalar alpha = 0.9;
    const SpherePoint y = exp_su2(InitialCovector(h3, phi + alpha), tau, eta);
    CHECK(y[0] == doctest::Approx(x[0]).epsilon(1e-12));
    CHECK(y[3] == doctest::Approx(x[3]).epsilon(1e-12));
    const Scalar ca = std::cos(alpha), sa = std::sin(alpha);
    CHECK(y[1] == doctest::Approx(ca * x[1] - sa * x[2]).epsilon(1e-12));
    CHECK(y[2] == doctest::Approx(sa * x[1] + ca * x[2]).epsilon(1e-12));
    // reflection: negating h3bar negates q3, keeps q0
    const SpherePoint z = exp_su2(InitialCovector(-h3, phi), tau, eta);
    CHECK(z[0] == doctest::Approx(x[0]).epsilon(1e-12));
    CHECK(z[3] == doctest::Approx(-x[3]).epsilon(1e-12));
  }
}

TEST_CASE("exp_lens and traces") {
  const MetricParams so3(2, 1, 1.0, 1.0);
  CHECK((exp_lens(InitialCovector(0.2, 0.3), 0.0, so3).rep - identity_point()).norm() < 1e-15);
  CHECK((exp_lens(InitialCovector(0.0, 0.0), pi, so3).rep - SpherePoint(0, 1, 0, 0))
            .norm() < 1e-13);
  const MetricParams l41(4, 1, 1.0, 1.0);
  const Scalar t_fiber = t_of_tau(pi / 2.0, 1.0, l41);
  CHECK((exp_lens(InitialCovector(1.0, 0.0), t_fiber, l41).rep - identity_point()).norm() <
        1e-12);

  const auto trace = geodesic_trace(InitialCovector(0.5, 1.0), 2.0, 5, so3);
  CHECK(trace.size() == 5);
  CHECK(trace.front().first == 0.0);
  CHECK(trace.back().first == doctest::Approx(2.0));
  for (const auto& [t, x] : trace) CHECK(x.rep.norm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(geodesic_trace(InitialCovector(0.0, 0.0), 1.0, 1, so3),
                  std::invalid_argument);
}
