#include <doctest.h>

#include <numbers>

#include "berger/geodesic.hpp"
#include "berger/times.hpp"

using namespace berger;

namespace {
const Scalar pi = std::numbers::pi;
}

TEST_CASE("first_positive_root basics") {
  RootConfig cfg;
  CHECK(std::abs(first_positive_root([](Scalar x) { return std::sin(x); }, cfg) - pi) < 1e-11);
  CHECK(std::abs(first_positive_root([](Scalar x) { return std::cos(x); }, cfg) - pi / 2.0) <
        1e-11);
  CHECK(std::abs(first_positive_root([](Scalar x) { return x - 1.5; }, cfg) - 1.5) < 1e-11);
  RootConfig tight;
  tight.tau_cap = 1.0;
  CHECK_THROWS_AS(first_positive_root([](Scalar x) { return x + 1.0; }, tight), NoRootInRange);
}

TEST_CASE("ell reflection identity") {
  for (int p : {1, 2, 3, 5})
    for (Scalar eta : {-0.9, -0.3, 0.0, 1.5})
      for (Scalar x : {-0.8, -0.2, 0.0, 0.4, 1.0})
        for (Scalar tau : {0.1, 0.9, 2.2})
          CHECK(std::abs(ell_minus(tau, -x, eta, p) + ell_plus(tau, x, eta, p)) < 1e-14);
}

TEST_CASE("tau_ell closed forms and frozen values") {
  for (int p : {2, 3, 4, 5, 8}) {
    for (Scalar eta : {-0.9, -0.5, 0.0, 0.5, 2.0}) {
      if (eta <= -1.0 + 1.0 / p) continue;  // keep clear of extreme root growth
      CHECK(std::abs(tau_ell_minus(0.0, eta, p) - pi / 2.0) < 1e-10);
      CHECK(std::abs(tau_ell_plus(0.0, eta, p) - pi / 2.0) < 1e-10);
      CHECK(std::abs(tau_ell_minus(1.0, eta, p) - pi / (p * (1.0 + eta))) < 1e-12);
      CHECK(std::abs(tau_ell_plus(1.0, eta, p) - (p - 1) * pi / (p * (1.0 + eta))) < 1e-12);
    }
  }
  // frozen against an independent fine-grid scan
  CHECK(std::abs(tau_ell_minus(0.7, 2.0, 3) - 0.4917607858408155) < 1e-9);
  CHECK(std::abs(tau_ell_plus(0.7, 2.0, 3) - 0.9457942963736028) < 1e-9);
  CHECK(std::abs(tau_ell_minus(0.3, -0.8, 3) - 1.5230108931858162) < 1e-9);
  CHECK(std::abs(tau_ell_minus(0.5, 0.5, 5) - 0.7548106610468901) < 1e-9);
  // p = 2, eta = 0: ell_minus = -cos(tau)
  for (Scalar x : {-1.0, -0.5, 0.0, 0.3, 1.0})
    CHECK(std::abs(tau_ell(x, 0.0, 2) - pi / 2.0) < 1e-10);
  // p = 1, eta = 0: q3 = h3bar sin(tau)
  CHECK(std::abs(tau_ell(0.5, 0.0, 1) - pi) < 1e-10);
  // p = 1 axis: continuity limit, frozen value at eta = 0.5
  CHECK(std::abs(tau_ell(0.0, 0.5, 1) - 2.2889297281034047) < 1e-9);
  CHECK(std::abs(tau_ell(0.0, -0.3, 1) - pi) < 1e-12);
}

TEST_CASE("tau_ell symmetry sweep") {
  for (int p : {1, 2, 3, 5}) {
    for (Scalar eta : {-0.7, 0.0, 0.5, 2.0}) {
      for (int i = 0; i <= 100; ++i) {
        const Scalar x = -1.0 + 2.0 * i / 100.0;
        CHECK(std::abs(tau_ell_minus(-x, eta, p) - tau_ell_plus(x, eta, p)) < 1e-10);
        CHECK(std::abs(tau_ell(-x, eta, p) - tau_ell(x, eta, p)) < 1e-10);
      }
    }
  }
}

TEST_CASE("conjugate time") {
  for (Scalar x : {-1.0, -0.3, 0.0, 0.8, 1.0}) {
    CHECK(conjugate_tau(x, -0.5) == pi);
    CHECK(conjugate_tau(x, 0.0) == pi);
  }
  CHECK(conjugate_tau(1.0, 1.0) == pi);
  CHECK(conjugate_tau(-1.0, 1.0) == pi);
  CHECK(std::abs(conjugate_tau(0.0, 1.0) - 2.028757838110434) < 1e-9);
  for (Scalar eta : {0.2, 1.0, 3.0})
    for (int i = 0; i <= 40; ++i) {
      const Scalar x = -1.0 + 2.0 * i / 40.0;
      const Scalar tc = conjugate_tau(x, eta);
      CHECK(tc > pi / 2.0);
      CHECK(tc <= pi + 1e-12);
      // residual of the conjugate equation at the root
      if (std::abs(x) < 1.0)
        CHECK(std::abs(-tc * eta * (1.0 - x * x) * std::cos(tc) -
                       (1.0 + eta * x * x) * std::sin(tc)) < 1e-9);
    }
}

TEST_CASE("maxwell regime split") {
  const MetricParams deep = MetricParams::from_eta(3, 1, 1.0, -0.8);
  const auto [t1, r1] = maxwell_tau(0.9, deep);
  CHECK(t1 == pi);
  CHECK(r1 == Regime::RotationStratum);
  const auto [t2, r2] = maxwell_tau(0.1, deep);
  CHECK(r2 == Regime::BoundaryStratum);
  CHECK(t2 < pi);
  const MetricParams shallow = MetricParams::from_eta(2, 1, 1.0, 1.0);
  CHECK(maxwell_tau(0.9, shallow).second == Regime::BoundaryStratum);

  // Prop.-5-style regime inequalities around the corner |h3bar| = (p-1)/(p|eta|)
  const Scalar corner = 2.0 / (3.0 * 0.8);
  for (int i = 0; i <= 100; ++i) {
    const Scalar x = Scalar(i) / 100.0;
    const Scalar te = tau_ell(x, -0.8, 3);
    if (x >= corner)
      CHECK(te >= pi - 1e-9);
    else
      CHECK(te < pi + 1e-9);
  }
  for (int i = 0; i <= 100; ++i) {
    const Scalar x = Scalar(i) / 100.0;
    CHECK(tau_ell(x, 0.5, 3) <= pi + 1e-9);
  }
}

TEST_CASE("cut time") {
  const MetricParams deep = MetricParams::from_eta(3, 1, 1.0, -0.8);
  CHECK(std::abs(cut_time(0.0, deep).t_cut - pi) < 1e-12);
  // deep regime: the pole takes the rotation branch, t = 2 pi sqrt(1 + eta)
  CHECK(std::abs(cut_time(1.0, deep).t_cut - 2.0 * pi * std::sqrt(0.2)) < 1e-12);
  // pi-branch value 2 pi sqrt(1 + eta h3bar^2)
  CHECK(std::abs(cut_time(0.9, deep).t_cut - 2.0 * pi * std::sqrt(0.352)) < 1e-12);
  CHECK(std::abs(cut_time(0.9, deep).t_cut - 3.7277879495397555) < 1e-12);

  // endpoint identities: axis value pi sqrt(I1) needs p >= 2, the pole value
  // 2 pi sqrt(I3)/p needs the boundary regime eta >= -(p-1)/p
  for (int p : {2, 3, 5}) {
    for (Scalar eta : {-0.5, 0.0, 1.5}) {
      const MetricParams params = MetricParams::from_eta(p, 1, 1.0, eta);
      CHECK(std::abs(cut_time(0.0, params).t_cut - pi) < 1e-10);
      CHECK(std::abs(cut_time(1.0, params).t_cut -
                     2.0 * pi * std::sqrt(params.I3) / p) < 1e-10);
    }
  }
  // p = 1 pole, eta >= 0: half of the fiber circle
  CHECK(std::abs(cut_time(1.0, MetricParams::from_eta(1, 1, 1.0, 1.5)).t_cut -
                 2.0 * pi / std::sqrt(2.5)) < 1e-10);

  for (int p : {1, 2, 5}) {
    for (Scalar eta : {-0.5, 0.0, 1.5}) {
      const MetricParams params = MetricParams::from_eta(p, 1, 1.0, eta);
      for (int i = 0; i <= 60; ++i) {
        const Scalar x = -1.0 + 2.0 * i / 60.0;
        const CutData d = cut_time(x, params);
        CHECK(std::abs(d.t_cut - cut_time(-x, params).t_cut) < 1e-10);
        const Scalar tau_max = d.regime == Regime::RotationStratum ? pi : d.tau_ell;
        CHECK(tau_max <= d.tau_conj + 1e-9);
      }
    }
  }
}

TEST_CASE("maxwell endpoint lies on the boundary surface") {
  for (int p : {2, 3, 5}) {
    for (Scalar eta : {-0.5, 0.0, 1.5}) {
      const MetricParams params = MetricParams::from_eta(p, 1, 1.0, eta);
      for (int i = 0; i <= 40; ++i) {
        const Scalar x = -1.0 + 2.0 * i / 40.0;
        const auto [tau, regime] = maxwell_tau(x, params);
        REQUIRE(regime == Regime::BoundaryStratum);
        const SpherePoint end = exp_su2(InitialCovector(x, 0.9), tau, eta);
        const auto [lm, lp] = boundary_defect(end, p);
        CHECK(std::abs(lm * lp) < 1e-9);
      }
    }
  }
}
