#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <string>
#include <vector>

#include "berger/geodesic.hpp"
#include "berger/times.hpp"
#include "berger/types.hpp"

namespace berger {

struct CutLocusSample {
  Scalar h3bar;
  Scalar phi;
  LensPoint point;
  Stratum stratum;
  Scalar t_cut;
  Scalar tau;
};

// Endpoints of all cut geodesics on a uniform (h3bar, phi) grid.  Rotation
// regime covectors land on the q3-axis interval, the rest on dL/~.
inline std::vector<CutLocusSample> sample_cut_locus(const MetricParams& params, int n_h3,
                                                    int n_phi) {
  if (params.p < 2)
    throw std::invalid_argument("sample_cut_locus: p must be >= 2");
  if (n_h3 < 2 || n_phi < 2)
    throw std::invalid_argument("sample_cut_locus: grid sizes must be >= 2");
  std::vector<CutLocusSample> out;
  out.reserve(static_cast<size_t>(n_h3) * n_phi);
  for (int i = 0; i < n_h3; ++i) {
    const Scalar h3 = -1.0 + 2.0 * i / (n_h3 - 1);
    const auto [tau, regime] = maxwell_tau(h3, params);
    const Scalar tc = t_of_tau(tau, h3, params);
    for (int j = 0; j < n_phi; ++j) {
      const Scalar phi = 2.0 * std::numbers::pi * j / n_phi;
      const InitialCovector c(h3, phi);
      out.push_back(CutLocusSample{
          h3, phi, canonicalize(exp_su2(c, tau, params.eta()), params.p, params.q),
          regime == Regime::RotationStratum ? Stratum::IntervalSegment
                                            : Stratum::BoundarySurface,
          tc, tau});
    }
  }
  return out;
}

struct SrLimitRow {
  Scalar eta;
  Scalar t_cut_0;
  Scalar t_cut_1;
  Scalar interval_lower_endpoint;
};

// Deep-oblate sweep toward the sub-Riemannian limit eta -> -1.  The interval
// stratum endpoint sin(pi |eta|) closes down to the puncture.
inline std::vector<SrLimitRow> sr_limit_sweep(const MetricParams& params_base,
                                              const std::vector<Scalar>& etas) {
  const Scalar threshold = -Scalar(params_base.p - 1) / params_base.p;
  std::vector<SrLimitRow> rows;
  rows.reserve(etas.size());
  for (Scalar eta : etas) {
    if (!(eta > -1.0 && eta < threshold))
      throw std::invalid_argument("sr_limit_sweep: eta outside the deep-oblate regime");
    const MetricParams params =
        MetricParams::from_eta(params_base.p, params_base.q, params_base.I1, eta);
    rows.push_back(SrLimitRow{eta, cut_time(0.0, params).t_cut, cut_time(1.0, params).t_cut,
                              std::sin(std::numbers::pi * std::abs(eta))});
  }
  return rows;
}

namespace detail {

inline std::string g17(Scalar v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

inline void export_locus_csv(const std::vector<CutLocusSample>& samples,
                             const std::string& path) {
  if (samples.empty())
    throw std::invalid_argument("export_locus_csv: no samples to write");
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("export_locus_csv: cannot open " + path);
  os << "h3bar,phi,t_cut,tau,regime,q0,q1,q2,q3,stratum\n";
  for (const auto& s : samples) {
    const char* regime =
        s.stratum == Stratum::IntervalSegment ? "rotation" : "boundary";
    os << detail::g17(s.h3bar) << ',' << detail::g17(s.phi) << ',' << detail::g17(s.t_cut)
       << ',' << detail::g17(s.tau) << ',' << regime << ',' << detail::g17(s.point.rep[0])
       << ',' << detail::g17(s.point.rep[1]) << ',' << detail::g17(s.point.rep[2]) << ','
       << detail::g17(s.point.rep[3]) << ',' << to_string(s.stratum) << '\n';
  }
  if (!os) throw std::runtime_error("export_locus_csv: write failed for " + path);
}

}  // namespace berger
