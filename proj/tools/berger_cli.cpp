#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "berger/berger.hpp"

namespace {

using berger::Scalar;

std::string g17(Scalar v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<Scalar> parse_list(const std::string& s) {
  std::vector<Scalar> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stod(item));
  }
  return out;
}

struct Report {
  int checked = 0;
  int failed = 0;
  void check(bool ok, const std::string& what) {
    ++checked;
    if (!ok) ++failed;
    std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
  }
};

int run_validate(const std::string& level) {
  using namespace berger;
  const Scalar pi = std::numbers::pi;
  Report r;

  // closed-form values at the axis and the poles
  for (int p : {2, 3, 4, 5, 8}) {
    for (Scalar eta : {-0.5, 0.0, 0.5, 2.0}) {
      r.check(std::abs(tau_ell_minus(0.0, eta, p) - pi / 2.0) < 1e-10 &&
                  std::abs(tau_ell_plus(0.0, eta, p) - pi / 2.0) < 1e-10,
              "tau_ell(0) = pi/2        p=" + std::to_string(p) + " eta=" + g17(eta));
      r.check(std::abs(tau_ell_minus(1.0, eta, p) - pi / (p * (1.0 + eta))) < 1e-10 &&
                  std::abs(tau_ell_plus(1.0, eta, p) - (p - 1) * pi / (p * (1.0 + eta))) < 1e-10,
              "tau_ell(1) closed forms  p=" + std::to_string(p) + " eta=" + g17(eta));
    }
  }

  // symmetry and ordering sweeps
  bool sym_ok = true, ord_ok = true;
  for (int p : {1, 2, 3, 5}) {
    for (Scalar eta : {-0.9, -0.5, 0.0, 0.5, 2.0}) {
      if (p == 1 && eta == -0.9) continue;  // deep-oblate threshold is 0 for p = 1
      const MetricParams params = MetricParams::from_eta(p, 1, 1.0, eta);
      for (int i = 0; i <= 200; ++i) {
        const Scalar x = -1.0 + 2.0 * i / 200.0;
        sym_ok = sym_ok && std::abs(tau_ell_minus(-x, eta, p) - tau_ell_plus(x, eta, p)) < 1e-10;
        sym_ok = sym_ok &&
                 std::abs(cut_time(-x, params).t_cut - cut_time(x, params).t_cut) < 1e-10;
        ord_ok = ord_ok && maxwell_tau(x, params).first <= conjugate_tau(x, eta) + 1e-9;
      }
    }
  }
  r.check(sym_ok, "reflection/evenness identities on the sweep grid");
  r.check(ord_ok, "maxwell_tau <= conjugate_tau on the sweep grid");

  // diameter bound vs numeric maximum, one parameter set per case
  struct Case {
    int p;
    Scalar eta;
  };
  for (const Case& c : {Case{2, -0.9}, Case{3, -0.5}, Case{2, 0.0}, Case{4, 0.5}, Case{1, 2.0}}) {
    const MetricParams params = MetricParams::from_eta(c.p, 1, 1.0, c.eta);
    const DiameterBound b = diameter_bound(params);
    const auto [mx, at] = cut_time_max_numeric(params, 400);
    r.check(std::abs(mx - b.value) < 1e-6,
            std::string("diameter case ") + b.case_tag + " numeric agreement  p=" +
                std::to_string(c.p) + " eta=" + g17(c.eta));
    (void)at;
  }

  if (level == "full") {
    // oracle spot checks, one covector per regime
    try {
      const MetricParams l31 = MetricParams::from_eta(3, 1, 1.0, -0.8);
      OracleConfig cfg;
      cfg.n_h3 = 121;
      cfg.n_phi = 128;
      for (Scalar h3 : {0.1, 0.9}) {
        const InitialCovector c(h3, 0.7);
        const CutPointReport rep = verify_cut_point(c, l31, 0.05, cfg);
        r.check(rep.optimal_before && rep.beaten_after,
                "cut-point semantics at h3bar=" + g17(h3) + " on L(3;1), eta=-0.8");
        const auto [partner, mism] = find_maxwell_partner(c, l31, cfg);
        r.check(mism < cfg.eps_match,
                "maxwell partner found at h3bar=" + g17(h3) + ", mismatch=" + g17(mism));
        (void)partner;
      }
    } catch (const NotReached& e) {
      std::cerr << e.what() << "\n";
      return 3;
    } catch (const NoPartner& e) {
      std::cerr << e.what() << "\n";
      return 3;
    }
  }

  std::cout << "checked " << r.checked << ", failed " << r.failed << "\n";
  return r.failed == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace berger;
  CLI::App app{"Geodesics, cut times, cut loci, and diameter bounds for Berger lens spaces"};
  app.require_subcommand(1);

  int p = 1, q = 1, nh3 = 64, nphi = 64, n_numeric = 400;
  Scalar I1 = 1.0, I3 = 1.0, h3 = 0.0, phi = 0.0, t = 0.0;
  std::string format = "json", out_path, etas_arg, level = "quick";
  bool numeric = false;

  auto add_metric_flags = [&](CLI::App* cmd, bool with_I3 = true) {
    cmd->add_option("--p", p, "lens parameter p")->required();
    cmd->add_option("--qq", q, "lens parameter q")->required();
    cmd->add_option("--I1", I1, "moment I1")->required();
    if (with_I3) cmd->add_option("--I3", I3, "moment I3")->required();
  };

  CLI::App* exp_cmd = app.add_subcommand("exp", "evaluate the exponential map");
  add_metric_flags(exp_cmd);
  exp_cmd->add_option("--h3", h3)->required();
  exp_cmd->add_option("--phi", phi)->required();
  exp_cmd->add_option("--t", t)->required();
  exp_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  CLI::App* cut_cmd = app.add_subcommand("cut-time", "cut / Maxwell / conjugate data");
  add_metric_flags(cut_cmd);
  cut_cmd->add_option("--h3", h3)->required();
  cut_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  CLI::App* conj_cmd = app.add_subcommand("conjugate-time", "first conjugate time");
  conj_cmd->add_option("--I1", I1)->required();
  conj_cmd->add_option("--I3", I3)->required();
  conj_cmd->add_option("--h3", h3)->required();

  CLI::App* locus_cmd = app.add_subcommand("cut-locus", "sample the cut locus to CSV");
  add_metric_flags(locus_cmd);
  locus_cmd->add_option("--nh3", nh3)->required();
  locus_cmd->add_option("--nphi", nphi)->required();
  locus_cmd->add_option("--out", out_path)->required();

  CLI::App* diam_cmd = app.add_subcommand("diameter", "diameter lower bound");
  add_metric_flags(diam_cmd);
  diam_cmd->add_flag("--numeric", numeric, "also run the grid maximizer");
  diam_cmd->add_option("--n", n_numeric, "grid size for --numeric");

  CLI::App* sr_cmd = app.add_subcommand("sr-limit", "deep-oblate sweep to CSV");
  sr_cmd->add_option("--p", p)->required();
  sr_cmd->add_option("--qq", q)->required();
  sr_cmd->add_option("--I1", I1)->required();
  sr_cmd->add_option("--etas", etas_arg, "comma-separated eta values")->required();
  sr_cmd->add_option("--out", out_path)->required();

  CLI::App* val_cmd = app.add_subcommand("validate", "run the validation suite");
  val_cmd->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*exp_cmd) {
      const MetricParams params(p, q, I1, I3);
      const LensPoint x = exp_lens(InitialCovector(h3, phi), t, params);
      if (format == "csv") {
        std::cout << "q0,q1,q2,q3\n"
                  << g17(x.rep[0]) << ',' << g17(x.rep[1]) << ',' << g17(x.rep[2]) << ','
                  << g17(x.rep[3]) << "\n";
      } else {
        std::cout << "{\"q0\":" << g17(x.rep[0]) << ",\"q1\":" << g17(x.rep[1])
                  << ",\"q2\":" << g17(x.rep[2]) << ",\"q3\":" << g17(x.rep[3]) << "}\n";
      }
    } else if (*cut_cmd) {
      const MetricParams params(p, q, I1, I3);
      const CutData d = cut_time(h3, params);
      if (format == "csv") {
        std::cout << "tau_ell_minus,tau_ell_plus,tau_ell,tau_conj,t_cut,regime\n"
                  << g17(d.tau_ell_minus) << ',' << g17(d.tau_ell_plus) << ','
                  << g17(d.tau_ell) << ',' << g17(d.tau_conj) << ',' << g17(d.t_cut) << ','
                  << to_string(d.regime) << "\n";
      } else {
        std::cout << "{\"tau_ell_minus\":" << g17(d.tau_ell_minus)
                  << ",\"tau_ell_plus\":" << g17(d.tau_ell_plus)
                  << ",\"tau_ell\":" << g17(d.tau_ell) << ",\"tau_conj\":" << g17(d.tau_conj)
                  << ",\"t_cut\":" << g17(d.t_cut) << ",\"regime\":\"" << to_string(d.regime)
                  << "\"}\n";
      }
    } else if (*conj_cmd) {
      const MetricParams params(1, 1, I1, I3);
      std::cout << "{\"tau_conj\":" << g17(conjugate_tau(h3, params.eta())) << "}\n";
    } else if (*locus_cmd) {
      const MetricParams params(p, q, I1, I3);
      export_locus_csv(sample_cut_locus(params, nh3, nphi), out_path);
    } else if (*diam_cmd) {
      const MetricParams params(p, q, I1, I3);
      const DiameterBound b = diameter_bound(params);
      std::cout << "{\"value\":" << g17(b.value) << ",\"case\":\"" << b.case_tag
                << "\",\"exact\":" << (b.exact ? "true" : "false")
                << ",\"argmax_h3\":" << g17(b.argmax_h3bar);
      if (numeric) {
        const auto [mx, at] = cut_time_max_numeric(params, n_numeric);
        std::cout << ",\"numeric_max\":" << g17(mx) << ",\"numeric_argmax\":" << g17(at);
      }
      std::cout << "}\n";
    } else if (*sr_cmd) {
      const MetricParams base(p, q, I1, I1);  // I3 placeholder, recomputed per eta
      const auto rows = sr_limit_sweep(base, parse_list(etas_arg));
      std::ofstream os(out_path, std::ios::binary);
      if (!os) throw std::runtime_error("cannot open " + out_path);
      os << "eta,t_cut_0,t_cut_1,interval_lower_endpoint\n";
      for (const auto& row : rows)
        os << g17(row.eta) << ',' << g17(row.t_cut_0) << ',' << g17(row.t_cut_1) << ','
           << g17(row.interval_lower_endpoint) << "\n";
    } else if (*val_cmd) {
      return run_validate(level);
    }
  } catch (const berger::NotReached& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const berger::NoPartner& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
