// Copyright (c) 2026 sphere-lab contributors
// SPDX-License-Identifier: Apache-2.0
//
// sphere_lab: sample spectral radii of spherical-ensemble matrix products via
// the Gamma-ratio representation, evaluate the reference laws, and run the
// KS verification experiments.
//
// Exit codes: 0 pass, 1 fail (statistic > threshold), 2 usage error,
// 3 runtime error.

#include <CLI11.hpp>

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "spherelab/spherelab.hpp"

namespace {

struct GridSpec {
  double lo = 0.0, hi = 0.0, step = 0.0;
};

GridSpec parse_grid(const std::string& s) {
  GridSpec g;
  const auto first = s.find(':');
  const auto second = s.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos) {
    throw spherelab::UsageError("grid must be <lo:hi:step>, got '" + s + "'");
  }
  try {
    g.lo = std::stod(s.substr(0, first));
    g.hi = std::stod(s.substr(first + 1, second - first - 1));
    g.step = std::stod(s.substr(second + 1));
  } catch (const std::exception&) {
    throw spherelab::UsageError("grid must be numeric <lo:hi:step>, got '" + s + "'");
  }
  if (!(g.step > 0.0) || !(g.hi >= g.lo)) {
    throw spherelab::UsageError("grid requires hi >= lo and step > 0");
  }
  return g;
}

std::vector<std::int64_t> parse_int_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t pos = s.find(',', start);
    const std::string tok = s.substr(start, pos == std::string::npos ? pos : pos - start);
    if (tok.empty()) throw spherelab::UsageError("empty entry in integer list '" + s + "'");
    try {
      out.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      throw spherelab::UsageError("bad integer '" + tok + "' in list");
    }
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

void print_report_line(const spherelab::ExperimentReport& r) {
  std::cout << r.experiment << ": statistic=" << spherelab::format_double(r.statistic)
            << " threshold=" << spherelab::format_double(r.threshold)
            << (r.pass ? " PASS" : " FAIL") << " (" << r.runtime_ms << " ms)\n";
}

int report_exit(const spherelab::ExperimentReport& r) { return r.pass ? 0 : 1; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral radii of spherical-ensemble matrix products: samplers, "
               "reference laws, and KS experiments"};
  app.require_subcommand(1);

  // ---- sample ----
  auto* sample_cmd = app.add_subcommand("sample", "draw log spectral radii and write a CSV");
  spherelab::SampleEmitConfig sample_cfg;
  std::string sample_scale = "none";
  sample_cmd->add_option("--n", sample_cfg.n, "matrix dimension")->required();
  sample_cmd->add_option("--m", sample_cfg.m, "number of factors")->required();
  sample_cmd->add_option("--samples", sample_cfg.samples, "number of draws")->required();
  sample_cmd->add_option("--seed", sample_cfg.seed, "base RNG seed")->required();
  sample_cmd->add_option("--scale", sample_scale, "none|theorem1|theorem2")
      ->check(CLI::IsMember({"none", "theorem1", "theorem2"}));
  sample_cmd->add_flag("--trace", sample_cfg.trace, "emit per-index columns v_1..v_n");
  sample_cmd->add_option("--out", sample_cfg.out_path, "output CSV path")->required();

  // ---- limit-cdf ----
  auto* limit_cmd = app.add_subcommand("limit-cdf", "evaluate the m=1 limit CDF on a grid");
  std::int64_t limit_m = 1;
  std::string limit_grid;
  double limit_eps = spherelab::ThresholdDefaults{}.limit_cdf_eps;
  std::string limit_out;
  limit_cmd->add_option("--m", limit_m, "factor count (closed form exists only for m=1)")
      ->required();
  limit_cmd->add_option("--grid", limit_grid, "<lo:hi:step>")->required();
  limit_cmd->add_option("--eps", limit_eps, "certified truncation error");
  limit_cmd->add_option("--out", limit_out, "output CSV path")->required();

  // ---- finite-cdf ----
  auto* finite_cmd = app.add_subcommand("finite-cdf", "evaluate the exact finite-n CDF (m=1)");
  std::int64_t finite_n = 1;
  std::string finite_grid, finite_out;
  finite_cmd->add_option("--n", finite_n, "matrix dimension")->required();
  finite_cmd->add_option("--grid", finite_grid, "<lo:hi:step>")->required();
  finite_cmd->add_option("--out", finite_out, "output CSV path")->required();

  // ---- theorem1 ----
  auto* t1_cmd = app.add_subcommand("theorem1", "fixed-m limit experiment");
  spherelab::Theorem1Config t1_cfg;
  std::uint64_t t1_ref_seed = 0;
  bool t1_have_ref_seed = false;
  double t1_threshold = 0.0;
  bool t1_have_threshold = false;
  t1_cmd->add_option("--n", t1_cfg.n, "matrix dimension")->required();
  t1_cmd->add_option("--m", t1_cfg.m, "number of factors")->required();
  t1_cmd->add_option("--samples", t1_cfg.samples, "number of draws")->required();
  t1_cmd->add_option("--seed", t1_cfg.seed, "base RNG seed")->required();
  t1_cmd->add_option("--ref-samples", t1_cfg.ref_samples, "MC reference draws (m >= 2)");
  t1_cmd->add_option("--i-max", t1_cfg.i_max, "limit-sampler truncation index (m >= 2)");
  t1_cmd->add_option("--ref-seed", t1_ref_seed, "MC reference seed (default: derived)")
      ->each([&](const std::string&) { t1_have_ref_seed = true; });
  t1_cmd->add_option("--eps", t1_cfg.eps, "limit CDF truncation error (m = 1)");
  t1_cmd->add_flag("--exact", t1_cfg.exact_law, "compare against the exact finite-n law (m = 1)");
  t1_cmd->add_option("--threshold", t1_threshold, "override the pass threshold")
      ->each([&](const std::string&) { t1_have_threshold = true; });
  t1_cmd->add_option("--csv", t1_cfg.csv_path, "ECDF grid CSV path (default: derived from --json)");
  t1_cmd->add_option("--json", t1_cfg.json_path, "report JSON path")->required();

  // ---- theorem2 ----
  auto* t2_cmd = app.add_subcommand("theorem2", "divergent-m normal limit experiment");
  spherelab::Theorem2Config t2_cfg;
  double t2_threshold = 0.0;
  bool t2_have_threshold = false;
  t2_cmd->add_option("--n", t2_cfg.n, "matrix dimension")->required();
  t2_cmd->add_option("--m", t2_cfg.m, "number of factors")->required();
  t2_cmd->add_option("--samples", t2_cfg.samples, "number of draws")->required();
  t2_cmd->add_option("--seed", t2_cfg.seed, "base RNG seed")->required();
  t2_cmd->add_option("--threshold", t2_threshold, "override the pass threshold")
      ->each([&](const std::string&) { t2_have_threshold = true; });
  t2_cmd->add_option("--csv", t2_cfg.csv_path, "ECDF grid CSV path (default: derived from --json)");
  t2_cmd->add_option("--json", t2_cfg.json_path, "report JSON path")->required();

  // ---- oracle-compare ----
  auto* oc_cmd = app.add_subcommand("oracle-compare",
                                    "representation sampler vs dense-matrix oracle");
  spherelab::OracleCompareConfig oc_cfg;
  double oc_threshold = 0.0;
  bool oc_have_threshold = false;
  oc_cmd->add_option("--n", oc_cfg.n, "matrix dimension (<= 64)")->required();
  oc_cmd->add_option("--m", oc_cfg.m, "number of factors (<= 4)")->required();
  oc_cmd->add_option("--samples", oc_cfg.samples_each, "draws per side")->required();
  oc_cmd->add_option("--seed", oc_cfg.seed, "base RNG seed")->required();
  oc_cmd->add_option("--threshold", oc_threshold, "override the pass threshold")
      ->each([&](const std::string&) { oc_have_threshold = true; });
  oc_cmd->add_option("--json", oc_cfg.json_path, "report JSON path")->required();

  // ---- sweep ----
  auto* sweep_cmd = app.add_subcommand("sweep", "KS statistic vs n convergence table");
  std::string sweep_n_list, sweep_rule;
  spherelab::SweepConfig sweep_cfg;
  sweep_cmd->add_option("--n-list", sweep_n_list, "comma-separated matrix dimensions")->required();
  sweep_cmd->add_option("--m-rule", sweep_rule, "fixed:<k>|equal-n|sqrt-n|log-n")->required();
  sweep_cmd->add_option("--samples", sweep_cfg.samples, "draws per row")->required();
  sweep_cmd->add_option("--seed", sweep_cfg.seed, "base RNG seed")->required();
  sweep_cmd->add_option("--out", sweep_cfg.csv_path, "output CSV path")->required();
  sweep_cmd->add_option("--json", sweep_cfg.json_path, "report JSON path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*sample_cmd) {
      if (sample_scale == "theorem1") sample_cfg.scale = spherelab::SampleScale::theorem1;
      if (sample_scale == "theorem2") sample_cfg.scale = spherelab::SampleScale::theorem2;
      spherelab::emit_samples_csv(sample_cfg);
      return 0;
    }
    if (*limit_cmd) {
      if (limit_m != 1) {
        throw spherelab::UsageError(
            "limit-cdf: the limit law has a closed form only for m=1; "
            "use theorem1 with an MC reference for m >= 2");
      }
      const GridSpec g = parse_grid(limit_grid);
      const spherelab::TruncatedProductLaw law{limit_eps};
      spherelab::emit_cdf_grid_csv({g.lo, g.hi, g.step, limit_out},
                                   [&](double x) { return x > 0.0 ? law.cdf(x) : 0.0; });
      return 0;
    }
    if (*finite_cmd) {
      if (finite_n < 1) throw spherelab::UsageError("finite-cdf: n must be >= 1");
      const GridSpec g = parse_grid(finite_grid);
      spherelab::emit_cdf_grid_csv({g.lo, g.hi, g.step, finite_out}, [&](double x) {
        return x > 0.0 ? spherelab::finite_n_cdf_m1(finite_n, x) : 0.0;
      });
      return 0;
    }
    if (*t1_cmd) {
      if (t1_have_ref_seed) t1_cfg.ref_seed = t1_ref_seed;
      if (t1_have_threshold) t1_cfg.threshold = t1_threshold;
      if (t1_cfg.csv_path.empty()) t1_cfg.csv_path = t1_cfg.json_path + ".ecdf.csv";
      const auto report = spherelab::run_theorem1(t1_cfg);
      print_report_line(report);
      return report_exit(report);
    }
    if (*t2_cmd) {
      if (t2_have_threshold) t2_cfg.threshold = t2_threshold;
      if (t2_cfg.csv_path.empty()) t2_cfg.csv_path = t2_cfg.json_path + ".ecdf.csv";
      const auto report = spherelab::run_theorem2(t2_cfg);
      print_report_line(report);
      return report_exit(report);
    }
    if (*oc_cmd) {
      if (oc_have_threshold) oc_cfg.threshold = oc_threshold;
      const auto report = spherelab::run_oracle_comparison(oc_cfg);
      print_report_line(report);
      return report_exit(report);
    }
    if (*sweep_cmd) {
      sweep_cfg.n_list = parse_int_list(sweep_n_list);
      if (sweep_rule == "equal-n") {
        sweep_cfg.rule = spherelab::MRule::equal_n;
      } else if (sweep_rule == "sqrt-n") {
        sweep_cfg.rule = spherelab::MRule::sqrt_n;
      } else if (sweep_rule == "log-n") {
        sweep_cfg.rule = spherelab::MRule::log_n;
      } else if (sweep_rule.rfind("fixed:", 0) == 0) {
        sweep_cfg.rule = spherelab::MRule::fixed;
        try {
          sweep_cfg.fixed_m = std::stoll(sweep_rule.substr(6));
        } catch (const std::exception&) {
          throw spherelab::UsageError("bad m in m-rule '" + sweep_rule + "'");
        }
      } else {
        throw spherelab::UsageError("m-rule must be fixed:<k>|equal-n|sqrt-n|log-n");
      }
      const auto report = spherelab::convergence_sweep(sweep_cfg);
      print_report_line(report);
      return report_exit(report);
    }
    return 2;
  } catch (const spherelab::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
