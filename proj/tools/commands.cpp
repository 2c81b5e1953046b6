// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nsm/error.hpp"
#include "nsm/harness/ensemble.hpp"
#include "nsm/harness/flows.hpp"
#include "nsm/harness/linear_checks.hpp"
#include "nsm/harness/log_criticality.hpp"
#include "nsm/harness/pinned.hpp"
#include "nsm/harness/product_laws.hpp"
#include "nsm/harness/report.hpp"
#include "nsm/littlewood_paley.hpp"
#include "nsm/norms.hpp"
#include "nsm/picard.hpp"
#include "nsm/simulate.hpp"
#include "nsm/snapshot.hpp"
#include "nsm/spectral_ops.hpp"
#include "nsm/split.hpp"
#include "nsm/znorm.hpp"

namespace nsm::cli {

namespace fs = std::filesystem;

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

MhdParams params_of(const RunConfig& c) {
  MhdParams p;
  p.nu = c.nu;
  p.sigma = c.sigma;
  return p;
}

fs::path prepare_out_dir(const RunConfig& c) {
  const fs::path dir(c.out_dir);
  fs::create_directories(dir);
  return dir;
}

double named_norm(const std::string& name, const MhdState& s, const DyadicPartition& part) {
  if (name == "div") return s.divergence_defect();
  const char f = name[0];
  const SpectralField& field = f == 'v' ? s.v : (f == 'E' ? s.E : s.B);
  const std::string kind = name.substr(2);
  if (kind == "l2") return l2_norm(field);
  if (kind == "linf") return linf_norm(field);
  if (kind == "h1") return gradient_norm(field);
  const double sc = 0.5 * s.grid().dim() - 1.0;
  return norm_hst(field, part, NormSpec::hst(sc, sc, z_alpha(s.grid().dim())));
}

void write_state_snapshots(const fs::path& dir, const std::string& stem, const MhdState& s) {
  write_snapshot(dir / (stem + "_v.nsmw"), s.v, s.time);
  write_snapshot(dir / (stem + "_E.nsmw"), s.E, s.time);
  write_snapshot(dir / (stem + "_B.nsmw"), s.B, s.time);
}

std::string step_stem(std::size_t step) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "step%07zu", step);
  return buf;
}

}  // namespace

int run_simulate(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const MhdState initial = initial_state(c);
  const fs::path dir = prepare_out_dir(c);
  const fs::path snaps = dir / "snapshots";
  fs::create_directories(snaps);
  const DyadicPartition part(initial.grid_ptr());
  const std::size_t steps = step_count(c.T, c.dt);

  std::ofstream csv(dir / "diagnostics.csv");
  csv << "time,energy,grad_v_sq,j_sq";
  for (const auto& n : c.norms) csv << ',' << n;
  csv << '\n';

  SimulationOptions opt;
  opt.scheme = c.scheme;
  opt.params = params_of(c);
  opt.store_stride = steps;
  opt.on_step = [&](const MhdState& s, const StepDiagnostics& d) {
    if (d.step % c.stride != 0 && d.step != steps) return;
    csv << num(d.time) << ',' << num(d.energy.energy) << ',' << num(d.energy.grad_v_sq) << ','
        << num(d.energy.j_sq);
    for (const auto& n : c.norms) csv << ',' << num(named_norm(n, s, part));
    csv << '\n';
    write_state_snapshots(snaps, step_stem(d.step), s);
  };
  try {
    const Trajectory traj = simulate(initial, c.T, c.dt, opt);
    for (const auto& w : traj.warnings) err << "warning: " << w << '\n';
    out << "steps " << traj.steps << '\n';
    out << "energy_initial " << num(traj.diagnostics.front().energy.energy) << '\n';
    out << "energy_final " << num(traj.diagnostics.back().energy.energy) << '\n';
    out << "energy_identity_residual " << num(energy_identity_residual(traj, opt.params)) << '\n';
  } catch (const NumericalBlowup& e) {
    csv << "# truncated at step " << e.step() << ": " << e.what() << '\n';
    csv.flush();
    err << "error: numerical blowup: " << e.what() << '\n';
    return kExitBlowup;
  }
  return kExitOk;
}

int run_picard(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const MhdState base = initial_state(c);
  const fs::path dir = prepare_out_dir(c);
  const DyadicPartition part(base.grid_ptr());
  std::ofstream csv(dir / "picard.csv");
  std::ofstream iters(dir / "picard_iterations.csv");
  csv << "eps,initial_norm,z_free,max_ratio,iterations,converged\n";
  iters << "eps,m,difference_norm,ratio\n";
  PicardOptions opt;
  opt.iterations = static_cast<std::size_t>(c.iterations);
  opt.params = params_of(c);
  for (double eps : c.eps) {
    MhdState s = base;
    s *= eps;
    try {
      const PicardResult r = picard_iterate(s, c.T, c.dt, opt);
      csv << num(eps) << ',' << num(initial_data_norm(s, part)) << ',' << num(r.free_norm.total) << ','
          << num(r.max_ratio()) << ',' << r.difference_norms.size() << ',' << (r.converged ? 1 : 0) << '\n';
      for (std::size_t m = 0; m < r.difference_norms.size(); ++m) {
        iters << num(eps) << ',' << m << ',' << num(r.difference_norms[m]) << ','
              << (m == 0 ? std::string("") : num(r.ratios[m - 1])) << '\n';
      }
      out << "eps " << num(eps) << " max_ratio " << num(r.max_ratio()) << '\n';
    } catch (const NumericalBlowup& e) {
      csv << "# truncated at eps " << num(eps) << ", step " << e.step() << ": " << e.what() << '\n';
      iters << "# truncated at eps " << num(eps) << '\n';
      err << "error: numerical blowup: " << e.what() << '\n';
      return kExitBlowup;
    }
  }
  return kExitOk;
}

int run_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  using namespace harness;
  if (c.estimates.empty()) {
    err << "error: verify.estimates is empty\n";
    return kExitConfig;
  }
  const GridPtr g = Grid::create(c.dim, c.n, c.box_length);
  const double d = c.dim;
  const double T = *std::max_element(c.horizons.begin(), c.horizons.end());
  const auto times = time_nodes(T, 1e-4, 16, c.horizons);
  auto ensemble = [&](std::uint64_t offset, bool div_free) {
    return FieldEnsembleSpec{c.seed + offset, c.samples, c.slope, std::nullopt, div_free, g};
  };
  std::vector<EstimateReport> reports;
  auto add = [&](EstimateReport r) {
    if (r.bound == kInf) {
      r.bound = pinned_bound(r.id, c.dim);
      r.pass = r.max_ratio <= r.bound;
    }
    reports.push_back(std::move(r));
  };
  for (const auto& id : c.estimates) {
    err << "verify: " << id << '\n';
    if (id == "bernstein") {
      for (int q = 1; q <= 3; ++q) {
        for (int k = 1; k <= 2; ++k) add(check_bernstein(ensemble(0, false), q, k, Lp::two));
        add(check_bernstein(ensemble(0, false), q, 1, Lp::inf));
        add(check_bernstein_embedding(ensemble(0, false), q));
      }
    } else if (id == "parabolic" || id == "l2linf") {
      const auto u0 = gen_ensemble(ensemble(0, true));
      const auto f1 = gen_ensemble(ensemble(1, true));
      const auto f2 = gen_ensemble(ensemble(2, true));
      std::vector<HeatProblem> problems;
      for (std::size_t i = 0; i < u0.size(); ++i) problems.push_back({u0[i], {{f1[i], 0.5}}, {{f2[i], 2.0}}});
      if (id == "parabolic") {
        add(check_parabolic_smoothing(problems, times, {0.5 * d - 1.0, 2.0, 1.0, 2.0}));
      } else {
        add(check_l2linfty(problems, times));
      }
    } else if (id == "caloric") {
      add(check_caloric(gen_ensemble(ensemble(0, false)), times));
    } else if (id == "maxwell") {
      const auto E = gen_ensemble(ensemble(0, false));
      const auto B = gen_ensemble(ensemble(1, true));
      std::vector<MaxwellProblem> problems;
      for (std::size_t i = 0; i < E.size(); ++i) problems.push_back({E[i], B[i], {}});
      std::vector<double> decay;
      for (auto& r : check_maxwell_sweep(problems, times, z_alpha(c.dim), c.horizons)) {
        decay.push_back(r.decay.max_ratio);
        add(std::move(r.energy));
        add(std::move(r.decay));
      }
      const SweepDrift s = sweep_drift(c.horizons, decay);
      out << "maxwell-decay growth " << num(s.growth) << " variation " << num(s.variation) << '\n';
    } else if (id == "criticality") {
      const CriticalityResult r = log_criticality_experiment(c.q_sweep);
      std::vector<double> lhs, plain, logw;
      for (const auto& row : r.rows) {
        lhs.push_back(row.lhs);
        plain.push_back(row.rhs_plain);
        logw.push_back(row.rhs_log);
      }
      const Params p{{"q_first", c.q_sweep.front()}, {"q_last", c.q_sweep.back()}, {"growth", r.plain_growth},
                     {"log_spread", r.log_spread}};
      add(make_report("criticality-plain", lhs, plain, kInf, 0, p));
      add(make_report("criticality-log", lhs, logw, kInf, 0, p));
    } else {
      const ProductLaw law = parse_product_law(id);
      const bool maxwell = law == ProductLaw::est4_2d || law == ProductLaw::est4_3d;
      ProductLawSpec spec;
      spec.law = law;
      spec.first = ensemble(0, !maxwell);
      spec.second = ensemble(1, true);
      spec.times = times;
      std::vector<double> ratios;
      for (auto& r : check_product_law_sweep(spec, c.horizons)) {
        ratios.push_back(r.max_ratio);
        add(std::move(r));
      }
      const SweepDrift s = sweep_drift(c.horizons, ratios);
      out << id << " growth " << num(s.growth) << " variation " << num(s.variation) << '\n';
    }
  }
  const fs::path dir = prepare_out_dir(c);
  std::ofstream jl(dir / "reports.jsonl");
  write_json_lines(jl, reports);
  std::ofstream summary(dir / "summary.csv");
  write_summary_csv(summary, reports);
  for (const auto& r : reports) {
    out << r.id << " max_ratio " << num(r.max_ratio) << " bound " << num(r.bound) << (r.pass ? " pass" : " FAIL")
        << '\n';
  }
  return kExitOk;
}

int run_split(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const MhdState s = initial_state(c);
  const DyadicPartition part(s.grid_ptr());
  const SplitResult r = split_initial_data(s, c.delta, part);
  const fs::path dir = prepare_out_dir(c);
  std::ofstream csv(dir / "split.csv");
  csv << "Q,small_norm\n";
  for (std::size_t i = 0; i < r.sweep.size(); ++i) {
    csv << part.q_min() + static_cast<int>(i) << ',' << num(r.sweep[i]) << '\n';
  }
  write_state_snapshots(dir, "regular", r.regular);
  write_state_snapshots(dir, "small", r.small);
  out << "Q " << r.Q << " small_norm " << num(r.small_norm) << " achieved " << (r.achieved ? 1 : 0) << '\n';
  if (!r.achieved) err << "warning: no cutoff brings the small part below delta = " << num(c.delta) << '\n';
  return kExitOk;
}

int run_norms(const RunConfig& c, std::ostream& out, std::ostream&) {
  const MhdState s = initial_state(c);
  const DyadicPartition part(s.grid_ptr());
  std::vector<std::string> names = c.norms;
  if (names.empty()) {
    for (const char* f : {"v", "E", "B"}) {
      for (const char* k : {"l2", "linf", "h1", "crit"}) names.push_back(std::string(f) + "." + k);
    }
    names.push_back("div");
  }
  const fs::path dir = prepare_out_dir(c);
  std::ofstream csv(dir / "norms.csv");
  csv << "name,value\n";
  auto emit = [&](const std::string& name, double v) {
    csv << name << ',' << num(v) << '\n';
    out << name << ' ' << num(v) << '\n';
  };
  for (const auto& n : names) emit(n, named_norm(n, s, part));
  emit("initial_data", initial_data_norm(s, part));
  return kExitOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral Navier-Stokes-Maxwell solver and estimate checker", "nsm"};
  app.require_subcommand(1);
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  std::optional<std::size_t> stride;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"simulate", "integrate the system and write diagnostics and snapshots"},
      {"picard", "run the fixed-point iteration over an amplitude sweep"},
      {"verify", "evaluate estimate checkers and write reports"},
      {"split", "split the initial data into a regular and a small part"},
      {"norms", "evaluate norms of the initial data"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("config", config_path, "YAML configuration file")->required();
    sub->add_option("--seed", seed, "override run.seed");
    sub->add_option("--out-dir", out_dir, "override run.out_dir");
    sub->add_option("--stride", stride, "override run.stride")->check(CLI::PositiveNumber);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();

  std::ifstream in(config_path);
  if (!in) {
    err << "error: cannot read " << config_path << '\n';
    return kExitConfig;
  }
  std::stringstream text;
  text << in.rdbuf();
  ParseResult parsed = parse_config(text.str());
  if (!parsed.ok()) {
    for (const auto& e : parsed.errors) err << config_path << ": " << e.str() << '\n';
    return kExitConfig;
  }
  RunConfig& c = parsed.config;
  if (seed) c.seed = *seed;
  if (out_dir) c.out_dir = *out_dir;
  if (stride) c.stride = *stride;

  try {
    if (cmd == "simulate") return run_simulate(c, out, err);
    if (cmd == "picard") return run_picard(c, out, err);
    if (cmd == "verify") return run_verify(c, out, err);
    if (cmd == "split") return run_split(c, out, err);
    return run_norms(c, out, err);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const NumericalBlowup& e) {
    err << "error: numerical blowup: " << e.what() << '\n';
    return kExitBlowup;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitBlowup;
  }
}

}  // namespace nsm::cli
