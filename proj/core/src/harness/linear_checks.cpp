// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#include "nsm/harness/linear_checks.hpp"

#include <algorithm>
#include <cmath>

#include "nsm/error.hpp"
#include "nsm/littlewood_paley.hpp"

namespace nsm::harness {

namespace {

// Pointwise Frobenius norm of the k-th derivative tensor, in L^a.
double derivative_tensor_norm(const SpectralField& f, int k, Lp a) {
  const Grid& g = f.grid();
  if (a == Lp::two) {
    SpectralField w = f;
    for (std::size_t m = 0; m < g.size(); ++m) {
      const double s = std::pow(g.ksq(m), 0.5 * k);
      for (int c = 0; c < 3; ++c) w.at(c, m) *= s;
    }
    return l2_norm(w);
  }
  std::vector<double> sq(g.size(), 0.0);
  const int d = g.dim();
  int tuples = 1;
  for (int i = 0; i < k; ++i) tuples *= d;
  for (int t = 0; t < tuples; ++t) {
    SpectralField w = f;
    int code = t;
    for (int i = 0; i < k; ++i) {
      w = partial(w, code % d);
      code /= d;
    }
    const PhysicalField p = w.to_physical();
    for (int c = 0; c < 3; ++c) {
      for (std::size_t j = 0; j < sq.size(); ++j) sq[j] += p.comp[c][j] * p.comp[c][j];
    }
  }
  return std::sqrt(*std::max_element(sq.begin(), sq.end()));
}

void require_heat_problems(std::span<const HeatProblem> problems, const std::vector<double>& times) {
  if (problems.empty()) throw InvalidArgument("no problems");
  if (times.size() < 2) throw InvalidArgument("need at least two time nodes");
  if (times.front() != 0.0) throw InvalidArgument("time nodes must start at 0");
}

std::vector<ExpForcing> all_forcing(const HeatProblem& p) {
  std::vector<ExpForcing> f = p.f1;
  f.insert(f.end(), p.f2.begin(), p.f2.end());
  return f;
}

double lebesgue_code(Lp a) { return a == Lp::two ? 2.0 : 0.0; }

}  // namespace

EstimateReport check_bernstein(const FieldEnsembleSpec& ensemble, int q, int k_order, Lp a, double bound) {
  if (k_order < 0) throw InvalidArgument("derivative order must be >= 0");
  FieldEnsembleSpec spec = ensemble;
  spec.shell = q;
  const auto fields = gen_ensemble(spec);
  std::vector<double> lhs, rhs;
  bool any = false;
  for (const auto& f : fields) {
    const double base = a == Lp::two ? l2_norm(f) : linf_norm(f);
    any = any || base > 0.0;
    lhs.push_back(derivative_tensor_norm(f, k_order, a));
    rhs.push_back(std::exp2(q * k_order) * base);
  }
  if (!any) throw InvalidArgument("shell " + std::to_string(q) + " is empty");
  EstimateReport r = make_report("bernstein", std::move(lhs), std::move(rhs), bound, ensemble.seed,
                                 {{"q", q}, {"k", k_order}, {"a", lebesgue_code(a)}});
  const double spread = std::max(r.max_ratio, r.min_ratio > 0.0 ? 1.0 / r.min_ratio : kInf);
  r.params.emplace_back("C", k_order == 0 ? 1.0 : std::pow(spread, 1.0 / k_order));
  return r;
}

EstimateReport check_bernstein_embedding(const FieldEnsembleSpec& ensemble, int q, double bound) {
  const auto fields = gen_ensemble(ensemble);
  const DyadicPartition part(ensemble.grid);
  const int d = ensemble.grid->dim();
  std::vector<double> lhs, rhs;
  for (const auto& f : fields) {
    const SpectralField low = low_pass(f, part, q);
    lhs.push_back(linf_norm(low));
    rhs.push_back(std::exp2(0.5 * q * d) * l2_norm(low));
  }
  return make_report("bernstein-embedding", std::move(lhs), std::move(rhs), bound, ensemble.seed, {{"q", q}});
}

EstimateReport check_parabolic_smoothing(std::span<const HeatProblem> problems, const std::vector<double>& times,
                                         const ParabolicExponents& e, double bound) {
  require_heat_problems(problems, times);
  auto valid = [](double x) { return x == 1.0 || x == 2.0 || x == kInf; };
  if (!valid(e.p) || !valid(e.r) || !valid(e.j)) throw InvalidArgument("p, r, j must lie in {1, 2, inf}");
  if (e.p < e.r) throw InvalidArgument("parabolic smoothing needs p >= r");
  auto gain = [](double x) { return x == kInf ? 0.0 : 2.0 / x; };
  const NormSpec sup = NormSpec::besov(e.s, 2.0, e.j).in_time(kInf, false);
  const NormSpec smooth = NormSpec::besov(e.s + gain(e.p), 2.0, e.j).in_time(e.p, true);
  const NormSpec data = NormSpec::besov(e.s, 2.0, e.j);
  const NormSpec force = NormSpec::besov(e.s - 2.0 + gain(e.r), 2.0, e.j).in_time(e.r, true);
  std::vector<double> lhs, rhs;
  for (const auto& pr : problems) {
    const DyadicPartition part(pr.u0.grid_ptr());
    const auto f = all_forcing(pr);
    const FieldHistory u = heat_solution(pr.u0, f, times);
    lhs.push_back(spacetime_norm(u, part, sup) + spacetime_norm(u, part, smooth));
    double r = spatial_norm(u.samples.front(), part, data);
    if (!f.empty()) r += spacetime_norm(forcing_history(f, times, true), part, force);
    rhs.push_back(r);
  }
  return make_report("parabolic", std::move(lhs), std::move(rhs), bound, 0,
                     {{"s", e.s}, {"p", e.p}, {"r", e.r}, {"j", e.j}, {"T", times.back()}});
}

EstimateReport check_l2linfty(std::span<const HeatProblem> problems, const std::vector<double>& times, double bound) {
  require_heat_problems(problems, times);
  std::vector<double> lhs, rhs;
  for (const auto& pr : problems) {
    const DyadicPartition part(pr.u0.grid_ptr());
    const double d = pr.u0.grid().dim();
    const FieldHistory u = heat_solution(pr.u0, all_forcing(pr), times);
    lhs.push_back(spacetime_lebesgue(u, Lp::inf, 2.0));
    double r = spatial_norm(u.samples.front(), part, NormSpec::sobolev(0.5 * d - 1.0));
    if (!pr.f1.empty()) {
      r += spacetime_norm(forcing_history(pr.f1, times, true), part,
                          NormSpec::sobolev(0.5 * d - 1.0).in_time(1.0, false));
    }
    if (!pr.f2.empty()) {
      r += spacetime_norm(forcing_history(pr.f2, times, true), part,
                          NormSpec::besov(0.5 * d - 2.0, 2.0, 1.0).in_time(2.0, true));
    }
    rhs.push_back(r);
  }
  return make_report("l2linf", std::move(lhs), std::move(rhs), bound, 0, {{"T", times.back()}});
}

EstimateReport check_caloric(std::span<const SpectralField> fields, const std::vector<double>& times, double bound) {
  if (fields.empty()) throw InvalidArgument("no fields");
  std::vector<double> lhs, rhs;
  for (const auto& f : fields) {
    const DyadicPartition part(f.grid_ptr());
    const FieldHistory u = heat_solution(f, {}, times, false);
    lhs.push_back(spacetime_lebesgue(u, Lp::inf, 2.0));
    rhs.push_back(norm_besov(f, part, -1.0, kInf, 2.0));
  }
  return make_report("caloric", std::move(lhs), std::move(rhs), bound, 0, {{"T", times.back()}});
}

MaxwellReports check_maxwell_energy_decay(std::span<const MaxwellProblem> problems, const std::vector<double>& times,
                                          double alpha, double energy_bound, double decay_bound) {
  if (times.empty()) throw InvalidArgument("empty time grid");
  return check_maxwell_sweep(problems, times, alpha, {times.back()}, energy_bound, decay_bound).front();
}

std::vector<MaxwellReports> check_maxwell_sweep(std::span<const MaxwellProblem> problems,
                                                const std::vector<double>& times, double alpha,
                                                const std::vector<double>& horizons, double energy_bound,
                                                double decay_bound) {
  if (problems.empty()) throw InvalidArgument("no problems");
  if (times.size() < 2 || times.front() != 0.0) throw InvalidArgument("time nodes must start at 0");
  const std::size_t nh = horizons.size();
  std::vector<std::vector<double>> el(nh), dl(nh), rhs(nh);
  for (const auto& pr : problems) {
    const DyadicPartition part(pr.E0.grid_ptr());
    const double d = pr.E0.grid().dim();
    const NormSpec X = NormSpec::hst(0.5 * d - 1.0, 0.5 * d - 1.0, alpha);
    const NormSpec decay = NormSpec::hst(0.5 * d, 0.5 * d - 1.0, alpha).in_time(2.0, false);
    const MaxwellHistory full = maxwell_solution(pr.E0, pr.B0, pr.G, times);
    const double data = spatial_norm(pr.E0, part, X) + spatial_norm(full.B.samples.front(), part, X);
    const FieldHistory G = pr.G.empty() ? FieldHistory{} : forcing_history(pr.G, times, false);
    for (std::size_t h = 0; h < nh; ++h) {
      const FieldHistory E = truncate_history(full.E, horizons[h]);
      const FieldHistory B = truncate_history(full.B, horizons[h]);
      el[h].push_back(spacetime_norm(E, part, X.in_time(kInf, true)) + spacetime_norm(E, part, X.in_time(2.0, false)) +
                      spacetime_norm(B, part, X.in_time(kInf, true)));
      dl[h].push_back(spacetime_norm(B, part, decay));
      double r = data;
      if (!pr.G.empty()) r += spacetime_norm(truncate_history(G, horizons[h]), part, X.in_time(2.0, false));
      rhs[h].push_back(r);
    }
  }
  std::vector<MaxwellReports> out;
  for (std::size_t h = 0; h < nh; ++h) {
    const Params params{{"alpha", alpha}, {"T", horizons[h]}};
    out.push_back({make_report("maxwell-energy", std::move(el[h]), rhs[h], energy_bound, 0, params),
                   make_report("maxwell-decay", std::move(dl[h]), std::move(rhs[h]), decay_bound, 0, params)});
  }
  return out;
}

SweepDrift sweep_drift(std::vector<double> horizons, std::vector<double> max_ratios) {
  if (horizons.size() != max_ratios.size() || horizons.empty()) throw InvalidArgument("sweep length mismatch");
  SweepDrift s;
  s.horizons = std::move(horizons);
  s.max_ratios = std::move(max_ratios);
  const double first = s.max_ratios.front();
  const double hi = *std::max_element(s.max_ratios.begin(), s.max_ratios.end());
  const double lo = *std::min_element(s.max_ratios.begin(), s.max_ratios.end());
  s.growth = first > 0.0 ? hi / first - 1.0 : (hi > 0.0 ? kInf : 0.0);
  s.variation = lo > 0.0 ? hi / lo - 1.0 : (hi > 0.0 ? kInf : 0.0);
  return s;
}

}  // namespace nsm::harness
