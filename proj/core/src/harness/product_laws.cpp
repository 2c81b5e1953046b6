// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#include "nsm/harness/product_laws.hpp"

#include <array>
#include <cmath>

#include "nsm/error.hpp"
#include "nsm/harness/flows.hpp"
#include "nsm/norms.hpp"
#include "nsm/spectral_ops.hpp"

namespace nsm::harness {

namespace {

struct LawInfo {
  ProductLaw law;
  const char* name;
  int dim;
};

constexpr std::array<LawInfo, 6> kLaws{{
    {ProductLaw::est1_2d, "est1-2D", 2},
    {ProductLaw::est4_2d, "est4-2D", 2},
    {ProductLaw::est3_ub_2d, "est3-uB-2D", 2},
    {ProductLaw::est1_3d, "est1-3D", 3},
    {ProductLaw::est4_3d, "est4-3D", 3},
    {ProductLaw::est3_ub_3d, "est3-uB-3D", 3},
}};

const LawInfo& info(ProductLaw law) {
  for (const auto& l : kLaws) {
    if (l.law == law) return l;
  }
  throw InvalidArgument("unknown estimate id");
}

bool is_est1(ProductLaw l) { return l == ProductLaw::est1_2d || l == ProductLaw::est1_3d; }
bool is_est4(ProductLaw l) { return l == ProductLaw::est4_2d || l == ProductLaw::est4_3d; }

// Sobolev norm with H^0 read as L^2.
double sobolev(const SpectralField& f, const DyadicPartition& part, double s) {
  return s == 0.0 ? l2_norm(f) : norm_hst(f, part, NormSpec::sobolev(s));
}

// ||grad(u (x) v)||_{H^s}.
double grad_tensor_norm(const SpectralField& u, const SpectralField& v, const DyadicPartition& part, double s) {
  const int d = u.grid().dim();
  double sq = 0.0;
  for (int i = 0; i < 3; ++i) {
    SpectralField ui(u.grid_ptr());
    for (int c = 0; c < 3; ++c) {
      auto dst = ui.component(c);
      const auto src = u.component(i);
      std::copy(src.begin(), src.end(), dst.begin());
    }
    const SpectralField w = pointwise_product(ui, v, Combiner::scalar);
    for (int a = 0; a < d; ++a) {
      const double n = sobolev(partial(w, a), part, s);
      sq += n * n;
    }
  }
  return std::sqrt(sq);
}

// ||f||_{L^2_T (L^inf cap H^{d/2})}.
double velocity_norm(const FieldHistory& f, const DyadicPartition& part) {
  const double d = part.grid().dim();
  std::vector<double> v;
  for (const auto& s : f.samples) v.push_back(linf_norm(s) + sobolev(s, part, 0.5 * d));
  return time_norm(f.times, v, 2.0);
}

FieldHistory map_history(const FieldHistory& a, const FieldHistory& b,
                         SpectralField (*op)(const SpectralField&, const SpectralField&)) {
  FieldHistory out;
  out.times = a.times;
  for (std::size_t i = 0; i < a.samples.size(); ++i) out.samples.push_back(op(a.samples[i], b.samples[i]));
  return out;
}

SpectralField cross(const SpectralField& a, const SpectralField& b) {
  return pointwise_product(a, b, Combiner::cross);
}

SpectralField with_mean_only(const SpectralField& f) {
  SpectralField m(f.grid_ptr());
  m.set_mode(0, f.mean());
  return m;
}

double est4_2d_lhs(const FieldHistory& E, const FieldHistory& B, const DyadicPartition& part) {
  const std::size_t n = E.samples.size();
  // pieces[p][i]: piece p at time i.
  std::array<std::vector<SpectralField>, 3> pieces;
  for (std::size_t i = 0; i < n; ++i) {
    const BonyParts bp = bony_decompose(E.samples[i], B.samples[i], part, Combiner::cross);
    const SpectralField s2r = low_pass(bp.remainder, part, 2);
    pieces[0].push_back(bp.low_high + bp.high_low);
    pieces[1].push_back(s2r);
    pieces[2].push_back(bp.remainder - s2r);
  }
  const NormSpec X = NormSpec::besov(-1.0, 2.0, 1.0).in_time(2.0, true);
  double best = kInf;
  for (int mask = 0; mask < 8; ++mask) {
    FieldHistory xs;
    xs.times = E.times;
    std::vector<double> y(n);
    bool any_x = false;
    for (std::size_t i = 0; i < n; ++i) {
      SpectralField xf(part.grid_ptr()), yf(part.grid_ptr());
      for (int p = 0; p < 3; ++p) {
        if (mask & (1 << p)) {
          xf += pieces[p][i];
          any_x = true;
        } else {
          yf += pieces[p][i];
        }
      }
      yf += with_mean_only(xf);
      xf.remove_mean();
      y[i] = l2_norm(yf);
      xs.samples.push_back(std::move(xf));
    }
    const double xn = any_x ? spacetime_norm(xs, part, X) : 0.0;
    best = std::min(best, xn + time_norm(E.times, y, 1.0));
  }
  return best;
}

}  // namespace

const std::vector<ProductLaw>& all_product_laws() {
  static const std::vector<ProductLaw> laws = [] {
    std::vector<ProductLaw> v;
    for (const auto& l : kLaws) v.push_back(l.law);
    return v;
  }();
  return laws;
}

std::string product_law_name(ProductLaw law) { return info(law).name; }

ProductLaw parse_product_law(const std::string& id) {
  for (const auto& l : kLaws) {
    if (id == l.name) return l.law;
  }
  throw InvalidArgument("unknown estimate id '" + id + "'");
}

int product_law_dim(ProductLaw law) { return info(law).dim; }

ProductSides evaluate_product_law(ProductLaw law, const FieldHistory& a, const FieldHistory& b,
                                  const DyadicPartition& part) {
  if (part.grid().dim() != product_law_dim(law)) throw InvalidArgument("grid dimension does not match the estimate");
  if (a.samples.empty() || a.samples.size() != b.samples.size() || a.times != b.times) {
    throw InvalidArgument("factor histories must share one nonempty time grid");
  }
  const double d = part.grid().dim();
  const double s = 0.5 * d - 1.0;
  ProductSides out;
  if (is_est1(law)) {
    std::vector<double> v;
    for (std::size_t i = 0; i < a.samples.size(); ++i) v.push_back(grad_tensor_norm(a.samples[i], b.samples[i], part, s));
    out.lhs = time_norm(a.times, v, 1.0);
    out.rhs = velocity_norm(a, part) * velocity_norm(b, part);
    return out;
  }
  if (law == ProductLaw::est4_2d) {
    const NormSpec log = NormSpec::sobolev_log(0.0);
    out.lhs = est4_2d_lhs(a, b, part);
    out.rhs = spacetime_norm(a, part, log.in_time(2.0, false)) *
              (spacetime_norm(b, part, log.in_time(kInf, true)) +
               spacetime_norm(b, part, NormSpec::hst(1.0, 0.0).in_time(2.0, false)));
    return out;
  }
  const FieldHistory prod = map_history(a, b, cross);
  if (law == ProductLaw::est4_3d) {
    out.lhs = spacetime_norm(prod, part, NormSpec::besov(-0.5, 2.0, 1.0).in_time(2.0, true));
    out.rhs = spacetime_norm(a, part, NormSpec::sobolev(0.5).in_time(2.0, false)) *
              spacetime_norm(b, part, NormSpec::sobolev(0.5).in_time(kInf, true));
    return out;
  }
  // est3-uB
  const NormSpec X = law == ProductLaw::est3_ub_2d ? NormSpec::sobolev_log(0.0) : NormSpec::sobolev(0.5);
  out.lhs = spacetime_norm(prod, part, X.in_time(2.0, false));
  out.rhs = velocity_norm(a, part) * spacetime_norm(b, part, X.in_time(kInf, true));
  return out;
}

std::pair<FieldHistory, FieldHistory> product_factors(ProductLaw law, const SpectralField& first,
                                                      const SpectralField& second, const std::vector<double>& times,
                                                      FactorDynamics dynamics) {
  if (dynamics == FactorDynamics::static_in_time) {
    FieldHistory a, b;
    a.times = b.times = times;
    a.samples.assign(times.size(), first);
    b.samples.assign(times.size(), second);
    return {a, b};
  }
  if (is_est1(law)) return {heat_solution(first, {}, times), heat_solution(second, {}, times)};
  if (is_est4(law)) {
    MaxwellHistory h = maxwell_solution(first, second, {}, times);
    return {std::move(h.E), std::move(h.B)};
  }
  const SpectralField zero(first.grid_ptr());
  return {heat_solution(first, {}, times), maxwell_solution(zero, second, {}, times).B};
}

EstimateReport check_product_law(const ProductLawSpec& spec) {
  return check_product_law_sweep(spec, {spec.times.back()}).front();
}

std::vector<EstimateReport> check_product_law_sweep(const ProductLawSpec& spec, const std::vector<double>& horizons) {
  if (spec.times.size() < 2) throw InvalidArgument("need at least two time nodes");
  if (!spec.first.grid || !spec.second.grid || !same_grid(*spec.first.grid, *spec.second.grid)) {
    throw InvalidArgument("both ensembles need the same grid");
  }
  if (spec.first.count != spec.second.count) throw InvalidArgument("ensembles must have equal counts");
  const DyadicPartition part(spec.first.grid);
  const auto first = gen_ensemble(spec.first);
  const auto second = gen_ensemble(spec.second);
  std::vector<std::vector<double>> lhs(horizons.size()), rhs(horizons.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    const auto [a, b] = product_factors(spec.law, first[i], second[i], spec.times, spec.dynamics);
    for (std::size_t h = 0; h < horizons.size(); ++h) {
      const ProductSides s =
          evaluate_product_law(spec.law, truncate_history(a, horizons[h]), truncate_history(b, horizons[h]), part);
      lhs[h].push_back(s.lhs);
      rhs[h].push_back(s.rhs);
    }
  }
  std::vector<EstimateReport> out;
  for (std::size_t h = 0; h < horizons.size(); ++h) {
    out.push_back(make_report(product_law_name(spec.law), std::move(lhs[h]), std::move(rhs[h]), spec.bound,
                              spec.first.seed,
                              {{"T", horizons[h]},
                               {"slope", spec.first.slope},
                               {"samples", static_cast<double>(spec.first.count)},
                               {"free", spec.dynamics == FactorDynamics::free ? 1.0 : 0.0}}));
  }
  return out;
}

}  // namespace nsm::harness
