// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "nsm/harness/ensemble.hpp"
#include "nsm/harness/flows.hpp"
#include "nsm/harness/report.hpp"
#include "nsm/spectral_ops.hpp"

namespace nsm::harness {

/// ||grad^k Delta_q f||_{L^a} / (2^{qk} ||Delta_q f||_{L^a}) per sample, with
/// grad^k the full k-th derivative tensor (pointwise Frobenius norm). The
/// ensemble is cut down to shell q. Params: q, k, a (inf as 0), C where
/// C^k = max(max_ratio, 1 / min_ratio). Throws when every sample has an
/// empty shell.
EstimateReport check_bernstein(const FieldEnsembleSpec& ensemble, int q, int k_order, Lp a = Lp::two,
                               double bound = kInf);

/// ||S_q f||_{L^inf} / (2^{qd/2} ||S_q f||_{L^2}) per sample.
EstimateReport check_bernstein_embedding(const FieldEnsembleSpec& ensemble, int q, double bound = kInf);

/// Data of a forced Stokes problem u' - Delta u + grad p = f1 + f2.
struct HeatProblem {
  SpectralField u0;
  std::vector<ExpForcing> f1;
  std::vector<ExpForcing> f2;
};

/// Exponents of the parabolic smoothing estimate: initial regularity s, time
/// integrability p of the solution, r of the forcing (p >= r), and the Besov
/// summability index j.
struct ParabolicExponents {
  double s = 0.0;
  double p = 2.0;
  double r = 1.0;
  double j = 2.0;
};

/// LHS ||u||_{L^inf_T B^s_{2,j}} + ||u||_{Lt^p_T B^{s+2/p}_{2,j}},
/// RHS ||u0||_{B^s_{2,j}} + ||f1 + f2||_{Lt^r_T B^{s-2+2/r}_{2,j}}.
EstimateReport check_parabolic_smoothing(std::span<const HeatProblem> problems, const std::vector<double>& times,
                                         const ParabolicExponents& exponents, double bound = kInf);

/// LHS ||u||_{L^2_T L^inf},
/// RHS ||u0||_{H^{d/2-1}} + ||f1||_{L^1_T H^{d/2-1}} + ||f2||_{Lt^2_T B^{d/2-2}_{2,1}}.
EstimateReport check_l2linfty(std::span<const HeatProblem> problems, const std::vector<double>& times,
                              double bound = kInf);

/// ||e^{t Delta} u||_{L^inf} in L^2(times) against ||u||_{B^{-1}_{inf,2}};
/// times should reach far enough for the heat flow to have decayed.
EstimateReport check_caloric(std::span<const SpectralField> fields, const std::vector<double>& times,
                             double bound = kInf);

struct MaxwellProblem {
  SpectralField E0;
  SpectralField B0;
  std::vector<ExpForcing> G;
};

struct MaxwellReports {
  EstimateReport energy;
  EstimateReport decay;
};

/// With X = H^{d/2-1}_alpha and RHS ||E0||_X + ||B0||_X + ||G||_{L^2_T X}:
///   energy: ||E||_{Lt^inf_T X} + ||E||_{L^2_T X} + ||B||_{Lt^inf_T X}
///   decay:  ||B||_{L^2_T H^{d/2,d/2-1}_alpha}
MaxwellReports check_maxwell_energy_decay(std::span<const MaxwellProblem> problems, const std::vector<double>& times,
                                          double alpha, double energy_bound = kInf, double decay_bound = kInf);

/// The same problems evaluated on prefixes of `times` ending at each horizon.
std::vector<MaxwellReports> check_maxwell_sweep(std::span<const MaxwellProblem> problems,
                                                const std::vector<double>& times, double alpha,
                                                const std::vector<double>& horizons, double energy_bound = kInf,
                                                double decay_bound = kInf);

/// Ratio drift across a sweep of horizons: growth is max_T r(T) / r(T_first) - 1,
/// variation is max / min - 1.
struct SweepDrift {
  std::vector<double> horizons;
  std::vector<double> max_ratios;
  double growth = 0.0;
  double variation = 0.0;
};
SweepDrift sweep_drift(std::vector<double> horizons, std::vector<double> max_ratios);

}  // namespace nsm::harness
