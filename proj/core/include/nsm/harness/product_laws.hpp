// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nsm/harness/ensemble.hpp"
#include "nsm/harness/report.hpp"
#include "nsm/littlewood_paley.hpp"

namespace nsm::harness {

/// The bilinear space-time estimates (first factor, second factor):
///   est1:    grad(u (x) v)       (u, v)
///   est4:    E x B               (E, B)
///   est3-uB: u x B               (u, B)
/// in their 2D and 3D versions.
enum class ProductLaw { est1_2d, est4_2d, est3_ub_2d, est1_3d, est4_3d, est3_ub_3d };

const std::vector<ProductLaw>& all_product_laws();
std::string product_law_name(ProductLaw law);
/// Accepts the names above ("est1-2D", "est3-uB-3D", ...); throws
/// InvalidArgument("unknown estimate id ...") otherwise.
ProductLaw parse_product_law(const std::string& id);
int product_law_dim(ProductLaw law);

struct ProductSides {
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Both sides on sampled factor histories sharing one time grid.
///
/// est4-2D evaluates its sum-space LHS over the paraproduct pieces
/// P1 = T_E B + T_B E, P2 = S_2 R(E, B), P3 = (I - S_2) R(E, B): the minimum over
/// every assignment of the pieces to X = Lt^2_T B^{-1}_{2,1} or Y = L^1_T L^2 of
/// ||X part||_X + ||Y part||_Y. The spatial mean, invisible to X, is always
/// counted in Y.
ProductSides evaluate_product_law(ProductLaw law, const FieldHistory& first, const FieldHistory& second,
                                  const DyadicPartition& part);

enum class FactorDynamics {
  static_in_time,  // factors frozen at their initial value
  free,            // heat flow for u, v; damped Maxwell flow for (E, B)
};

/// Factor histories for one pair of initial fields.
std::pair<FieldHistory, FieldHistory> product_factors(ProductLaw law, const SpectralField& first,
                                                      const SpectralField& second, const std::vector<double>& times,
                                                      FactorDynamics dynamics);

struct ProductLawSpec {
  ProductLaw law = ProductLaw::est4_2d;
  FieldEnsembleSpec first;
  FieldEnsembleSpec second;
  std::vector<double> times;
  FactorDynamics dynamics = FactorDynamics::free;
  double bound = kInf;
};

EstimateReport check_product_law(const ProductLawSpec& spec);

/// The same ensemble evaluated on prefixes of spec.times ending at each
/// horizon (each must be a node).
std::vector<EstimateReport> check_product_law_sweep(const ProductLawSpec& spec, const std::vector<double>& horizons);

}  // namespace nsm::harness
