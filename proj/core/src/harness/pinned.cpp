// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#include "nsm/harness/pinned.hpp"

#include <map>
#include <utility>

#include "nsm/norms.hpp"

namespace nsm::harness {

double pinned_bound(const std::string& id, int dim) {
  // First measured max ratios.
  static const std::map<std::pair<std::string, int>, double> first{
      {{"bernstein", 2}, 2.28397},
      {{"bernstein-embedding", 2}, 0.161106},
      {{"parabolic", 2}, 0.683984},
      {{"l2linf", 2}, 0.0965916},
      {{"caloric", 2}, 0.594586},
      {{"maxwell-energy", 2}, 1.59567},
      {{"maxwell-decay", 2}, 0.474845},
      {{"est1-2D", 2}, 0.384571},
      {{"est4-2D", 2}, 0.125364},
      {{"est3-uB-2D", 2}, 0.160973},
      {{"criticality-plain", 2}, 3.32937},
      {{"criticality-log", 2}, 0.42972},
      {{"bernstein", 3}, 2.44463},
      {{"bernstein-embedding", 3}, 0.0576144},
      {{"parabolic", 3}, 0.544732},
      {{"l2linf", 3}, 0.0311335},
      {{"caloric", 3}, 0.617943},
      {{"maxwell-energy", 3}, 1.51633},
      {{"maxwell-decay", 3}, 0.473601},
      {{"est1-3D", 3}, 0.111181},
      {{"est4-3D", 3}, 0.0605395},
      {{"est3-uB-3D", 3}, 0.041573},
  };
  const auto it = first.find({id, dim});
  return it == first.end() ? kInf : 1.5 * it->second;
}

}  // namespace nsm::harness
