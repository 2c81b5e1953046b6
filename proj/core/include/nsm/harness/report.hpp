// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "nsm/norms.hpp"

namespace nsm::harness {

using Params = std::vector<std::pair<std::string, double>>;

/// Per-sample LHS/RHS of one inequality and the ratio statistics.
struct EstimateReport {
  std::string id;
  std::vector<double> lhs;
  std::vector<double> rhs;
  double max_ratio = 0.0;
  double min_ratio = 0.0;
  double median_ratio = 0.0;
  Params params;
  std::uint64_t seed = 0;
  double bound = kInf;
  bool pass = false;

  std::vector<double> ratios() const;
  /// Value of a named parameter; throws InvalidArgument when absent.
  double param(const std::string& name) const;
};

/// lhs / rhs with 0 / 0 = 0 and x / 0 = inf.
double estimate_ratio(double lhs, double rhs);

/// Fills the statistics; pass is max_ratio <= bound. Throws on negative or
/// NaN sides and on length mismatch.
EstimateReport make_report(std::string id, std::vector<double> lhs, std::vector<double> rhs, double bound,
                           std::uint64_t seed = 0, Params params = {});

/// One JSON object per line.
std::string to_json_line(const EstimateReport& report);
void write_json_lines(std::ostream& out, const std::vector<EstimateReport>& reports);

/// CSV with columns id, params, max_ratio, bound, pass.
void write_summary_csv(std::ostream& out, const std::vector<EstimateReport>& reports);

}  // namespace nsm::harness
