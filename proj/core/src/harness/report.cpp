// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#include "nsm/harness/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "json.hpp"
#include "nsm/error.hpp"

namespace nsm::harness {

namespace {

std::string fmt(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

nlohmann::json number(double x) {
  if (std::isfinite(x)) return x;
  return fmt(x);
}

}  // namespace

std::vector<double> EstimateReport::ratios() const {
  std::vector<double> r(lhs.size());
  for (std::size_t i = 0; i < lhs.size(); ++i) r[i] = estimate_ratio(lhs[i], rhs[i]);
  return r;
}

double EstimateReport::param(const std::string& name) const {
  for (const auto& [k, v] : params) {
    if (k == name) return v;
  }
  throw InvalidArgument("report " + id + " has no parameter " + name);
}

double estimate_ratio(double lhs, double rhs) {
  if (lhs == 0.0) return 0.0;
  if (rhs == 0.0) return kInf;
  return lhs / rhs;
}

EstimateReport make_report(std::string id, std::vector<double> lhs, std::vector<double> rhs, double bound,
                           std::uint64_t seed, Params params) {
  if (lhs.size() != rhs.size()) throw InvalidArgument("lhs/rhs length mismatch");
  if (lhs.empty()) throw InvalidArgument("report needs at least one sample");
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (!(lhs[i] >= 0.0) || !(rhs[i] >= 0.0)) throw InvalidArgument("estimate sides must be >= 0");
  }
  EstimateReport r;
  r.id = std::move(id);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.bound = bound;
  r.seed = seed;
  r.params = std::move(params);
  std::vector<double> ratios = r.ratios();
  r.max_ratio = *std::max_element(ratios.begin(), ratios.end());
  r.min_ratio = *std::min_element(ratios.begin(), ratios.end());
  std::sort(ratios.begin(), ratios.end());
  const std::size_t n = ratios.size();
  r.median_ratio = n % 2 == 1 ? ratios[n / 2] : 0.5 * (ratios[n / 2 - 1] + ratios[n / 2]);
  r.pass = r.max_ratio <= bound;
  return r;
}

std::string to_json_line(const EstimateReport& report) {
  nlohmann::ordered_json j;
  j["id"] = report.id;
  j["seed"] = report.seed;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : report.params) params[k] = number(v);
  j["params"] = params;
  nlohmann::json lhs = nlohmann::json::array(), rhs = nlohmann::json::array();
  for (double x : report.lhs) lhs.push_back(number(x));
  for (double x : report.rhs) rhs.push_back(number(x));
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  j["max_ratio"] = number(report.max_ratio);
  j["min_ratio"] = number(report.min_ratio);
  j["median_ratio"] = number(report.median_ratio);
  j["bound"] = number(report.bound);
  j["pass"] = report.pass;
  return j.dump();
}

void write_json_lines(std::ostream& out, const std::vector<EstimateReport>& reports) {
  for (const auto& r : reports) out << to_json_line(r) << '\n';
}

void write_summary_csv(std::ostream& out, const std::vector<EstimateReport>& reports) {
  out << "id,params,max_ratio,bound,pass\n";
  for (const auto& r : reports) {
    std::string params;
    for (const auto& [k, v] : r.params) {
      if (!params.empty()) params += ';';
      params += k + "=" + fmt(v);
    }
    out << r.id << ",\"" << params << "\"," << fmt(r.max_ratio) << ',' << fmt(r.bound) << ','
        << (r.pass ? "true" : "false") << '\n';
  }
}

}  // namespace nsm::harness
