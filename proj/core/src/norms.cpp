// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#include "nsm/norms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nsm/error.hpp"
#include "nsm/reduce.hpp"

namespace nsm {

namespace {

void validate(const NormSpec& spec) {
  if (spec.alpha < 0.0) throw InvalidArgument("logarithmic weight alpha must be >= 0");
  if (spec.kind == NormSpec::Kind::besov) {
    if (spec.p != 2.0 && spec.p != kInf) throw InvalidArgument("Besov norms support p in {2, inf}");
    if (spec.r != 1.0 && spec.r != 2.0 && spec.r != kInf) {
      throw InvalidArgument("Besov norms support r in {1, 2, inf}");
    }
  }
  const double te = spec.time_exponent;
  if (te != 1.0 && te != 2.0 && te != kInf) throw InvalidArgument("time exponent must be 1, 2 or inf");
}

std::string exponent_name(double x) {
  if (x == kInf) return "inf";
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

std::string NormSpec::name() const {
  std::ostringstream os;
  if (time_exponent != kInf || tilde) os << (tilde ? "Lt" : "L") << exponent_name(time_exponent) << "_T ";
  if (kind == Kind::hst) {
    os << "H^{" << s << "," << t << "}_" << alpha;
  } else {
    os << "B^" << s << "_{" << exponent_name(p) << "," << exponent_name(r) << "}";
  }
  return os.str();
}

double hst_weight(int q, const NormSpec& spec) {
  if (q <= 0) return std::exp2(2.0 * q * spec.s);
  return std::pow(static_cast<double>(q), spec.alpha) * std::exp2(2.0 * q * spec.t);
}

double combine_shells(const std::vector<double>& amplitudes, int q_min, const NormSpec& spec) {
  validate(spec);
  std::vector<double> terms(amplitudes.size());
  if (spec.kind == NormSpec::Kind::hst) {
    for (std::size_t i = 0; i < amplitudes.size(); ++i) {
      const int q = q_min + static_cast<int>(i);
      terms[i] = hst_weight(q, spec) * amplitudes[i] * amplitudes[i];
    }
    return std::sqrt(pairwise_sum(terms));
  }
  for (std::size_t i = 0; i < amplitudes.size(); ++i) {
    const int q = q_min + static_cast<int>(i);
    terms[i] = std::exp2(q * spec.s) * amplitudes[i];
  }
  if (spec.r == kInf) {
    double m = 0.0;
    for (double x : terms) m = std::max(m, x);
    return m;
  }
  if (spec.r == 1.0) return pairwise_sum(terms);
  for (double& x : terms) x *= x;
  return std::sqrt(pairwise_sum(terms));
}

namespace {

std::vector<double> shell_amplitudes(const SpectralField& u, const DyadicPartition& part, double p) {
  return p == 2.0 ? shell_l2(u, part) : shell_linf(u, part);
}

}  // namespace

double norm_hst(const SpectralField& u, const DyadicPartition& part, const NormSpec& spec) {
  validate(spec);
  if (spec.kind != NormSpec::Kind::hst) throw InvalidArgument("norm_hst needs a Sobolev-type spec");
  return combine_shells(shell_l2(u, part), part.q_min(), spec);
}

double norm_besov(const SpectralField& u, const DyadicPartition& part, double s, double p, double r) {
  const NormSpec spec = NormSpec::besov(s, p, r);
  validate(spec);
  return combine_shells(shell_amplitudes(u, part, p), part.q_min(), spec);
}

double spatial_norm(const SpectralField& u, const DyadicPartition& part, const NormSpec& spec) {
  if (spec.kind == NormSpec::Kind::hst) return norm_hst(u, part, spec);
  return norm_besov(u, part, spec.s, spec.p, spec.r);
}

double time_norm(const std::vector<double>& times, const std::vector<double>& values, double exponent) {
  if (times.size() != values.size()) throw InvalidArgument("time/value length mismatch");
  if (times.empty()) throw InvalidArgument("empty time series");
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) throw InvalidArgument("times must be strictly increasing");
  }
  if (exponent == kInf) {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
  }
  if (times.size() < 2) throw InvalidArgument("time integral needs at least two samples");
  std::vector<double> terms(times.size() - 1);
  for (std::size_t i = 0; i + 1 < times.size(); ++i) {
    const double a = std::abs(values[i]);
    const double b = std::abs(values[i + 1]);
    const double h = times[i + 1] - times[i];
    terms[i] = exponent == 1.0 ? 0.5 * h * (a + b) : 0.5 * h * (a * a + b * b);
  }
  const double integral = pairwise_sum(terms);
  if (exponent == 1.0) return integral;
  if (exponent == 2.0) return std::sqrt(integral);
  throw InvalidArgument("time exponent must be 1, 2 or inf");
}

double spacetime_norm(const FieldHistory& history, const DyadicPartition& part, const NormSpec& spec) {
  validate(spec);
  if (history.samples.empty()) throw InvalidArgument("empty trajectory");
  if (history.samples.size() != history.times.size()) throw InvalidArgument("history length mismatch");
  if (!spec.tilde) {
    std::vector<double> values;
    values.reserve(history.samples.size());
    for (const auto& f : history.samples) values.push_back(spatial_norm(f, part, spec));
    return time_norm(history.times, values, spec.time_exponent);
  }
  const double p = spec.kind == NormSpec::Kind::hst ? 2.0 : spec.p;
  const auto shells = static_cast<std::size_t>(part.shell_count());
  std::vector<std::vector<double>> per_shell(shells, std::vector<double>(history.samples.size()));
  for (std::size_t i = 0; i < history.samples.size(); ++i) {
    const auto a = shell_amplitudes(history.samples[i], part, p);
    for (std::size_t s = 0; s < shells; ++s) per_shell[s][i] = a[s];
  }
  std::vector<double> amplitudes(shells);
  for (std::size_t s = 0; s < shells; ++s) {
    amplitudes[s] = time_norm(history.times, per_shell[s], spec.time_exponent);
  }
  return combine_shells(amplitudes, part.q_min(), spec);
}

double spacetime_lebesgue(const FieldHistory& history, Lp p, double time_exponent) {
  if (history.samples.empty()) throw InvalidArgument("empty trajectory");
  std::vector<double> values;
  values.reserve(history.samples.size());
  for (const auto& f : history.samples) values.push_back(lp_norm(f, p));
  return time_norm(history.times, values, time_exponent);
}

}  // namespace nsm
