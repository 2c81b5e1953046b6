// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#include "nsm/spectral_ops.hpp"

#include <cmath>
#include <vector>

#include "nsm/error.hpp"
#include "nsm/reduce.hpp"

namespace nsm {

namespace {

constexpr cplx kI{0.0, 1.0};

PhysicalField truncated_physical(const SpectralField& f) {
  SpectralField t = f;
  t.truncate();
  return t.to_physical();
}

SpectralField truncated_spectral(const PhysicalField& p) {
  SpectralField out = SpectralField::from_physical(p);
  out.truncate();
  return out;
}

}  // namespace

SpectralField apply_diff(const SpectralField& field, VectorOp op) {
  const Grid& g = field.grid();
  SpectralField out(field.grid_ptr());
  switch (op) {
    case VectorOp::gradient: {
      for (int c = 1; c < 3; ++c) {
        for (const cplx& z : field.component(c)) {
          if (z != cplx{}) throw InvalidArgument("gradient expects a scalar in component 0");
        }
      }
      for (std::size_t m = 0; m < g.size(); ++m) {
        const Vec3& k = g.k(m);
        const cplx p = field.at(0, m);
        for (int c = 0; c < 3; ++c) out.at(c, m) = kI * k[c] * p;
      }
      break;
    }
    case VectorOp::divergence:
      for (std::size_t m = 0; m < g.size(); ++m) {
        const Vec3& k = g.k(m);
        out.at(0, m) = kI * (k[0] * field.at(0, m) + k[1] * field.at(1, m) + k[2] * field.at(2, m));
      }
      break;
    case VectorOp::curl:
      for (std::size_t m = 0; m < g.size(); ++m) {
        const Vec3& k = g.k(m);
        const auto f = field.mode(m);
        out.at(0, m) = kI * (k[1] * f[2] - k[2] * f[1]);
        out.at(1, m) = kI * (k[2] * f[0] - k[0] * f[2]);
        out.at(2, m) = kI * (k[0] * f[1] - k[1] * f[0]);
      }
      break;
    case VectorOp::laplacian:
      for (std::size_t m = 0; m < g.size(); ++m) {
        const double ksq = g.ksq(m);
        for (int c = 0; c < 3; ++c) out.at(c, m) = -ksq * field.at(c, m);
      }
      break;
    default:
      throw InvalidArgument("unsupported differential operator");
  }
  return out;
}

SpectralField partial(const SpectralField& field, int axis) {
  const Grid& g = field.grid();
  if (axis < 0 || axis >= g.dim()) throw InvalidArgument("derivative axis out of range");
  SpectralField out(field.grid_ptr());
  for (std::size_t m = 0; m < g.size(); ++m) {
    const cplx factor = kI * g.k(m)[axis];
    for (int c = 0; c < 3; ++c) out.at(c, m) = factor * field.at(c, m);
  }
  return out;
}

SpectralField leray_project(const SpectralField& field) {
  const Grid& g = field.grid();
  SpectralField out = field;
  for (std::size_t m = 1; m < g.size(); ++m) {
    const double ksq = g.ksq(m);
    if (ksq == 0.0) continue;
    const Vec3& k = g.k(m);
    const auto f = field.mode(m);
    const cplx kf = (k[0] * f[0] + k[1] * f[1] + k[2] * f[2]) / ksq;
    for (int c = 0; c < 3; ++c) out.at(c, m) = f[c] - k[c] * kf;
  }
  return out;
}

void combine_physical(const PhysicalField& a, const PhysicalField& b, Combiner combiner,
                      PhysicalField& out) {
  const std::size_t n = a.size();
  switch (combiner) {
    case Combiner::cross:
      for (std::size_t j = 0; j < n; ++j) {
        const double a0 = a.comp[0][j], a1 = a.comp[1][j], a2 = a.comp[2][j];
        const double b0 = b.comp[0][j], b1 = b.comp[1][j], b2 = b.comp[2][j];
        out.comp[0][j] = a1 * b2 - a2 * b1;
        out.comp[1][j] = a2 * b0 - a0 * b2;
        out.comp[2][j] = a0 * b1 - a1 * b0;
      }
      break;
    case Combiner::scalar:
      for (int c = 0; c < 3; ++c) {
        for (std::size_t j = 0; j < n; ++j) out.comp[c][j] = a.comp[c][j] * b.comp[c][j];
      }
      break;
    case Combiner::advection:
      throw InvalidArgument("advection needs derivatives; use pointwise_product");
  }
}

SpectralField pointwise_product(const SpectralField& a, const SpectralField& b,
                                Combiner combiner) {
  if (!same_grid(a.grid(), b.grid())) throw InvalidArgument("product of fields on different grids");
  const GridPtr& gp = a.grid_ptr();
  PhysicalField out(gp);
  if (combiner == Combiner::advection) {
    const PhysicalField pa = truncated_physical(a);
    for (int axis = 0; axis < gp->dim(); ++axis) {
      const PhysicalField db = truncated_physical(partial(b, axis));
      const auto& aj = pa.comp[axis];
      for (int c = 0; c < 3; ++c) {
        for (std::size_t j = 0; j < out.size(); ++j) out.comp[c][j] += aj[j] * db.comp[c][j];
      }
    }
  } else {
    combine_physical(truncated_physical(a), truncated_physical(b), combiner, out);
  }
  return truncated_spectral(out);
}

double lp_norm(const SpectralField& field, Lp p) {
  if (p == Lp::two) {
    std::vector<double> terms(field.data().size());
    for (std::size_t i = 0; i < terms.size(); ++i) terms[i] = std::norm(field.data()[i]);
    return std::sqrt(field.grid().volume() * pairwise_sum(terms));
  }
  const PhysicalField phys = field.to_physical();
  double worst = 0.0;
  for (std::size_t j = 0; j < phys.size(); ++j) {
    const double v = std::sqrt(phys.comp[0][j] * phys.comp[0][j] +
                               phys.comp[1][j] * phys.comp[1][j] +
                               phys.comp[2][j] * phys.comp[2][j]);
    worst = std::max(worst, v);
  }
  return worst;
}

double inner(const SpectralField& a, const SpectralField& b) {
  if (!same_grid(a.grid(), b.grid())) throw InvalidArgument("inner product across grids");
  std::vector<double> terms(a.data().size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    terms[i] = (std::conj(a.data()[i]) * b.data()[i]).real();
  }
  return a.grid().volume() * pairwise_sum(terms);
}

double divergence_norm(const SpectralField& f) {
  return l2_norm(apply_diff(f, VectorOp::divergence));
}

double gradient_norm(const SpectralField& f) {
  const Grid& g = f.grid();
  std::vector<double> terms(g.size());
  for (std::size_t m = 0; m < g.size(); ++m) {
    const auto v = f.mode(m);
    terms[m] = g.ksq(m) * (std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]));
  }
  return std::sqrt(g.volume() * pairwise_sum(terms));
}

}  // namespace nsm
