/*
 * This file is part of orbitgen, a library for designing periodic orbits
 * of underactuated mechanical systems with impacts.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 */

#ifndef ORBITGEN_CURVE_HPP
#define ORBITGEN_CURVE_HPP

#include <vector>

#include "orbitgen/core.hpp"
#include "orbitgen/time_grid.hpp"

namespace orbitgen {

/// A time-gridded state-input curve. Samples live at the grid nodes; between
/// nodes both states and inputs are read with linear interpolation (this is
/// the convention used by the integrator at Runge-Kutta stage times).
///
/// A Curve makes no feasibility claim. A curve whose states additionally
/// satisfy the discrete dynamics (small defect, see trajectory_defect) is
/// referred to as a trajectory throughout the library.
struct Curve {
  TimeGrid grid;
  std::vector<Vec> x;  // nodes() state samples
  std::vector<Vec> u;  // nodes() input samples

  Curve() = default;
  Curve(const TimeGrid& g, int n, int m)
      : grid(g),
        x(g.nodes(), Vec::Zero(n)),
        u(g.nodes(), Vec::Zero(m)) {}

  int state_dim() const { return x.empty() ? 0 : static_cast<int>(x.front().size()); }
  int input_dim() const { return u.empty() ? 0 : static_cast<int>(u.front().size()); }

  bool finite() const {
    for (const auto& xi : x)
      if (!xi.allFinite()) return false;
    for (const auto& ui : u)
      if (!ui.allFinite()) return false;
    return true;
  }
};

/// Linear interpolation of node samples at a fractional node index.
inline Vec interp_nodes(const std::vector<Vec>& samples, double idx) {
  const int last = static_cast<int>(samples.size()) - 1;
  if (idx <= 0.0) return samples.front();
  if (idx >= last) return samples.back();
  const int k = static_cast<int>(idx);
  const double f = idx - k;
  if (f == 0.0) return samples[k];
  return (1.0 - f) * samples[k] + f * samples[k + 1];
}

inline Mat interp_nodes(const std::vector<Mat>& samples, double idx) {
  const int last = static_cast<int>(samples.size()) - 1;
  if (idx <= 0.0) return samples.front();
  if (idx >= last) return samples.back();
  const int k = static_cast<int>(idx);
  const double f = idx - k;
  if (f == 0.0) return samples[k];
  return (1.0 - f) * samples[k] + f * samples[k + 1];
}

/// xi + gamma * zeta, nodewise on matching grids.
inline Curve curve_axpy(const Curve& xi, double gamma, const Curve& zeta) {
  Curve out = xi;
  for (std::size_t k = 0; k < out.x.size(); ++k) {
    out.x[k] += gamma * zeta.x[k];
    out.u[k] += gamma * zeta.u[k];
  }
  return out;
}

/// Largest node-wise state difference between two curves on the same grid.
inline double curve_state_distance(const Curve& a, const Curve& b) {
  double d = 0.0;
  for (std::size_t k = 0; k < a.x.size(); ++k) {
    d = std::max(d, (a.x[k] - b.x[k]).cwiseAbs().maxCoeff());
  }
  return d;
}

/// L2 norm over [0, T] of selected input components [lo, lo+len), by
/// trapezoidal quadrature of the squared norm.
inline double input_l2_norm(const Curve& c, int lo, int len) {
  const double h = c.grid.step();
  double acc = 0.0;
  for (int k = 0; k < c.grid.nodes(); ++k) {
    const double w = (k == 0 || k == c.grid.intervals()) ? 0.5 * h : h;
    acc += w * c.u[k].segment(lo, len).squaredNorm();
  }
  return std::sqrt(acc);
}

}  // namespace orbitgen

#endif  // ORBITGEN_CURVE_HPP
