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

#ifndef ORBITGEN_INTEGRATOR_HPP
#define ORBITGEN_INTEGRATOR_HPP

#include <functional>

#include "orbitgen/curve.hpp"
#include "orbitgen/hybrid_system.hpp"

namespace orbitgen {

using InputSignal = std::function<Vec(double)>;  // t -> input

/// One classical RK4 step of xdot = f(x, u(t)) from t over step h.
inline Vec rk4_step(const std::function<Vec(const Vec&, const Vec&)>& f, const Vec& x,
                    double t, double h, const InputSignal& input) {
  const Vec u0 = input(t);
  const Vec um = input(t + 0.5 * h);
  const Vec u1 = input(t + h);
  const Vec k1 = f(x, u0);
  const Vec k2 = f(x + 0.5 * h * k1, um);
  const Vec k3 = f(x + 0.5 * h * k2, um);
  const Vec k4 = f(x + h * k3, u1);
  return x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

/// Fixed-step RK4 on the grid with the input signal sampled at stage times.
/// Returns the sampled trajectory (states plus the node inputs).
inline Curve integrate(const ControlSystem& sys, const Vec& x0, const InputSignal& input,
                       const TimeGrid& grid) {
  Curve traj(grid, sys.n, sys.m);
  traj.x[0] = x0;
  const double h = grid.step();
  for (int k = 0; k < grid.intervals(); ++k) {
    traj.x[k + 1] = rk4_step(sys.f, traj.x[k], grid.time(k), h, input);
    if (!traj.x[k + 1].allFinite()) {
      throw NonFiniteStateError("integration produced a non-finite state at node " +
                                std::to_string(k + 1));
    }
  }
  for (int k = 0; k < grid.nodes(); ++k) traj.u[k] = input(grid.time(k));
  return traj;
}

/// Integrate with inputs given as node samples (linear interpolation between
/// nodes, matching the Curve convention).
inline Curve integrate(const ControlSystem& sys, const Vec& x0,
                       const std::vector<Vec>& node_inputs, const TimeGrid& grid) {
  const double h = grid.step();
  return integrate(
      sys, x0, [&](double t) { return interp_nodes(node_inputs, t / h); }, grid);
}

/// Worst node defect ||x_{k+1} - Phi_h(x_k, u)||_inf of a curve against one
/// RK4 step of the given dynamics with the curve's own interpolated inputs.
inline double trajectory_defect(const ControlSystem& sys, const Curve& c) {
  const double h = c.grid.step();
  double defect = 0.0;
  for (int k = 0; k < c.grid.intervals(); ++k) {
    const Vec pred = rk4_step(
        sys.f, c.x[k], c.grid.time(k), h,
        [&](double t) { return interp_nodes(c.u, t / h); });
    defect = std::max(defect, (c.x[k + 1] - pred).cwiseAbs().maxCoeff());
  }
  return defect;
}

}  // namespace orbitgen

#endif  // ORBITGEN_INTEGRATOR_HPP
