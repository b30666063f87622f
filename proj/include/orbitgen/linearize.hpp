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

#ifndef ORBITGEN_LINEARIZE_HPP
#define ORBITGEN_LINEARIZE_HPP

#include <functional>
#include <vector>

#include "orbitgen/curve.hpp"

namespace orbitgen {

/// Central-difference Jacobian with per-component step scaling.
inline Mat finite_diff_jacobian(const std::function<Vec(const Vec&)>& fn, const Vec& x) {
  const Vec f0 = fn(x);
  Mat J(f0.size(), x.size());
  Vec xp = x, xm = x;
  for (int i = 0; i < x.size(); ++i) {
    const double d = std::max(1e-6, 1e-7 * std::abs(x(i)));
    xp(i) = x(i) + d;
    xm(i) = x(i) - d;
    J.col(i) = (fn(xp) - fn(xm)) / (2.0 * d);
    xp(i) = x(i);
    xm(i) = x(i);
  }
  return J;
}

/// Time-varying linearization A(t), B(t) sampled at the grid nodes.
struct Linearization {
  std::vector<Mat> A;
  std::vector<Mat> B;
};

inline Linearization linearize(const ControlSystem& sys, const Curve& traj) {
  Linearization lin;
  lin.A.reserve(traj.x.size());
  lin.B.reserve(traj.x.size());
  for (std::size_t k = 0; k < traj.x.size(); ++k) {
    const Vec& x = traj.x[k];
    const Vec& u = traj.u[k];
    lin.A.push_back(finite_diff_jacobian([&](const Vec& xx) { return sys.f(xx, u); }, x));
    lin.B.push_back(finite_diff_jacobian([&](const Vec& uu) { return sys.f(x, uu); }, u));
  }
  return lin;
}

/// Symmetric Hessian of one scalar-valued component map by central second
/// differences; used for the Newton-mode curvature terms.
inline Mat finite_diff_hessian(const std::function<double(const Vec&)>& fn, const Vec& x,
                               double rel_step = 5e-4) {
  const int n = static_cast<int>(x.size());
  Mat H(n, n);
  const double f0 = fn(x);
  Vec step(n);
  for (int i = 0; i < n; ++i) step(i) = std::max(rel_step, rel_step * std::abs(x(i)));
  Vec xx = x;
  for (int i = 0; i < n; ++i) {
    xx(i) = x(i) + step(i);
    const double fpp = fn(xx);
    xx(i) = x(i) - step(i);
    const double fmm = fn(xx);
    xx(i) = x(i);
    H(i, i) = (fpp - 2.0 * f0 + fmm) / (step(i) * step(i));
    for (int j = i + 1; j < n; ++j) {
      xx(i) = x(i) + step(i);
      xx(j) = x(j) + step(j);
      const double fa = fn(xx);
      xx(j) = x(j) - step(j);
      const double fb = fn(xx);
      xx(i) = x(i) - step(i);
      const double fd = fn(xx);
      xx(j) = x(j) + step(j);
      const double fc = fn(xx);
      xx(i) = x(i);
      xx(j) = x(j);
      H(i, j) = H(j, i) = (fa - fb - fc + fd) / (4.0 * step(i) * step(j));
    }
  }
  return H;
}

}  // namespace orbitgen

#endif  // ORBITGEN_LINEARIZE_HPP
