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

#ifndef ORBITGEN_HYBRID_SYSTEM_HPP
#define ORBITGEN_HYBRID_SYSTEM_HPP

#include <functional>
#include <iostream>

#include "orbitgen/core.hpp"

namespace orbitgen {

/// Second-order mechanical form of an underactuated system:
///   M(q) qdd + C(q, qd) + G(q) = Y_u(q) u            (actuated, m < n_q)
///   M(q) qdd + C(q, qd) + G(q) = Y(q) [u; u_emb]     (fully actuated embedding)
/// with Y(q) = [Y_u(q)  Y_emb(q)] square and invertible on the operating range.
struct MechanicalModel {
  int dof = 0;    // n_q
  int n_act = 0;  // m, number of actuated inputs

  std::function<Mat(const Vec&)> mass;                 // q -> n_q x n_q
  std::function<Vec(const Vec&, const Vec&)> coriolis; // (q, qd) -> n_q vector
  std::function<Vec(const Vec&)> gravity;              // q -> n_q vector
  std::function<Mat(const Vec&)> input_map_actuated;   // q -> n_q x m
  std::function<Mat(const Vec&)> input_map_embedding;  // q -> n_q x (n_q - m)

  int n_emb() const { return dof - n_act; }

  Mat input_map_full(const Vec& q) const {
    Mat Y(dof, dof);
    Y.leftCols(n_act) = input_map_actuated(q);
    Y.rightCols(n_emb()) = input_map_embedding(q);
    return Y;
  }
};

/// Solve M(q) qdd = rhs with a factorization; an explicit inverse is never
/// formed. LDLT is applicable because the mass matrix is symmetric.
inline Vec mass_solve(const MechanicalModel& model, const Vec& q, const Vec& rhs) {
  const Mat M = model.mass(q);
  Eigen::LDLT<Mat> ldlt(M);
  if (ldlt.info() != Eigen::Success || !ldlt.isPositive()) {
    throw SingularMassMatrixError("mass matrix not positive definite at requested configuration");
  }
  return ldlt.solve(rhs);
}

/// One continuous mode plus an impact: flow field(s) derived from the
/// mechanical model, a signed scalar guard (zero exactly on the jump set,
/// negative strictly inside the swing phase by convention), and an
/// invertible jump map.
struct HybridSystem {
  MechanicalModel model;
  std::function<double(const Vec&)> guard;        // signed distance to the jump set
  std::function<Vec(const Vec&)> jump;            // x- -> x+
  std::function<Vec(const Vec&)> inverse_jump;    // x+ -> x-

  int state_dim() const { return 2 * model.dof; }

  /// Drift field f(x): dynamics with all inputs zero.
  Vec drift(const Vec& x) const {
    const Vec q = x.head(model.dof);
    const Vec qd = x.tail(model.dof);
    Vec out(state_dim());
    out.head(model.dof) = qd;
    out.tail(model.dof) = mass_solve(model, q, -model.coriolis(q, qd) - model.gravity(q));
    return out;
  }

  /// Input field g(x) = [0; M^-1 Y_u], column by column through the solver.
  Mat input_field(const Vec& x) const {
    const Vec q = x.head(model.dof);
    Mat g = Mat::Zero(state_dim(), model.n_act);
    const Mat Yu = model.input_map_actuated(q);
    for (int j = 0; j < model.n_act; ++j) {
      g.col(j).tail(model.dof) = mass_solve(model, q, Yu.col(j));
    }
    return g;
  }

  /// Embedding field g_emb(x) = [0; M^-1 Y_emb].
  Mat embedding_field(const Vec& x) const {
    const Vec q = x.head(model.dof);
    Mat g = Mat::Zero(state_dim(), model.n_emb());
    const Mat Ye = model.input_map_embedding(q);
    for (int j = 0; j < model.n_emb(); ++j) {
      g.col(j).tail(model.dof) = mass_solve(model, q, Ye.col(j));
    }
    return g;
  }
};

/// xdot = f(x) + g(x) u, evaluated with a single mass-matrix solve.
inline Vec continuous_dynamics(const HybridSystem& sys, const Vec& x, const Vec& u) {
  const auto& m = sys.model;
  const Vec q = x.head(m.dof);
  const Vec qd = x.tail(m.dof);
  Vec out(sys.state_dim());
  out.head(m.dof) = qd;
  out.tail(m.dof) =
      mass_solve(m, q, m.input_map_actuated(q) * u - m.coriolis(q, qd) - m.gravity(q));
  return out;
}

/// xdot = f(x) + g(x) u + g_emb(x) u_emb for the fully actuated embedding.
inline Vec embedded_dynamics(const HybridSystem& sys, const Vec& x, const Vec& u,
                             const Vec& u_emb) {
  const auto& m = sys.model;
  const Vec q = x.head(m.dof);
  const Vec qd = x.tail(m.dof);
  Vec out(sys.state_dim());
  out.head(m.dof) = qd;
  out.tail(m.dof) = mass_solve(
      m, q,
      m.input_map_actuated(q) * u + m.input_map_embedding(q) * u_emb -
          m.coriolis(q, qd) - m.gravity(q));
  return out;
}

inline double guard_distance(const HybridSystem& sys, const Vec& x) { return sys.guard(x); }

/// Apply the jump map. The map is evaluable anywhere; states far from the
/// jump set are flagged on stderr since that usually signals caller misuse.
inline Vec jump_map(const HybridSystem& sys, const Vec& x_minus,
                    double guard_warn_tol = 1e-6) {
  if (std::abs(sys.guard(x_minus)) > guard_warn_tol) {
    std::cerr << "orbitgen: warning: jump map evaluated off the jump set (guard = "
              << sys.guard(x_minus) << ")\n";
  }
  return sys.jump(x_minus);
}

inline Vec inverse_jump_map(const HybridSystem& sys, const Vec& x_plus) {
  return sys.inverse_jump(x_plus);
}

/// First-order control system view consumed by the integrator and optimizer.
struct ControlSystem {
  int n = 0;
  int m = 0;
  std::function<Vec(const Vec&, const Vec&)> f;
};

inline ControlSystem underactuated_system(const HybridSystem& sys) {
  return ControlSystem{sys.state_dim(), sys.model.n_act,
                       [sys](const Vec& x, const Vec& u) { return continuous_dynamics(sys, x, u); }};
}

/// Fully actuated embedding with stacked input [u; u_emb].
inline ControlSystem embedded_system(const HybridSystem& sys) {
  const int m = sys.model.n_act;
  const int p = sys.model.n_emb();
  return ControlSystem{sys.state_dim(), m + p, [sys, m, p](const Vec& x, const Vec& ue) {
                         return embedded_dynamics(sys, x, ue.head(m), ue.tail(p));
                       }};
}

}  // namespace orbitgen

#endif  // ORBITGEN_HYBRID_SYSTEM_HPP
