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

#ifndef ORBITGEN_BIPED_HPP
#define ORBITGEN_BIPED_HPP

#include <cmath>

#include "orbitgen/core.hpp"
#include "orbitgen/hybrid_system.hpp"

namespace orbitgen {

/// Three-link compass biped with torso. q = [theta1 theta2 theta3]:
/// stance leg, swing leg, torso. u = [u1 u2]: hip torques between the torso
/// and the stance/swing leg. The embedding input is a fictitious torque
/// acting directly on the torso angle.
struct BipedParams {
  double m = 5.0;      // leg mass [kg]
  double M_H = 15.0;   // hip mass [kg]
  double M_T = 10.0;   // torso mass [kg]
  double r = 1.0;      // leg length [m]
  double l = 0.5;      // torso length [m]
  double g = 9.81;     // gravity [m/s^2]
  double theta1_jmp = kPi / 8.0;  // stance angle at which the swing foot strikes [rad]

  void validate() const {
    if (!(m > 0 && M_H > 0 && M_T > 0 && r > 0 && l > 0 && g > 0)) {
      throw ConfigError("BipedParams: masses, lengths and gravity must be positive");
    }
  }
};

inline Mat biped_mass_matrix(const BipedParams& p, const Vec& th) {
  const double c12 = std::cos(th(0) - th(1));
  const double c13 = std::cos(th(0) - th(2));
  Mat M(3, 3);
  M << (1.25 * p.m + p.M_H + p.M_T) * p.r * p.r, -0.5 * p.m * p.r * p.r * c12,
      p.M_T * p.r * p.l * c13,
      -0.5 * p.m * p.r * p.r * c12, 0.25 * p.m * p.r * p.r, 0.0,
      p.M_T * p.r * p.l * c13, 0.0, p.M_T * p.l * p.l;
  return M;
}

inline Vec biped_coriolis(const BipedParams& p, const Vec& th, const Vec& thd) {
  const double s12 = std::sin(th(0) - th(1));
  const double s13 = std::sin(th(0) - th(2));
  Vec C(3);
  C << -0.5 * p.m * p.r * p.r * s12 * thd(1) * thd(1) +
           p.M_T * p.r * p.l * s13 * thd(2) * thd(2),
      0.5 * p.m * p.r * p.r * s12 * thd(0) * thd(0),
      -p.M_T * p.r * p.l * s13 * thd(0) * thd(0);
  return C;
}

inline Vec biped_gravity(const BipedParams& p, const Vec& th) {
  Vec G(3);
  G << -0.5 * p.g * (2.0 * p.M_H + 3.0 * p.m + 2.0 * p.M_T) * p.r * std::sin(th(0)),
      0.5 * p.g * p.m * p.r * std::sin(th(1)),
      -p.g * p.M_T * p.l * std::sin(th(2));
  return G;
}

/// Potential whose gradient is biped_gravity; used by the energy checks.
inline double biped_potential(const BipedParams& p, const Vec& th) {
  return 0.5 * p.g * (2.0 * p.M_H + 3.0 * p.m + 2.0 * p.M_T) * p.r * std::cos(th(0)) -
         0.5 * p.g * p.m * p.r * std::cos(th(1)) + p.g * p.M_T * p.l * std::cos(th(2));
}

/// Kinetic plus potential energy of the swing phase.
inline double biped_energy(const BipedParams& p, const Vec& x) {
  const Vec th = x.head(3);
  const Vec thd = x.tail(3);
  return 0.5 * thd.dot(biped_mass_matrix(p, th) * thd) + biped_potential(p, th);
}

struct BipedTorqueMaps {
  Mat Yu;    // 3 x 2
  Mat Yemb;  // 3 x 1
  Mat Y;     // 3 x 3, constant for this model
};

inline BipedTorqueMaps biped_torque_maps(const BipedParams&) {
  BipedTorqueMaps t;
  t.Yu = Mat(3, 2);
  t.Yu << -1.0, 0.0, 0.0, -1.0, 1.0, 1.0;
  t.Yemb = Mat(3, 1);
  t.Yemb << 0.0, 0.0, 1.0;
  t.Y = Mat(3, 3);
  t.Y.leftCols(2) = t.Yu;
  t.Y.rightCols(1) = t.Yemb;
  return t;
}

/// Velocity reset A(theta-) relating post- and pre-impact joint velocities,
/// thd+ = A(theta-) thd-. Third column is [0 0 1]: the torso rate carries a
/// contribution from the leg rates but no leg rate depends on it.
inline Mat biped_impact_matrix(const BipedParams& p, const Vec& thm) {
  const double t1 = thm(0), t2 = thm(1), t3 = thm(2);
  const double den = -3.0 * p.m - 4.0 * p.M_H - 2.0 * p.M_T +
                     2.0 * p.m * std::cos(2.0 * t1 - 2.0 * t2) +
                     2.0 * p.M_T * std::cos(-2.0 * t2 + 2.0 * t3);
  if (std::abs(den) < 1e-12) {
    throw SingularImpactMatrixError("impact matrix denominator vanished");
  }
  Mat A(3, 3);
  A(0, 0) = (2.0 * p.M_T * std::cos(-t1 - t2 + 2.0 * t3) -
             (2.0 * p.m + 4.0 * p.M_H + 2.0 * p.M_T) * std::cos(t1 - t2)) /
            den;
  A(0, 1) = p.m / den;
  A(0, 2) = 0.0;
  A(1, 0) = (p.m - (4.0 * p.m + 4.0 * p.M_H + 2.0 * p.M_T) * std::cos(2.0 * t1 - 2.0 * t2) +
             2.0 * p.M_T * std::cos(2.0 * t1 - 2.0 * t3)) /
            den;
  A(1, 1) = 2.0 * p.m * std::cos(t1 - t2) / den;
  A(1, 2) = 0.0;
  A(2, 0) = ((2.0 * p.m * p.r + 2.0 * p.M_H * p.r + 2.0 * p.M_T * p.r) *
                 std::cos(t1 - 2.0 * t2 + t3) -
             2.0 * p.M_H * p.r * std::cos(-t1 + t3) -
             (2.0 * p.m * p.r + 2.0 * p.M_T * p.r) * std::cos(-t1 + t3) +
             p.m * p.r * std::cos(-3.0 * t1 + 2.0 * t2 + t3)) /
            (p.l * den);
  A(2, 1) = -p.r * p.m * std::cos(-t2 + t3) / (p.l * den);
  A(2, 2) = 1.0;
  return A;
}

/// Leg relabeling at impact: stance and swing angles swap, the torso angle
/// is untouched. R is involutory.
inline Mat biped_relabel_matrix() {
  Mat R(3, 3);
  R << 0, 1, 0, 1, 0, 0, 0, 0, 1;
  return R;
}

/// Assemble the hybrid walking model: swing-phase mechanics, guard
/// theta1 - theta1_jmp, jump [R theta-; A(theta-) thd-] and its inverse.
inline HybridSystem make_biped_system(const BipedParams& p,
                                      double impact_cond_bound = 1e8) {
  p.validate();
  MechanicalModel model;
  model.dof = 3;
  model.n_act = 2;
  model.mass = [p](const Vec& q) { return biped_mass_matrix(p, q); };
  model.coriolis = [p](const Vec& q, const Vec& qd) { return biped_coriolis(p, q, qd); };
  model.gravity = [p](const Vec& q) { return biped_gravity(p, q); };
  model.input_map_actuated = [p](const Vec&) { return biped_torque_maps(p).Yu; };
  model.input_map_embedding = [p](const Vec&) { return biped_torque_maps(p).Yemb; };

  HybridSystem sys;
  sys.model = model;
  sys.guard = [p](const Vec& x) { return x(0) - p.theta1_jmp; };
  sys.jump = [p](const Vec& x) {
    const Vec th = x.head(3);
    const Vec thd = x.tail(3);
    Vec out(6);
    out.head(3) = biped_relabel_matrix() * th;
    out.tail(3) = biped_impact_matrix(p, th) * thd;
    return out;
  };
  sys.inverse_jump = [p, impact_cond_bound](const Vec& xp) {
    // theta- = R theta+ (R is its own inverse), then solve A(theta-) thd- = thd+.
    const Vec thm = biped_relabel_matrix() * xp.head(3);
    const Mat A = biped_impact_matrix(p, thm);
    if (condition_number(A) > impact_cond_bound) {
      throw SingularImpactMatrixError("impact matrix ill-conditioned, jump not invertible");
    }
    Vec out(6);
    out.head(3) = thm;
    out.tail(3) = A.partialPivLu().solve(xp.tail(3));
    return out;
  };
  return sys;
}

}  // namespace orbitgen

#endif  // ORBITGEN_BIPED_HPP
