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

#ifndef ORBITGEN_CORE_HPP
#define ORBITGEN_CORE_HPP

#include <Eigen/Dense>
#include <functional>
#include <stdexcept>
#include <string>

namespace orbitgen {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Base class for all solver/model failures raised by this library.
class OrbitgenError : public std::runtime_error {
public:
  explicit OrbitgenError(const std::string& what) : std::runtime_error(what) {}
};

class SingularMassMatrixError : public OrbitgenError {
public:
  using OrbitgenError::OrbitgenError;
};

class SingularImpactMatrixError : public OrbitgenError {
public:
  using OrbitgenError::OrbitgenError;
};

class SingularInputMapError : public OrbitgenError {
public:
  using OrbitgenError::OrbitgenError;
};

class NonFiniteStateError : public OrbitgenError {
public:
  using OrbitgenError::OrbitgenError;
};

class DivergenceError : public OrbitgenError {
public:
  using OrbitgenError::OrbitgenError;
};

class RiccatiBlowupError : public OrbitgenError {
public:
  using OrbitgenError::OrbitgenError;
};

class LineSearchFailureError : public OrbitgenError {
public:
  using OrbitgenError::OrbitgenError;
};

class SingularSensitivityError : public OrbitgenError {
public:
  using OrbitgenError::OrbitgenError;
};

class ConfigError : public OrbitgenError {
public:
  using OrbitgenError::OrbitgenError;
};

class IoError : public OrbitgenError {
public:
  using OrbitgenError::OrbitgenError;
};

constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double d) { return d * kPi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / kPi; }

/// Condition number estimate from the singular values of a small dense matrix.
inline double condition_number(const Mat& A) {
  Eigen::JacobiSVD<Mat> svd(A);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(sv.size() - 1) <= 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return sv(0) / sv(sv.size() - 1);
}

}  // namespace orbitgen

#endif  // ORBITGEN_CORE_HPP
