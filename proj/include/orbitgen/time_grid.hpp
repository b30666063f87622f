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

#ifndef ORBITGEN_TIME_GRID_HPP
#define ORBITGEN_TIME_GRID_HPP

#include <stdexcept>

namespace orbitgen {

/// Uniform time grid on [0, T] with N intervals (N+1 nodes).
class TimeGrid {
public:
  TimeGrid() = default;
  TimeGrid(double T, int N) : T_(T), N_(N) {
    if (!(T > 0.0)) throw std::invalid_argument("TimeGrid: horizon must be positive");
    if (N < 100) throw std::invalid_argument("TimeGrid: need at least 100 intervals");
  }

  double horizon() const { return T_; }
  int intervals() const { return N_; }
  int nodes() const { return N_ + 1; }
  double step() const { return T_ / N_; }
  double time(int k) const { return (k == N_) ? T_ : k * step(); }

  bool operator==(const TimeGrid& o) const { return T_ == o.T_ && N_ == o.N_; }

private:
  double T_ = 1.0;
  int N_ = 100;
};

}  // namespace orbitgen

#endif  // ORBITGEN_TIME_GRID_HPP
