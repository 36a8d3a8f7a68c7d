#pragma once

#include "pdecomp/core/errors.hpp"
#include "pdecomp/core/tensor.hpp"

namespace pdecomp::numerics {

// Uniform 1D grid over [0, length] with n_x points including both ends.
struct Grid1D {
  int n_x = 0;
  double length = 1.0;

  double spacing() const { return length / (n_x - 1); }
  double x(int i) const { return spacing() * i; }

  void validate() const {
    if (n_x < 3) throw ParameterError("Grid1D: n_x must be >= 3");
    if (!(length > 0.0)) throw ParameterError("Grid1D: length must be > 0");
  }

  bool operator==(const Grid1D&) const = default;
};

// One physical field sampled at n_t uniformly spaced times on a Grid1D.
// Row 0 is the state at t=0, row n_t-1 the state at t_final.
struct FieldTrajectory {
  TensorD values;  // [n_t, n_x]
  Grid1D grid;
  int n_t = 0;
  double t_final = 0.0;

  double time_of(int row) const { return t_final * row / (n_t - 1); }

  void validate() const {
    grid.validate();
    if (n_t < 2) throw ParameterError("FieldTrajectory: n_t must be >= 2");
    if (!(t_final > 0.0)) {
      throw ParameterError("FieldTrajectory: t_final must be > 0");
    }
    if (values.rank() != 2 || values.dim(0) != n_t ||
        values.dim(1) != grid.n_x) {
      throw ParameterError("FieldTrajectory: values shape mismatch " +
                           shape_str(values));
    }
    for (double v : values.flat()) {
      if (!std::isfinite(v)) {
        throw ParameterError("FieldTrajectory: non-finite value");
      }
    }
  }

  // Linear interpolation in time; clamps outside [0, t_final].
  double interp(double t, int ix) const {
    const double dt = t_final / (n_t - 1);
    double s = t / dt;
    if (s <= 0.0) return values.at(0, ix);
    if (s >= n_t - 1) return values.at(n_t - 1, ix);
    const int k = static_cast<int>(s);
    const double w = s - k;
    return (1.0 - w) * values.at(k, ix) + w * values.at(k + 1, ix);
  }
};

}  // namespace pdecomp::numerics
