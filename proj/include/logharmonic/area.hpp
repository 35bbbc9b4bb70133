#pragma once

#include <optional>

#include "logharmonic/mappings.hpp"

namespace logharmonic {

struct AreaResult {
  double lower_2piL1 = 0.0;    ///< may be negative for r near 1
  double lower_floored = 0.0;  ///< max(lower_2piL1, 0)
  std::optional<double> direct;
  double upper_2piL2 = 0.0;
  double quadrature_error = 0.0;  ///< summed error estimates, already scaled by 2 pi
  bool converged = true;
};

/// 2 pi L1 <= area of f(|z| < r) <= 2 pi L2, where L1 and L2 integrate the
/// squared f_z and f_zbar distortion bounds against rho d rho. `tol` is a
/// relative accuracy target for each of the four integrals. r = 0 gives 0.
AreaResult area_bounds(const Params& params, double r, double tol = 1e-10);

struct DirectArea {
  double value = 0.0;
  double error_estimate = 0.0;  ///< difference from the half-resolution rule
};

/// Integral of the Jacobian over |z| < r: Gauss-Legendre in rho with n_rho
/// nodes, trapezoid in theta with n_theta nodes. Throws SenseReversalError
/// at a negative Jacobian sample and DomainError unless 0 <= r < 1.
DirectArea area_direct(const LogharmonicMap& map, double r, int n_rho = 64, int n_theta = 128);

}  // namespace logharmonic
