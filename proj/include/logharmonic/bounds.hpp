#pragma once

// Closed-form growth, coefficient, distortion, phi/omega and distance bounds
// for the class of k-fold symmetric logharmonic maps starlike of order alpha
// with omega(0) = 0. Every bound is computed in log form and exponentiated
// at the end; the log values are kept so callers can work past the overflow
// threshold as r approaches 1.

#include <string>

#include "logharmonic/mappings.hpp"

namespace logharmonic {

enum class Quantity {
  abs_h,
  abs_g,
  abs_f,
  fz,
  fzbar,
  h_prime,
  g_prime,
  phi_ratio,
  phi_abs,
  omega_ratio,
  dist_f,
  dist_h,
  dist_g,
};

std::string to_string(Quantity q);
/// Inverse of to_string (names like "abs-f", "fzbar", "dist-g"). Throws PreconditionError.
Quantity quantity_from_string(const std::string& name);

struct Bounds {
  double lower = 0.0;
  double upper = 0.0;
  Quantity quantity = Quantity::abs_f;
  /// The displayed lower value before flooring at 0 (equals `lower` unless floored).
  double raw_lower = 0.0;
  /// Natural logs of the bounds; -inf when the lower bound is not positive.
  double log_lower = 0.0;
  double log_upper = 0.0;
};

/// Bounds on |h|, |g| or |f| at |z| = r. Throws DomainError unless 0 < r < 1.
Bounds growth_bounds(const Params& params, double r, Quantity which);

struct CoeffBound {
  int n = 1;
  double a_bound = 0.0;  ///< 2(1-a)/k + 1/(kn)
  double b_bound = 0.0;  ///< 2(1-a)/k + (2a-1)/(kn)
};
CoeffBound coeff_bounds(const Params& params, int n);

/// Bounds on |f_z|, |f_zbar|, |h'| or |g'| at |z| = r.
///
/// For |h'| the upper bound carries the factor (1 - r^k)^(-1/k) that comes
/// from the bound on |h|; h_prime_upper_as_printed gives the form without it.
/// The |h'| lower bound is floored at 0 and the unfloored value is kept in
/// raw_lower.
Bounds distortion_bounds(const Params& params, double r, Quantity which);

/// (1 + (1-2a) r^k + (1 - r^k)^2) / (r (1 - r^k)^2) exp(2(1-a) r^k / (k(1 - r^k))).
double h_prime_upper_as_printed(const Params& params, double r);

/// Bounds on |z phi'/phi|, |phi| and |omega/(1-omega)| at |z| = r.
Bounds phi_bounds(const Params& params, double r, Quantity which);

/// Lower bounds for the distance from the origin to the image boundary of
/// f, h and g; the upper value is 1.
Bounds distance_bounds(const Params& params, Quantity which);

}  // namespace logharmonic
