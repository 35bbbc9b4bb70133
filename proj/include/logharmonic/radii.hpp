#pragma once

// Bohr-type radii r1..r6 and the starlikeness radii. Each radius is the
// unique zero of an increasing function on (0, 1), written as
// log(left side) - log(distance bound) so that it stays finite up to r = 1.

#include <optional>
#include <string>
#include <vector>

#include "logharmonic/bounds.hpp"
#include "logharmonic/mappings.hpp"
#include "logharmonic/numerics.hpp"

namespace logharmonic {

enum class RadiusId { r1, r2, r3, r4, r5, r6, starlike_class, starlike_example };

std::string to_string(RadiusId id);
/// Accepts r1..r6, "starlike" and "starlike-example". Throws PreconditionError.
RadiusId radius_from_string(const std::string& name);

struct RadiusEquation {
  RadiusId id;
  Params params;
};

/// Value of the defining function at r. Negative below the root and positive
/// above it. Throws DomainError unless 0 < r < 1.
///
/// With x = r^k, d_F, d_H, d_G the distance bounds and E the growth exponent
/// 4(1-a) x / (k (1-x)):
///   r1: log r - 2a(3-2a)/k log(1-x) + 4(1-a)(2-a) x/(k(1-x)) + (2a-1) Li2(x)/k - log d_F
///   r2: log r - (5-4a)/k log(1-x) + 2(1-a)(3-2a) x/(k(1-x)) + Li2(x)/k - log d_H
///   r3: log r - (2a-1)(5-4a)/k log(1-x) + 2(1-a)(3-2a) x/(k(1-x)) + (2a-1)^2 Li2(x)/k - log d_G
///   r4: 2 + log r - 2a/k log(1-x) + E - log d_F
///   r5: log(r + r (1-x)^(-2a/k) e^E) - log d_F
///   r6: log(r (2 - (1+2a) x + x^2) (1-x)^(-2(a+k)/k) e^E) - log d_F
///   starlike_class:   -((1+2a) x^2 - (6-2a) x + 1)
///   starlike_example: -(1 + (1-2k) x^2 - 2(k-1) x)
double equation_value(const RadiusEquation& eq, double r);

/// Root of the equation on [1e-12, 1 - 1e-9]. Throws NoRootError when the
/// root is not inside that interval (starlike_example at k = 1 has its root
/// at r = 1).
numerics::RootResult solve_radius(const RadiusEquation& eq, double tol = 1e-10);

/// The distance bound each Bohr radius is measured against.
Quantity bohr_target(RadiusId id);

struct BohrSum {
  double value = 0.0;
  int terms = 0;
  double tail_bound = 0.0;  ///< bound on the dropped part of the exponent series
  bool truncation_ok = true;
};

/// Majorant series of the Bohr inequality for r1..r6 with the extremal
/// coefficients a_n = 2(1-a)/k + 1/(kn), b_n = 2(1-a)/k + (2a-1)/(kn):
///   r1: r exp(sum (a_n + b_n + k a_n b_n) x^n)
///   r2: r exp(sum (a_n + k a_n^2) x^n)
///   r3: r exp(sum (b_n + k b_n^2) x^n)
///   r4: e^2 r exp(sum (a_n + b_n) x^n)
///   r5: r + r exp(sum (a_n + b_n) x^n)
///   r6: |r f_z(r)| + r exp(sum (a_n + b_n) x^n), f the Koebe map.
/// Without `terms` the series is cut at the first N whose tail is below
/// 1e-12. With `terms`, truncation_ok reports whether that target is met.
BohrSum bohr_sum(RadiusId id, const Params& params, double r, std::optional<int> terms = std::nullopt);

struct StarlikeRadius {
  double value = 0.0;
  bool saturated = false;  ///< Re(Df/f) > alpha held up to r = 1 - 1e-9
};

/// Largest r such that Re(d_ratio(map, rho e^{i theta})) > alpha on a
/// 720-point theta grid for every rho <= r, located by a radial scan
/// followed by bisection to `tol`.
StarlikeRadius starlike_radius_numeric(const LogharmonicMap& map, double alpha, double tol = 1e-10);

/// Reference table values.
struct ReferenceTable {
  RadiusId id;
  std::vector<double> alphas;
  std::vector<int> ks;
  std::vector<std::vector<double>> improved;    ///< [alpha][k]
  std::vector<std::vector<double>> comparison;  ///< empty for r4..r6
};
const ReferenceTable& reference_table(RadiusId id);

}  // namespace logharmonic
