#include "logharmonic/area.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "logharmonic/bounds.hpp"
#include "logharmonic/error.hpp"
#include "logharmonic/numerics.hpp"

namespace logharmonic {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Integral over rho in [0, r] of bound(rho)^2 rho, to a relative tolerance.
numerics::Quadrature integrate_squared_bound(const Params& params, double r, Quantity q, bool upper,
                                             double tol) {
  auto squared = [&](double rho) {
    const Bounds b = distortion_bounds(params, rho, q);
    return std::exp(2.0 * (upper ? b.log_upper : b.log_lower)) * rho;
  };
  // rho = r t^2 flattens the rho^(2k+1) onset for k >= 2.
  const bool substitute = params.k() >= 2;
  auto integrand = [&](double t) {
    if (substitute) return squared(r * t * t) * 2.0 * r * t;
    return squared(r * t) * r;
  };
  const double coarse =
      numerics::integrate(integrand, 0.0, 1.0, std::numeric_limits<double>::max()).value;
  const double abs_tol = tol * std::max(std::abs(coarse), std::numeric_limits<double>::min());
  return numerics::integrate(integrand, 0.0, 1.0, abs_tol);
}

double direct_sum(const LogharmonicMap& map, double r, int n_rho, int n_theta) {
  const numerics::GaussRule rule = numerics::gauss_legendre(n_rho);
  const double dtheta = kTwoPi / n_theta;
  double total = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double rho = 0.5 * r * (1.0 + rule.nodes[i]);
    double ring = 0.0;
    for (int j = 0; j < n_theta; ++j) {
      const double J = jacobian(map, std::polar(rho, dtheta * j));
      if (J < 0.0) {
        throw SenseReversalError("area_direct: negative Jacobian at |z| = " + std::to_string(rho));
      }
      ring += J;
    }
    total += 0.5 * r * rule.weights[i] * rho * ring * dtheta;
  }
  return total;
}

}  // namespace

AreaResult area_bounds(const Params& params, double r, double tol) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("area_bounds: r must lie in [0, 1)");
  if (!(tol > 0.0)) throw PreconditionError("area_bounds: tolerance must be positive");
  AreaResult out;
  if (r == 0.0) return out;
  const auto fz_low = integrate_squared_bound(params, r, Quantity::fz, false, tol);
  const auto fzbar_high = integrate_squared_bound(params, r, Quantity::fzbar, true, tol);
  const auto fz_high = integrate_squared_bound(params, r, Quantity::fz, true, tol);
  const auto fzbar_low = integrate_squared_bound(params, r, Quantity::fzbar, false, tol);
  out.lower_2piL1 = kTwoPi * (fz_low.value - fzbar_high.value);
  out.upper_2piL2 = kTwoPi * (fz_high.value - fzbar_low.value);
  out.lower_floored = std::max(out.lower_2piL1, 0.0);
  out.quadrature_error = kTwoPi * (fz_low.error_estimate + fzbar_high.error_estimate +
                                   fz_high.error_estimate + fzbar_low.error_estimate);
  out.converged = fz_low.converged && fzbar_high.converged && fz_high.converged && fzbar_low.converged;
  return out;
}

DirectArea area_direct(const LogharmonicMap& map, double r, int n_rho, int n_theta) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("area_direct: r must lie in [0, 1)");
  if (n_rho < 2 || n_theta < 2) throw PreconditionError("area_direct: grid needs at least 2 x 2 nodes");
  if (r == 0.0) return {0.0, 0.0};
  const double fine = direct_sum(map, r, n_rho, n_theta);
  const double coarse = direct_sum(map, r, n_rho / 2, n_theta / 2);
  return {fine, std::abs(fine - coarse)};
}

}  // namespace logharmonic
