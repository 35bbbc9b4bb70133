#include "logharmonic/bounds.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <utility>

#include "logharmonic/error.hpp"

namespace logharmonic {

namespace {

constexpr std::array<std::pair<Quantity, const char*>, 13> kNames{{
    {Quantity::abs_h, "abs-h"},
    {Quantity::abs_g, "abs-g"},
    {Quantity::abs_f, "abs-f"},
    {Quantity::fz, "fz"},
    {Quantity::fzbar, "fzbar"},
    {Quantity::h_prime, "h-prime"},
    {Quantity::g_prime, "g-prime"},
    {Quantity::phi_ratio, "phi-ratio"},
    {Quantity::phi_abs, "phi-abs"},
    {Quantity::omega_ratio, "omega-ratio"},
    {Quantity::dist_f, "dist-f"},
    {Quantity::dist_h, "dist-h"},
    {Quantity::dist_g, "dist-g"},
}};

void check_radius(double r) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("radius must lie in (0, 1), got " + std::to_string(r));
}

Bounds from_logs(Quantity q, double log_lower, double log_upper) {
  Bounds b;
  b.quantity = q;
  b.log_lower = log_lower;
  b.log_upper = log_upper;
  b.lower = std::exp(log_lower);
  b.upper = std::exp(log_upper);
  b.raw_lower = b.lower;
  return b;
}

Bounds from_values(Quantity q, double lower, double upper) {
  Bounds b;
  b.quantity = q;
  b.lower = lower;
  b.upper = upper;
  b.raw_lower = lower;
  b.log_lower = std::log(lower);
  b.log_upper = std::log(upper);
  return b;
}

// Shared pieces at x = r^k.
struct Terms {
  double a;
  double k;
  double x;
  double log_r;
  double log1p_x;   // log(1 + x)
  double log1m_x;   // log(1 - x)
  double e_plus;    // (1-a) x / (k (1 + x))
  double e_minus;   // (1-a) x / (k (1 - x))
};

Terms terms(const Params& params, double r) {
  Terms t;
  t.a = params.alpha();
  t.k = params.k();
  t.x = std::pow(r, params.k());
  t.log_r = std::log(r);
  t.log1p_x = std::log1p(t.x);
  t.log1m_x = std::log1p(-t.x);
  t.e_plus = (1.0 - t.a) * t.x / (t.k * (1.0 + t.x));
  t.e_minus = (1.0 - t.a) * t.x / (t.k * (1.0 - t.x));
  return t;
}

}  // namespace

std::string to_string(Quantity q) {
  for (const auto& [quantity, name] : kNames) {
    if (quantity == q) return name;
  }
  return "unknown";
}

Quantity quantity_from_string(const std::string& name) {
  for (const auto& [quantity, n] : kNames) {
    if (name == n) return quantity;
  }
  throw PreconditionError("unknown quantity '" + name + "'");
}

Bounds growth_bounds(const Params& params, double r, Quantity which) {
  check_radius(r);
  const Terms t = terms(params, r);
  switch (which) {
    case Quantity::abs_h:
      return from_logs(which, -2.0 * t.e_plus - t.log1p_x / t.k, 2.0 * t.e_minus - t.log1m_x / t.k);
    case Quantity::abs_g: {
      const double p = (2.0 * t.a - 1.0) / t.k;
      return from_logs(which, -2.0 * t.e_plus - p * t.log1p_x, 2.0 * t.e_minus - p * t.log1m_x);
    }
    case Quantity::abs_f: {
      const double p = 2.0 * t.a / t.k;
      return from_logs(which, t.log_r - 4.0 * t.e_plus - p * t.log1p_x,
                       t.log_r + 4.0 * t.e_minus - p * t.log1m_x);
    }
    default:
      throw PreconditionError("growth_bounds: expected abs-h, abs-g or abs-f");
  }
}

CoeffBound coeff_bounds(const Params& params, int n) {
  if (n < 1) throw DomainError("coeff_bounds: n must be positive");
  const double k = params.k();
  const double c = 2.0 * (1.0 - params.alpha()) / k;
  return {n, c + 1.0 / (k * n), c + (2.0 * params.alpha() - 1.0) / (k * n)};
}

Bounds distortion_bounds(const Params& params, double r, Quantity which) {
  check_radius(r);
  const Terms t = terms(params, r);
  const double s = (1.0 - 2.0 * t.a) * t.x;
  const double p = 2.0 * (t.a + t.k) / t.k;
  switch (which) {
    case Quantity::fz:
      return from_logs(which, std::log1p(-s) - p * t.log1p_x - 4.0 * t.e_plus,
                       std::log1p(s) - p * t.log1m_x + 4.0 * t.e_minus);
    case Quantity::fzbar: {
      const double lk = t.k * t.log_r;
      return from_logs(which, lk + std::log1p(-s) - p * t.log1p_x - 4.0 * t.e_plus,
                       lk + std::log1p(s) - p * t.log1m_x + 4.0 * t.e_minus);
    }
    case Quantity::g_prime: {
      const double lk = (t.k - 1.0) * t.log_r;
      const double q = (2.0 * (t.a + t.k) - 1.0) / t.k;
      return from_logs(which, lk + std::log1p(-s) - q * t.log1p_x - 2.0 * t.e_plus,
                       lk + std::log1p(s) - q * t.log1m_x + 2.0 * t.e_minus);
    }
    case Quantity::h_prime: {
      const double one_minus = 1.0 - t.x;
      const double one_plus = 1.0 + t.x;
      const double log_upper = std::log(1.0 + s + one_minus * one_minus) - t.log_r -
                               2.0 * t.log1m_x + 2.0 * t.e_minus - t.log1m_x / t.k;
      const double raw = (1.0 - s - one_plus * one_plus) / (r * one_plus * one_plus) *
                         std::exp(-2.0 * t.e_plus);
      Bounds b;
      b.quantity = which;
      b.raw_lower = raw;
      b.lower = raw > 0.0 ? raw : 0.0;
      b.log_lower = raw > 0.0 ? std::log(raw) : -std::numeric_limits<double>::infinity();
      b.log_upper = log_upper;
      b.upper = std::exp(log_upper);
      return b;
    }
    default:
      throw PreconditionError("distortion_bounds: expected fz, fzbar, h-prime or g-prime");
  }
}

double h_prime_upper_as_printed(const Params& params, double r) {
  check_radius(r);
  const Terms t = terms(params, r);
  const double one_minus = 1.0 - t.x;
  return (1.0 + (1.0 - 2.0 * t.a) * t.x + one_minus * one_minus) / (r * one_minus * one_minus) *
         std::exp(2.0 * t.e_minus);
}

Bounds phi_bounds(const Params& params, double r, Quantity which) {
  check_radius(r);
  const Terms t = terms(params, r);
  switch (which) {
    case Quantity::phi_ratio:
      return from_values(which, (1.0 - t.a) * (1.0 - t.x) / (1.0 + t.x) + t.a,
                         (1.0 - t.a) * (1.0 + t.x) / (1.0 - t.x) + t.a);
    case Quantity::phi_abs: {
      const double p = 2.0 * (1.0 - t.a) / t.k;
      return from_logs(which, t.log_r - p * t.log1p_x, t.log_r - p * t.log1m_x);
    }
    case Quantity::omega_ratio:
      return from_values(which, t.x / (1.0 + t.x), t.x / (1.0 - t.x));
    default:
      throw PreconditionError("phi_bounds: expected phi-ratio, phi-abs or omega-ratio");
  }
}

Bounds distance_bounds(const Params& params, Quantity which) {
  const double a = params.alpha();
  const double k = params.k();
  const double ln2 = std::log(2.0);
  double log_lower = 0.0;
  switch (which) {
    case Quantity::dist_f: log_lower = -2.0 * a / k * ln2 - 2.0 * (1.0 - a) / k; break;
    case Quantity::dist_h: log_lower = -ln2 / k - (1.0 - a) / k; break;
    case Quantity::dist_g: log_lower = -(2.0 * a - 1.0) / k * ln2 - (1.0 - a) / k; break;
    default:
      throw PreconditionError("distance_bounds: expected dist-f, dist-h or dist-g");
  }
  return from_logs(which, log_lower, 0.0);
}

}  // namespace logharmonic
