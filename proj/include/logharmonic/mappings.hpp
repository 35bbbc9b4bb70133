#pragma once

// Logharmonic mappings f = F * conj(G) on the unit disk.
//
// Every map is stored through four analytic pieces evaluated as jets at a
// point: a prefix P with P(0) = 0, two logarithmic parts L_h and L_g, and the
// dilatation omega. Together with an integer radial power m they give
//
//   F = P^(m+1) exp(L_h),   G = P^m exp(L_g),   f = F conj(G),
//
// so f = z h conj(g) with h = F / z and g = G. The radial power is zero for
// the maps vanishing to first order at the origin and positive for the
// examples with a |z|^(2m) factor.

#include <optional>
#include <string>
#include <vector>

#include "logharmonic/jet.hpp"

namespace logharmonic {

/// Order of starlikeness alpha in [0, 1) and fold count k >= 1.
class Params {
 public:
  /// Throws DomainError when alpha is outside [0, 1) or k < 1.
  Params(double alpha, int k);

  double alpha() const { return alpha_; }
  int k() const { return k_; }

 private:
  double alpha_;
  int k_;
};

enum class MapKind { koebe, example_f3, example_f4, example_f5, member, analytic, log_convex, precomposed };

enum class ExampleKind { f3, f4, f5 };

std::string to_string(MapKind kind);

/// The analytic building blocks of a map at one point.
struct LocalJets {
  Jet prefix;
  Jet log_h;
  Jet log_g;
  Jet omega;
};

/// Jets of F, G and omega at one point (see the file comment).
struct MapJets {
  Jet F;
  Jet G;
  Jet omega;
};

class LogharmonicMap {
 public:
  using LocalFn = std::function<LocalJets(Complex)>;

  LogharmonicMap(MapKind kind, int radial_power, LocalFn local, std::optional<Params> params,
                 std::string description);

  MapKind kind() const { return kind_; }
  int radial_power() const { return radial_power_; }
  const std::optional<Params>& params() const { return params_; }
  const std::string& description() const { return description_; }

  /// Building blocks at z. Throws DomainError unless |z| < 1.
  LocalJets local(Complex z) const;
  MapJets jets(Complex z) const;

  Jet h(Complex z) const;
  Jet g(Complex z) const;
  Jet omega(Complex z) const;

 private:
  MapKind kind_;
  int radial_power_;
  LocalFn local_;
  std::optional<Params> params_;
  std::string description_;
};

/// Value, Wirtinger derivatives and dilatation of a map at one point.
struct PointValues {
  Complex f;
  Complex fz;
  Complex fzbar;
  Complex omega;
};

/// The extremal k-fold symmetric logharmonic Koebe map f_alpha, with
/// h = (1 - z^k)^(-1/k) exp(2(1-a) z^k / (k(1 - z^k))),
/// g = (1 - z^k)^(-(2a-1)/k) exp(2(1-a) z^k / (k(1 - z^k))) and omega = z^k.
LogharmonicMap koebe_map(const Params& params);

/// The three explicit examples:
///   f3 = z^(k+1) conj(z)^k,                  omega = k/(k+1)
///   f4 = z (1 - conj(z)^k) / (1 - z^k),      omega = -k z^k / (1 + (k-1) z^k)
///   f5 = z^2 conj(z) / (1 - z^k)^(2(1-a)),   omega = (1-z^k) / (2(1-z^k) + 2k(1-a) z^k)
/// f3 and f4 ignore alpha.
LogharmonicMap example_map(ExampleKind kind, const Params& params);

/// The class member with starlike part phi = z h / g and dilatation omega:
/// g = exp(I), I(z) = integral over [0, z] of omega/(1-omega) * phi'/phi, and
/// h = phi g / z. I is computed by adaptive quadrature along the segment at
/// the given absolute tolerance. Evaluation throws DilatationError when
/// |omega| >= 1 is met on the segment.
LogharmonicMap member_from(AnalyticFn phi, AnalyticFn omega, double tol = 1e-11,
                           std::string description = "member");

/// The analytic map F(z) = z h(z) with g = 1 and omega = 0. `h` must not
/// vanish and its principal logarithm must be continuous on the disk.
LogharmonicMap analytic_map(AnalyticFn h, std::string description = "analytic");

/// analytic_map for h given by its Taylor coefficients about 0.
LogharmonicMap analytic_from_series(const numerics::PowerSeries& h);

/// f(z) = z.
LogharmonicMap identity_map();

/// phi(z) = z / (1 - lambda z^k)^(2(1-a)/k), k-fold symmetric and starlike of
/// order a for |lambda| <= 1.
AnalyticFn starlike_phi(const Params& params, Complex lambda);

/// omega(z) = c z^k.
AnalyticFn monomial_omega(Complex c, int k);

/// Throw DomainError unless |z| < 1.
PointValues evaluate(const LogharmonicMap& map, Complex z);
Complex eval(const LogharmonicMap& map, Complex z);
Complex eval_fz(const LogharmonicMap& map, Complex z);
Complex eval_fzbar(const LogharmonicMap& map, Complex z);

/// |f_z|^2 - |f_zbar|^2.
double jacobian(const LogharmonicMap& map, Complex z);

/// Df/f = (z f_z - conj(z) f_zbar) / f = 1 + z h'/h - conj(z g'/g).
/// Throws DomainError at z = 0.
Complex d_ratio(const LogharmonicMap& map, Complex z);

/// |conj(f_zbar)/conj(f) - omega f_z / f|, which vanishes for a solution of
/// the logharmonic equation. Throws DomainError at zeros of f.
double pde_residual(const LogharmonicMap& map, Complex z);

/// f1^gamma f2^(1-gamma), realized on the logarithmic parts. Both maps must
/// share the radial power, the prefix and the dilatation (checked at sample
/// points, else IncompatibleMapsError); 0 < gamma < 1 else DomainError.
LogharmonicMap combine_logconvex(const LogharmonicMap& f1, const LogharmonicMap& f2, double gamma);

/// conj(w0) (1 + w0) / (1 - |w0|^2). Throws DomainError unless |w0| < 1.
Complex beta_from_omega0(Complex w0);

/// Logarithmic coefficients a_{nk}, b_{nk} (n = 1..N) of the Koebe map,
/// extracted by formal series log of the truncated Taylor series of h and g.
struct LogCoefficients {
  std::vector<double> a;  ///< a[n-1] = a_{nk}
  std::vector<double> b;
};
LogCoefficients koebe_log_coeffs(const Params& params, int N);

}  // namespace logharmonic
