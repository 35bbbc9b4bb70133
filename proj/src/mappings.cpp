#include "logharmonic/mappings.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <utility>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "logharmonic/error.hpp"

namespace logharmonic {

Params::Params(double alpha, int k) : alpha_(alpha), k_(k) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw DomainError("Params: alpha must lie in [0, 1), got " + std::to_string(alpha));
  }
  if (k < 1) throw DomainError("Params: k must be a positive integer, got " + std::to_string(k));
}

std::string to_string(MapKind kind) {
  switch (kind) {
    case MapKind::koebe: return "koebe";
    case MapKind::example_f3: return "f3";
    case MapKind::example_f4: return "f4";
    case MapKind::example_f5: return "f5";
    case MapKind::member: return "member";
    case MapKind::analytic: return "analytic";
    case MapKind::log_convex: return "log-convex";
    case MapKind::precomposed: return "precomposed";
  }
  return "unknown";
}

LogharmonicMap::LogharmonicMap(MapKind kind, int radial_power, LocalFn local,
                               std::optional<Params> params, std::string description)
    : kind_(kind),
      radial_power_(radial_power),
      local_(std::move(local)),
      params_(params),
      description_(std::move(description)) {
  if (radial_power < 0) throw PreconditionError("LogharmonicMap: negative radial power");
}

LocalJets LogharmonicMap::local(Complex z) const {
  if (!(std::abs(z) < 1.0)) throw DomainError("point outside the open unit disk");
  return local_(z);
}

MapJets LogharmonicMap::jets(Complex z) const {
  const LocalJets l = local(z);
  return {ipow(l.prefix, radial_power_ + 1) * exp(l.log_h),
          ipow(l.prefix, radial_power_) * exp(l.log_g), l.omega};
}

Jet LogharmonicMap::h(Complex z) const { return jets(z).F.divided_by_variable(z); }
Jet LogharmonicMap::g(Complex z) const { return jets(z).G; }
Jet LogharmonicMap::omega(Complex z) const { return local(z).omega; }

namespace {

const Jet kZero = Jet::constant(0.0);

// 1 - z^k and its principal logarithm as jets at z.
struct FoldJets {
  Jet x;
  Jet one_minus_x;
  Jet log_one_minus_x;
};

FoldJets fold_jets(Complex z, int k) {
  const Jet x = ipow(Jet::variable(z), k);
  const Jet one_minus = Complex(1.0) + (-x);
  return {x, one_minus, log(one_minus)};
}

}  // namespace

LogharmonicMap koebe_map(const Params& params) {
  const double a = params.alpha();
  const int k = params.k();
  auto local = [a, k](Complex z) {
    const FoldJets fj = fold_jets(z, k);
    const Jet common = Complex(2.0 * (1.0 - a) / k) * (fj.x / fj.one_minus_x);
    return LocalJets{Jet::variable(z), Complex(-1.0 / k) * fj.log_one_minus_x + common,
                     Complex(-(2.0 * a - 1.0) / k) * fj.log_one_minus_x + common, fj.x};
  };
  return LogharmonicMap(MapKind::koebe, 0, local, params,
                        "koebe(alpha=" + std::to_string(a) + ", k=" + std::to_string(k) + ")");
}

LogharmonicMap example_map(ExampleKind kind, const Params& params) {
  const double a = params.alpha();
  const int k = params.k();
  switch (kind) {
    case ExampleKind::f3: {
      const double w = static_cast<double>(k) / (k + 1);
      auto local = [w](Complex z) {
        return LocalJets{Jet::variable(z), kZero, kZero, Jet::constant(w)};
      };
      return LogharmonicMap(MapKind::example_f3, k, local, params, "f3(k=" + std::to_string(k) + ")");
    }
    case ExampleKind::f4: {
      auto local = [k](Complex z) {
        const FoldJets fj = fold_jets(z, k);
        const Jet omega = Complex(-static_cast<double>(k)) * fj.x /
                          (Complex(1.0) + Complex(static_cast<double>(k - 1)) * fj.x);
        return LocalJets{Jet::variable(z), -fj.log_one_minus_x, fj.log_one_minus_x, omega};
      };
      return LogharmonicMap(MapKind::example_f4, 0, local, params, "f4(k=" + std::to_string(k) + ")");
    }
    case ExampleKind::f5: {
      auto local = [a, k](Complex z) {
        const FoldJets fj = fold_jets(z, k);
        const Jet denom = Complex(2.0) * fj.one_minus_x + Complex(2.0 * k * (1.0 - a)) * fj.x;
        return LocalJets{Jet::variable(z), Complex(-2.0 * (1.0 - a)) * fj.log_one_minus_x, kZero,
                         fj.one_minus_x / denom};
      };
      return LogharmonicMap(MapKind::example_f5, 1, local, params,
                            "f5(alpha=" + std::to_string(a) + ", k=" + std::to_string(k) + ")");
    }
  }
  throw PreconditionError("example_map: unknown example");
}

namespace {

void require_dilatation(Complex w) {
  if (!(std::abs(w) < 1.0)) throw DilatationError("|omega| >= 1 encountered");
}

// omega/(1-omega) * phi'/phi written through omega/z and phi/z so that it
// stays finite at the origin.
Jet member_integrand(const Jet& phi, const Jet& omega, Complex z) {
  const Jet omega_over_z = omega.divided_by_variable(z);
  const Jet phi_over_z = phi.divided_by_variable(z);
  return omega_over_z / (Complex(1.0) + (-omega)) * (phi.derivative() / phi_over_z);
}

}  // namespace

LogharmonicMap member_from(AnalyticFn phi, AnalyticFn omega, double tol, std::string description) {
  if (!(tol > 0.0)) throw PreconditionError("member_from: tolerance must be positive");
  auto integrand = [phi, omega](Complex s) {
    const Jet w = omega(s);
    require_dilatation(w.value());
    const Jet p = phi(s);
    return w.divided_by_variable(s).value() / (1.0 - w.value()) * p.d1() /
           p.divided_by_variable(s).value();
  };
  auto local = [phi, omega, integrand, tol](Complex z) {
    const Jet p = phi(z);
    const Jet w = omega(z);
    require_dilatation(w.value());
    Complex integral = 0.0;
    if (z != Complex(0.0, 0.0)) {
      const auto q = numerics::integrate_complex([&](double t) { return integrand(t * z) * z; }, 0.0,
                                                 1.0, tol);
      integral = q.value;
    }
    const Jet I = member_integrand(p, w, z).antiderivative(integral);
    return LocalJets{Jet::variable(z), log(p.divided_by_variable(z)) + I, I, w};
  };
  return LogharmonicMap(MapKind::member, 0, local, std::nullopt, std::move(description));
}

LogharmonicMap analytic_map(AnalyticFn h, std::string description) {
  auto local = [h](Complex z) {
    return LocalJets{Jet::variable(z), log(h(z)), kZero, kZero};
  };
  return LogharmonicMap(MapKind::analytic, 0, local, std::nullopt, std::move(description));
}

LogharmonicMap analytic_from_series(const numerics::PowerSeries& h) {
  auto jet = [h](Complex z) {
    // Taylor coefficients at z: c_j = sum_n binom(n, j) a_n z^(n-j).
    Jet::Coeffs c{};
    const auto coeffs = h.coeffs();
    for (int j = 0; j <= Jet::kOrder; ++j) {
      Complex acc = 0.0;
      for (int n = static_cast<int>(coeffs.size()) - 1; n >= j; --n) {
        double binom = 1.0;
        for (int i = 0; i < j; ++i) binom = binom * (n - i) / (i + 1);
        acc = acc * z + binom * coeffs[static_cast<std::size_t>(n)];
      }
      c[static_cast<std::size_t>(j)] = acc;
    }
    return Jet(c);
  };
  return analytic_map(jet, "analytic(series)");
}

LogharmonicMap identity_map() {
  auto local = [](Complex z) { return LocalJets{Jet::variable(z), kZero, kZero, kZero}; };
  return LogharmonicMap(MapKind::analytic, 0, local, std::nullopt, "identity");
}

AnalyticFn starlike_phi(const Params& params, Complex lambda) {
  const double p = -2.0 * (1.0 - params.alpha()) / params.k();
  const int k = params.k();
  return [p, k, lambda](Complex z) {
    const Jet Z = Jet::variable(z);
    return Z * pow(Complex(1.0) + (-lambda) * ipow(Z, k), p);
  };
}

AnalyticFn monomial_omega(Complex c, int k) {
  return [c, k](Complex z) { return c * ipow(Jet::variable(z), k); };
}

PointValues evaluate(const LogharmonicMap& map, Complex z) {
  const MapJets j = map.jets(z);
  const Complex G = std::conj(j.G.value());
  return {j.F.value() * G, j.F.d1() * G, j.F.value() * std::conj(j.G.d1()), j.omega.value()};
}

Complex eval(const LogharmonicMap& map, Complex z) { return evaluate(map, z).f; }
Complex eval_fz(const LogharmonicMap& map, Complex z) { return evaluate(map, z).fz; }
Complex eval_fzbar(const LogharmonicMap& map, Complex z) { return evaluate(map, z).fzbar; }

double jacobian(const LogharmonicMap& map, Complex z) {
  const PointValues v = evaluate(map, z);
  return std::norm(v.fz) - std::norm(v.fzbar);
}

Complex d_ratio(const LogharmonicMap& map, Complex z) {
  if (z == Complex(0.0, 0.0)) throw DomainError("d_ratio: undefined at z = 0");
  const PointValues v = evaluate(map, z);
  return (z * v.fz - std::conj(z) * v.fzbar) / v.f;
}

double pde_residual(const LogharmonicMap& map, Complex z) {
  const PointValues v = evaluate(map, z);
  if (v.f == Complex(0.0, 0.0)) throw DomainError("pde_residual: f vanishes at the point");
  return std::abs(std::conj(v.fzbar) / std::conj(v.f) - v.omega * v.fz / v.f);
}

LogharmonicMap combine_logconvex(const LogharmonicMap& f1, const LogharmonicMap& f2, double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0)) throw DomainError("combine_logconvex: gamma must lie in (0, 1)");
  if (f1.radial_power() != f2.radial_power()) {
    throw IncompatibleMapsError("combine_logconvex: radial powers differ");
  }
  auto close = [](Complex a, Complex b) { return std::abs(a - b) <= 1e-10 * (1.0 + std::abs(a)); };
  for (double rho : {0.15, 0.45, 0.8}) {
    for (int j = 0; j < 7; ++j) {
      const Complex z = std::polar(rho, 2.0 * std::numbers::pi * (j + 0.3) / 7.0);
      const LocalJets a = f1.local(z);
      const LocalJets b = f2.local(z);
      if (!close(a.omega.value(), b.omega.value())) {
        throw IncompatibleMapsError("combine_logconvex: dilatations differ");
      }
      if (!close(a.prefix.value(), b.prefix.value())) {
        throw IncompatibleMapsError("combine_logconvex: prefixes differ");
      }
    }
  }
  auto local = [f1, f2, gamma](Complex z) {
    const LocalJets a = f1.local(z);
    const LocalJets b = f2.local(z);
    const Complex g1 = gamma;
    const Complex g2 = 1.0 - gamma;
    return LocalJets{a.prefix, g1 * a.log_h + g2 * b.log_h, g1 * a.log_g + g2 * b.log_g, a.omega};
  };
  std::optional<Params> params;
  if (f1.params() && f2.params() && f1.params()->k() == f2.params()->k()) params = f1.params();
  return LogharmonicMap(MapKind::log_convex, f1.radial_power(), local, params,
                        "logconvex(" + f1.description() + ", " + f2.description() + ")");
}

Complex beta_from_omega0(Complex w0) {
  const double n = std::norm(w0);
  if (!(n < 1.0)) throw DomainError("beta_from_omega0: requires |w0| < 1");
  return std::conj(w0) * (1.0 + w0) / (1.0 - n);
}

namespace {

// The exp factor has coefficients growing like exp(2 sqrt(c n)), so the log
// recurrence cancels about ten digits at n = 64 in double precision.
using Quad = boost::multiprecision::cpp_bin_float_quad;

// Series in u of (1 - u)^(-p) exp(c u / (1 - u)), truncated at order N.
std::vector<Quad> koebe_factor(double p, double c, int N) {
  const auto len = static_cast<std::size_t>(N) + 1;
  std::vector<Quad> binomial(len, Quad(0));
  binomial[0] = 1;
  for (std::size_t n = 1; n < len; ++n) binomial[n] = binomial[n - 1] * (Quad(p) + (n - 1)) / n;
  std::vector<Quad> geometric(len, Quad(c));
  geometric[0] = 0;
  std::vector<Quad> expo(len);
  numerics::detail::exp_recurrence<Quad>(geometric, expo);
  std::vector<Quad> product(len, Quad(0));
  for (std::size_t m = 0; m < len; ++m) {
    for (std::size_t j = 0; j <= m; ++j) product[m] += binomial[j] * expo[m - j];
  }
  return product;
}

std::vector<Quad> series_log_quad(const std::vector<Quad>& u) {
  std::vector<Quad> out(u.size());
  numerics::detail::log_recurrence<Quad>(u, out);
  return out;
}

}  // namespace

LogCoefficients koebe_log_coeffs(const Params& params, int N) {
  if (N < 1) throw PreconditionError("koebe_log_coeffs: N must be at least 1");
  const double a = params.alpha();
  const int k = params.k();
  const double c = 2.0 * (1.0 - a) / k;
  const auto log_h = series_log_quad(koebe_factor(1.0 / k, c, N));
  const auto log_g = series_log_quad(koebe_factor((2.0 * a - 1.0) / k, c, N));
  LogCoefficients out;
  for (int n = 1; n <= N; ++n) {
    out.a.push_back(static_cast<double>(log_h[static_cast<std::size_t>(n)]));
    out.b.push_back(static_cast<double>(log_g[static_cast<std::size_t>(n)]));
  }
  return out;
}

}  // namespace logharmonic
