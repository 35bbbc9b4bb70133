#include "logharmonic/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/legendre.hpp>

#include "logharmonic/error.hpp"

namespace logharmonic::numerics {

namespace {

double dilog_series(double x) {
  // Terms shrink at least like 2^-n for x <= 1/2.
  double sum = 0.0;
  double power = x;
  for (int n = 1; n < 200; ++n) {
    const double term = power / (static_cast<double>(n) * n);
    sum += term;
    if (term < 1e-18 * sum) break;
    power *= x;
  }
  return sum;
}

}  // namespace

double dilog(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("dilog: argument must lie in [0, 1], got " + std::to_string(x));
  }
  constexpr double kZeta2 = std::numbers::pi * std::numbers::pi / 6.0;
  if (x == 0.0) return 0.0;
  if (x == 1.0) return kZeta2;
  if (x <= 0.5) return dilog_series(x);
  return kZeta2 - std::log(x) * std::log1p(-x) - dilog_series(1.0 - x);
}

Complex principal_power(Complex base, double exponent) {
  if (!(base.real() > 0.0)) {
    throw DomainError("principal_power: base must have positive real part");
  }
  if (base == Complex(1.0, 0.0)) return {1.0, 0.0};
  return std::exp(exponent * std::log(base));
}

// ---------------------------------------------------------------------------
// Series kernels

namespace detail {

namespace {

using WideComplex = std::complex<long double>;

std::vector<WideComplex> widen(std::span<const Complex> x) { return {x.begin(), x.end()}; }

void narrow(std::span<const WideComplex> x, std::span<Complex> out) {
  std::transform(x.begin(), x.end(), out.begin(), [](WideComplex c) { return Complex(c); });
}

}  // namespace

void log_kernel(std::span<const Complex> u, std::span<Complex> out) {
  const std::vector<WideComplex> wide = widen(u);
  std::vector<WideComplex> buf(wide.size());
  log_recurrence<WideComplex>(wide, buf);
  narrow(buf, out);
}

void exp_kernel(std::span<const Complex> v, std::span<Complex> out) {
  const std::vector<WideComplex> wide = widen(v);
  std::vector<WideComplex> buf(wide.size());
  exp_recurrence<WideComplex>(wide, buf);
  narrow(buf, out);
}

void mul_kernel(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out) {
  const std::size_t n = out.size();
  for (std::size_t m = 0; m < n; ++m) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j <= m; ++j) acc += a[j] * b[m - j];
    out[m] = acc;
  }
}

void div_kernel(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out) {
  const std::size_t n = out.size();
  for (std::size_t m = 0; m < n; ++m) {
    Complex acc = a[m];
    for (std::size_t j = 1; j <= m; ++j) acc -= b[j] * out[m - j];
    out[m] = acc / b[0];
  }
}

}  // namespace detail

PowerSeries::PowerSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw PreconditionError("PowerSeries: needs at least one coefficient");
}

PowerSeries PowerSeries::zero(int order) {
  if (order < 0) throw PreconditionError("PowerSeries: negative order");
  return PowerSeries(std::vector<Complex>(static_cast<std::size_t>(order) + 1, 0.0));
}

PowerSeries PowerSeries::one(int order) {
  PowerSeries s = zero(order);
  s[0] = 1.0;
  return s;
}

Complex PowerSeries::evaluate(Complex z) const {
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries out = PowerSeries::zero(std::min(a.order(), b.order()));
  detail::mul_kernel(a.coeffs_, b.coeffs_, out.coeffs_);
  return out;
}

PowerSeries operator*(Complex s, const PowerSeries& a) {
  PowerSeries out = a;
  for (auto& c : out.coeffs_) c *= s;
  return out;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries out = PowerSeries::zero(std::min(a.order(), b.order()));
  for (int i = 0; i <= out.order(); ++i) out[i] = a[i] + b[i];
  return out;
}

PowerSeries series_log(const PowerSeries& u) {
  if (u[0] != Complex(1.0, 0.0)) {
    throw PreconditionError("series_log: constant term must be 1");
  }
  PowerSeries out = PowerSeries::zero(u.order());
  std::vector<Complex> buf(out.coeffs().begin(), out.coeffs().end());
  detail::log_kernel(u.coeffs(), buf);
  return PowerSeries(std::move(buf));
}

PowerSeries series_exp(const PowerSeries& v) {
  if (v[0] != Complex(0.0, 0.0)) {
    throw PreconditionError("series_exp: constant term must be 0");
  }
  std::vector<Complex> buf(v.coeffs().size());
  detail::exp_kernel(v.coeffs(), buf);
  return PowerSeries(std::move(buf));
}

// ---------------------------------------------------------------------------
// Root finding

RootResult find_root_increasing(const std::function<double(double)>& F, double tol) {
  RootOptions options;
  options.tol = tol;
  return find_root_increasing(F, options);
}

RootResult find_root_increasing(const std::function<double(double)>& F, const RootOptions& options) {
  if (!(options.tol > 0.0) || !(options.lo < options.hi)) {
    throw PreconditionError("find_root_increasing: invalid options");
  }
  auto eval = [&](double r) {
    const double v = F(r);
    if (!std::isfinite(v)) {
      throw EvaluationError("find_root_increasing: non-finite value at r = " + std::to_string(r));
    }
    return v;
  };

  double lo = options.lo;
  double hi = options.hi;
  double f_lo = eval(lo);
  double f_hi = eval(hi);
  if (!(f_lo < 0.0 && f_hi > 0.0)) {
    throw NoRootError("find_root_increasing: no sign change on [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
  }

  RootResult result;
  int iterations = 0;
  // Bisection to the requested bracket width.
  while (hi - lo > options.tol && iterations < options.max_iterations) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = eval(mid);
    ++iterations;
    if (f_mid == 0.0) {
      // Exact hit: keep a bracket of width <= tol around it.
      lo = std::max(lo, mid - 0.25 * options.tol);
      hi = std::min(hi, mid + 0.25 * options.tol);
      return {mid, lo, hi, 0.0, iterations};
    }
    if (f_mid < 0.0) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  }

  // Safeguarded secant polish until the residual is small as well.
  double x = 0.5 * (lo + hi);
  double f_x = 0.0;
  while (true) {
    double candidate = lo - f_lo * (hi - lo) / (f_hi - f_lo);
    const double margin = 0.05 * (hi - lo);
    if (!(candidate > lo + margin && candidate < hi - margin)) candidate = 0.5 * (lo + hi);
    if (!(candidate > lo && candidate < hi)) break;  // bracket collapsed to adjacent doubles
    x = candidate;
    f_x = eval(x);
    ++iterations;
    if (std::abs(f_x) <= options.tol || iterations >= options.max_iterations) break;
    if (f_x < 0.0) {
      lo = x;
      f_lo = f_x;
    } else {
      hi = x;
      f_hi = f_x;
    }
  }
  result.value = x;
  result.bracket_lo = lo;
  result.bracket_hi = hi;
  result.residual = f_x;
  result.iterations = iterations;
  return result;
}

// ---------------------------------------------------------------------------
// Quadrature

namespace {

constexpr unsigned kMaxDepth = 18;

template <typename Value, typename Fn>
auto gauss_kronrod_absolute(const Fn& f, double a, double b, double tol, int& evaluations) {
  using Rule = boost::math::quadrature::gauss_kronrod<double, 15>;
  auto counted = [&](double x) {
    ++evaluations;
    return f(x);
  };
  double error = 0.0;
  double l1 = 0.0;
  try {
    // A single panel first, to turn the absolute target into Boost's relative one.
    Value coarse = Rule::integrate(counted, a, b, 0, 0.0, &error, &l1);
    if (error <= tol || l1 == 0.0) return std::tuple<Value, double>{coarse, error};
    const double relative = std::max(tol / l1, 4.0 * std::numeric_limits<double>::epsilon());
    Value fine = Rule::integrate(counted, a, b, kMaxDepth, relative, &error, &l1);
    return std::tuple<Value, double>{fine, error};
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw EvaluationError(std::string("integrate: ") + e.what());
  }
}

}  // namespace

Quadrature integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  if (!(a <= b)) throw DomainError("integrate: requires a <= b");
  if (!(tol > 0.0)) throw PreconditionError("integrate: tolerance must be positive");
  if (a == b) return {0.0, 0.0, 0, true};
  Quadrature q;
  auto [value, error] = gauss_kronrod_absolute<double>(f, a, b, tol, q.evaluations);
  if (!std::isfinite(value)) throw EvaluationError("integrate: non-finite integral");
  q.value = value;
  q.error_estimate = error;
  q.converged = error <= tol;
  return q;
}

ComplexQuadrature integrate_complex(const std::function<Complex(double)>& f, double a, double b,
                                   double tol) {
  if (!(a <= b)) throw DomainError("integrate_complex: requires a <= b");
  if (!(tol > 0.0)) throw PreconditionError("integrate_complex: tolerance must be positive");
  if (a == b) return {Complex{}, 0.0, 0, true};
  ComplexQuadrature q;
  auto [value, error] = gauss_kronrod_absolute<Complex>(f, a, b, tol, q.evaluations);
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw EvaluationError("integrate_complex: non-finite integral");
  }
  q.value = value;
  q.error_estimate = error;
  q.converged = error <= tol;
  return q;
}

GaussRule gauss_legendre(int n) {
  if (n < 1) throw PreconditionError("gauss_legendre: need at least one node");
  const auto zeros = boost::math::legendre_p_zeros<double>(n);  // nonnegative zeros, ascending
  GaussRule rule;
  rule.nodes.reserve(static_cast<std::size_t>(n));
  rule.weights.reserve(static_cast<std::size_t>(n));
  auto weight = [n](double x) {
    const double dp = boost::math::legendre_p_prime(n, x);
    return 2.0 / ((1.0 - x * x) * dp * dp);
  };
  for (auto it = zeros.rbegin(); it != zeros.rend(); ++it) {
    if (*it == 0.0) continue;
    rule.nodes.push_back(-*it);
    rule.weights.push_back(weight(*it));
  }
  for (double x : zeros) {
    rule.nodes.push_back(x);
    rule.weights.push_back(weight(x));
  }
  return rule;
}

}  // namespace logharmonic::numerics
