#pragma once

// Shared numerical kernel: real dilogarithm, principal complex powers,
// truncated power series log/exp, bracketed root finding for increasing
// functions and adaptive quadrature. Everything here is a pure function.

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace logharmonic {

using Complex = std::complex<double>;

namespace numerics {

/// Real dilogarithm Li2(x) = sum_{n>=1} x^n / n^2 for x in [0, 1].
///
/// The direct series is used for x <= 1/2 and the reflection
/// Li2(x) + Li2(1-x) = pi^2/6 - ln(x) ln(1-x) above that. Absolute accuracy
/// is about 1e-15. Throws DomainError outside [0, 1].
double dilog(double x);

/// exp(exponent * Log(base)) with the principal logarithm. Requires
/// Re(base) > 0, which holds for 1 - z^k whenever |z| < 1.
Complex principal_power(Complex base, double exponent);

/// Truncated Taylor series c_0 + c_1 z + ... + c_N z^N.
class PowerSeries {
 public:
  /// Throws PreconditionError on an empty coefficient list.
  explicit PowerSeries(std::vector<Complex> coeffs);

  static PowerSeries zero(int order);
  /// The series of 1 + 0 z + ... (multiplicative identity) at the given order.
  static PowerSeries one(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Complex> coeffs() const { return coeffs_; }
  const Complex& operator[](std::size_t i) const { return coeffs_[i]; }
  Complex& operator[](std::size_t i) { return coeffs_[i]; }

  /// Horner evaluation of the truncated polynomial.
  Complex evaluate(Complex z) const;

  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(Complex s, const PowerSeries& a);
  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);

 private:
  std::vector<Complex> coeffs_;
};

/// Coefficients of log(u) from u (log u)' = u'. Requires c_0 = 1.
PowerSeries series_log(const PowerSeries& u);

/// Coefficients of exp(v) from (exp v)' = v' exp v. Requires c_0 = 0.
PowerSeries series_exp(const PowerSeries& v);

namespace detail {
// Coefficient recurrences for log and exp of a formal series, generic in the
// scalar type so they also run in extended precision.
template <class T>
void log_recurrence(std::span<const T> u, std::span<T> out) {
  out[0] = T(0);
  for (std::size_t m = 1; m < u.size(); ++m) {
    T acc(0);
    for (std::size_t j = 1; j < m; ++j) acc += T(static_cast<double>(j)) * out[j] * u[m - j];
    out[m] = u[m] - acc / T(static_cast<double>(m));
  }
}

template <class T>
void exp_recurrence(std::span<const T> v, std::span<T> out) {
  out[0] = T(1);
  for (std::size_t m = 1; m < v.size(); ++m) {
    T acc(0);
    for (std::size_t j = 1; j <= m; ++j) acc += T(static_cast<double>(j)) * v[j] * out[m - j];
    out[m] = acc / T(static_cast<double>(m));
  }
}

// Span kernels shared by PowerSeries and Jet. `out` must have the same
// length as the input. log_kernel assumes u[0] == 1, exp_kernel v[0] == 0.
void log_kernel(std::span<const Complex> u, std::span<Complex> out);
void exp_kernel(std::span<const Complex> v, std::span<Complex> out);
void mul_kernel(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out);
void div_kernel(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out);
}  // namespace detail

struct RootResult {
  double value = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  double residual = 0.0;  ///< F(value)
  int iterations = 0;
};

struct RootOptions {
  double tol = 1e-10;           ///< bracket width and |residual| target
  double lo = 1e-12;            ///< clamped search interval
  double hi = 1.0 - 1e-9;
  int max_iterations = 400;
};

/// Root of an increasing function with F(lo) < 0 < F(hi).
///
/// Bisection until the bracket is narrower than tol, then safeguarded secant
/// steps until |F| <= tol as well. Throws NoRootError when the endpoint
/// values do not change sign and EvaluationError on a non-finite F.
RootResult find_root_increasing(const std::function<double(double)>& F, const RootOptions& options);
RootResult find_root_increasing(const std::function<double(double)>& F, double tol = 1e-10);

struct Quadrature {
  double value = 0.0;
  double error_estimate = 0.0;
  int evaluations = 0;
  bool converged = true;  ///< false when the refinement budget ran out
};

struct ComplexQuadrature {
  Complex value;
  double error_estimate = 0.0;
  int evaluations = 0;
  bool converged = true;
};

/// Adaptive 15-point Gauss-Kronrod on [a, b] with an absolute error target.
Quadrature integrate(const std::function<double(double)>& f, double a, double b, double tol);
ComplexQuadrature integrate_complex(const std::function<Complex(double)>& f, double a, double b,
                                   double tol);

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_legendre(int n);

}  // namespace numerics
}  // namespace logharmonic
