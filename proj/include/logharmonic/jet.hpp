#pragma once

#include <array>
#include <functional>

#include "logharmonic/numerics.hpp"

namespace logharmonic {

/// Truncated Taylor expansion of an analytic function about a point z0:
/// f(z0 + t) = c[0] + c[1] t + c[2] t^2 + c[3] t^3.
///
/// Jets carry the value and the first three derivatives through arithmetic,
/// composition, exp and log, so every map kind gets exact (non-finite
/// difference) derivatives. A coefficient that is not known is NaN and
/// propagates as NaN.
class Jet {
 public:
  static constexpr int kOrder = 3;
  using Coeffs = std::array<Complex, kOrder + 1>;

  Jet() : c_{} {}
  explicit Jet(const Coeffs& c) : c_(c) {}

  static Jet constant(Complex v) { return Jet({v, 0.0, 0.0, 0.0}); }
  /// The identity function expanded at z0.
  static Jet variable(Complex z0) { return Jet({z0, 1.0, 0.0, 0.0}); }

  const Coeffs& coeffs() const { return c_; }
  Complex coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }

  Complex value() const { return c_[0]; }
  Complex d1() const { return c_[1]; }
  Complex d2() const { return 2.0 * c_[2]; }
  Complex d3() const { return 6.0 * c_[3]; }

  /// Jet of f'. The top coefficient becomes unknown.
  Jet derivative() const;
  /// Jet of the antiderivative with the given value at z0.
  Jet antiderivative(Complex value_at_point) const;
  /// Jet of f(z)/z where `at` is the expansion point; at the origin this
  /// shifts coefficients (requires f(0) = 0) and the top one becomes unknown.
  Jet divided_by_variable(Complex at) const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator-(const Jet& a);
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b);
  friend Jet operator*(Complex s, const Jet& a);
  friend Jet operator+(Complex s, const Jet& a);

 private:
  Coeffs c_;
};

Jet exp(const Jet& a);
/// Principal logarithm of the value; the higher coefficients follow the
/// analytic continuation and carry no branch ambiguity.
Jet log(const Jet& a);
/// exp(p * log(a)) with the principal logarithm.
Jet pow(const Jet& a, double p);
/// Integer power by repeated multiplication (valid through zeros of a).
Jet ipow(const Jet& a, int n);

/// Jet of (outer o inner) at z0, given the inner jet at z0 and the outer jet
/// at inner.value().
Jet compose(const Jet& outer_at_inner, const Jet& inner);

/// An analytic function returning its jet at a point.
using AnalyticFn = std::function<Jet(Complex)>;

}  // namespace logharmonic
