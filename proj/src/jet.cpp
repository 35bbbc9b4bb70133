#include "logharmonic/jet.hpp"

#include <cmath>
#include <limits>

#include "logharmonic/error.hpp"

namespace logharmonic {

namespace {
const Complex kUnknown{std::numeric_limits<double>::quiet_NaN(),
                       std::numeric_limits<double>::quiet_NaN()};
}

Jet Jet::derivative() const { return Jet({c_[1], 2.0 * c_[2], 3.0 * c_[3], kUnknown}); }

Jet Jet::antiderivative(Complex value_at_point) const {
  return Jet({value_at_point, c_[0], c_[1] / 2.0, c_[2] / 3.0});
}

Jet Jet::divided_by_variable(Complex at) const {
  if (at != Complex(0.0, 0.0)) return *this / Jet::variable(at);
  if (c_[0] != Complex(0.0, 0.0)) {
    throw DomainError("Jet::divided_by_variable: function does not vanish at the origin");
  }
  return Jet({c_[1], c_[2], c_[3], kUnknown});
}

Jet& Jet::operator+=(const Jet& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Jet operator-(const Jet& a) { return Complex(-1.0, 0.0) * a; }

Jet operator*(const Jet& a, const Jet& b) {
  Jet out;
  numerics::detail::mul_kernel(a.c_, b.c_, out.c_);
  return out;
}

Jet operator/(const Jet& a, const Jet& b) {
  if (b.c_[0] == Complex(0.0, 0.0)) throw DomainError("Jet: division by a jet vanishing at the point");
  Jet out;
  numerics::detail::div_kernel(a.c_, b.c_, out.c_);
  return out;
}

Jet operator*(Complex s, const Jet& a) {
  Jet out = a;
  for (auto& c : out.c_) c *= s;
  return out;
}

Jet operator+(Complex s, const Jet& a) {
  Jet out = a;
  out.c_[0] += s;
  return out;
}

Jet exp(const Jet& a) {
  Jet::Coeffs v = a.coeffs();
  const Complex scale = std::exp(v[0]);
  v[0] = 0.0;
  Jet::Coeffs out{};
  numerics::detail::exp_kernel(v, out);
  for (auto& c : out) c *= scale;
  return Jet(out);
}

Jet log(const Jet& a) {
  const Complex a0 = a.value();
  if (a0 == Complex(0.0, 0.0)) throw DomainError("Jet: logarithm of zero");
  Jet::Coeffs u = a.coeffs();
  for (auto& c : u) c /= a0;
  u[0] = 1.0;
  Jet::Coeffs out{};
  numerics::detail::log_kernel(u, out);
  out[0] = std::log(a0);
  return Jet(out);
}

Jet pow(const Jet& a, double p) { return exp(Complex(p, 0.0) * log(a)); }

Jet ipow(const Jet& a, int n) {
  if (n < 0) return Jet::constant(1.0) / ipow(a, -n);
  Jet out = Jet::constant(1.0);
  for (int i = 0; i < n; ++i) out = out * a;
  return out;
}

Jet compose(const Jet& outer_at_inner, const Jet& inner) {
  const auto& b = outer_at_inner.coeffs();
  const auto& a = inner.coeffs();
  return Jet({b[0], b[1] * a[1], b[1] * a[2] + b[2] * a[1] * a[1],
              b[1] * a[3] + 2.0 * b[2] * a[1] * a[2] + b[3] * a[1] * a[1] * a[1]});
}

}  // namespace logharmonic
