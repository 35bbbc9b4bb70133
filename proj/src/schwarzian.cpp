#include "logharmonic/schwarzian.hpp"

#include <cmath>
#include <numbers>

#include "logharmonic/error.hpp"

namespace logharmonic {

namespace {

struct Pieces {
  Complex A;       // F''/F'
  Complex A_prime;
  Complex B;       // G'/G
  Complex B_prime;
  Complex C;       // omega' conj(omega) / (1 - |omega|^2)
  Complex W;       // omega'' conj(omega) / (1 - |omega|^2)
};

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

Pieces pieces(const LogharmonicMap& map, Complex z) {
  const MapJets j = map.jets(z);
  if (j.F.d1() == Complex(0.0, 0.0)) throw PoleError("pre-Schwarzian: F' vanishes");
  if (j.G.value() == Complex(0.0, 0.0)) throw PoleError("pre-Schwarzian: g vanishes");
  const Complex w = j.omega.value();
  const double denom = 1.0 - std::norm(w);
  if (!(denom > 0.0)) throw DilatationError("pre-Schwarzian: |omega| >= 1");
  Pieces p;
  p.A = j.F.d2() / j.F.d1();
  p.A_prime = j.F.d3() / j.F.d1() - p.A * p.A;
  p.B = j.G.d1() / j.G.value();
  p.B_prime = j.G.d2() / j.G.value() - p.B * p.B;
  p.C = j.omega.d1() * std::conj(w) / denom;
  p.W = j.omega.d2() * std::conj(w) / denom;
  return p;
}

}  // namespace

Complex pre_schwarzian(const LogharmonicMap& map, Complex z) {
  const Pieces p = pieces(map, z);
  const Complex value = p.A + p.B - p.C;
  if (!finite(value)) throw EvaluationError("pre_schwarzian: non-finite value");
  return value;
}

Complex schwarzian(const LogharmonicMap& map, Complex z) {
  const Pieces p = pieces(map, z);
  const Complex ab = p.A + p.B;
  const Complex value = p.A_prime + p.B_prime - 0.5 * ab * ab - p.W - 1.5 * p.C * p.C + ab * p.C;
  if (!finite(value)) throw EvaluationError("schwarzian: non-finite value");
  return value;
}

LogharmonicMap precompose(const LogharmonicMap& map, AnalyticFn phi) {
  auto local = [map, phi](Complex z) {
    const Jet inner = phi(z);
    if (!(std::abs(inner.value()) < 1.0)) {
      throw DomainError("precompose: phi leaves the unit disk");
    }
    const LocalJets outer = map.local(inner.value());
    return LocalJets{compose(outer.prefix, inner), compose(outer.log_h, inner),
                     compose(outer.log_g, inner), compose(outer.omega, inner)};
  };
  return LogharmonicMap(MapKind::precomposed, map.radial_power(), local, map.params(),
                        "precomposed(" + map.description() + ")");
}

double harmonicity_residual(const LogharmonicMap& map, Complex z, double step) {
  if (!(step > 0.0)) throw PreconditionError("harmonicity_residual: step must be positive");
  if (!(std::abs(z) + std::numbers::sqrt2 * step < 1.0)) {
    throw DomainError("harmonicity_residual: stencil leaves the unit disk");
  }
  auto P = [&](double dx, double dy) { return pre_schwarzian(map, z + Complex(dx * step, dy * step)); };
  const Complex axial = P(1, 0) + P(-1, 0) + P(0, 1) + P(0, -1);
  const Complex diagonal = P(1, 1) + P(1, -1) + P(-1, 1) + P(-1, -1);
  const Complex laplacian = (4.0 * axial + diagonal - 20.0 * P(0, 0)) / (6.0 * step * step);
  return std::abs(laplacian) / 4.0;
}

Complex classical_pre_schwarzian(const Jet& F) {
  if (F.d1() == Complex(0.0, 0.0)) throw PoleError("classical_pre_schwarzian: F' vanishes");
  return F.d2() / F.d1();
}

Complex classical_schwarzian(const Jet& F) {
  const Complex a = classical_pre_schwarzian(F);
  return F.d3() / F.d1() - 1.5 * a * a;
}

}  // namespace logharmonic
