#include <doctest.h>

#include <cmath>
#include <numbers>

#include "logharmonic/error.hpp"
#include "logharmonic/jet.hpp"
#include "logharmonic/numerics.hpp"
#include "oracles.hpp"

using namespace logharmonic;
using namespace logharmonic::numerics;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("dilog special values") {
  CHECK(dilog(0.0) == 0.0);
  CHECK(dilog(1.0) == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-15));
  const double ln2 = std::log(2.0);
  CHECK(std::abs(dilog(0.5) - (kPi * kPi / 12.0 - 0.5 * ln2 * ln2)) < 1e-15);
  CHECK(std::abs(dilog(0.5) - 0.5822405265) < 1e-10);
}

TEST_CASE("dilog agrees with the direct series") {
  for (double x : {0.01, 0.1, 0.3, 0.5, 0.6, 0.75, 0.9, 0.97, 0.995}) {
    CAPTURE(x);
    CHECK(std::abs(dilog(x) - oracle::dilog_sum(x)) < 1e-13);
  }
}

TEST_CASE("dilog reflection and domain") {
  for (int i = 1; i < 100; ++i) {
    const double x = i / 100.0;
    const double lhs = dilog(x) + dilog(1.0 - x);
    const double rhs = kPi * kPi / 6.0 - std::log(x) * std::log(1.0 - x);
    CHECK(std::abs(lhs - rhs) < 1e-13);
  }
  CHECK_THROWS_AS(dilog(-0.1), DomainError);
  CHECK_THROWS_AS(dilog(1.5), DomainError);
  CHECK_THROWS_AS(dilog(std::nan("")), DomainError);
}

TEST_CASE("principal power") {
  CHECK(principal_power(1.0, 0.37) == Complex(1.0));
  CHECK(std::abs(principal_power(4.0, 0.5) - 2.0) < 1e-15);
  CHECK(std::abs(principal_power({1.0, 1.0}, 2.0) - Complex(0.0, 2.0)) < 1e-14);
  CHECK_THROWS_AS(principal_power({-1.0, 0.5}, 0.5), DomainError);
  CHECK_THROWS_AS(principal_power({0.0, 1.0}, 0.5), DomainError);
}

TEST_CASE("series log and exp on known series") {
  const PowerSeries mercator = series_log(PowerSeries({1.0, 1.0, 0.0, 0.0}));
  CHECK(std::abs(mercator[0]) == 0.0);
  CHECK(std::abs(mercator[1] - 1.0) < 1e-15);
  CHECK(std::abs(mercator[2] + 0.5) < 1e-15);
  CHECK(std::abs(mercator[3] - 1.0 / 3.0) < 1e-15);

  const PowerSeries trivial = series_log(PowerSeries({1.0, 0.0, 0.0}));
  for (std::size_t i = 0; i < 3; ++i) CHECK(trivial[i] == Complex(0.0));

  const PowerSeries e = series_exp(PowerSeries({0.0, 1.0, 0.0, 0.0}));
  CHECK(std::abs(e[0] - 1.0) < 1e-15);
  CHECK(std::abs(e[1] - 1.0) < 1e-15);
  CHECK(std::abs(e[2] - 0.5) < 1e-15);
  CHECK(std::abs(e[3] - 1.0 / 6.0) < 1e-15);

  const PowerSeries one = series_exp(PowerSeries::zero(5));
  CHECK(one[0] == Complex(1.0));
  for (std::size_t i = 1; i <= 5; ++i) CHECK(one[i] == Complex(0.0));

  // log(1/(1-z)) = sum z^n / n
  std::vector<Complex> geometric(20, 1.0);
  const PowerSeries l = series_log(PowerSeries(geometric));
  for (std::size_t n = 1; n < 20; ++n) CHECK(std::abs(l[n] - 1.0 / static_cast<double>(n)) < 1e-14);
}

TEST_CASE("series round trips") {
  oracle::C seed(0.3, -0.2);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Complex> c(16);
    c[0] = 1.0;
    for (std::size_t i = 1; i < c.size(); ++i) {
      seed = seed * oracle::C(0.8, 0.6) + oracle::C(0.05 * trial, 0.01 * static_cast<double>(i));
      c[i] = 0.5 * seed / std::abs(seed);
    }
    const PowerSeries u(c);
    const PowerSeries back = series_exp(series_log(u));
    for (std::size_t i = 0; i < c.size(); ++i) CHECK(std::abs(back[i] - c[i]) < 1e-12);
  }
  const PowerSeries v = series_log(PowerSeries({1.0, -1.0, 0.0, 0.0, 0.0}));
  const PowerSeries w = series_exp(v);
  CHECK(std::abs(w[1] + 1.0) < 1e-14);
  for (std::size_t i = 2; i < 5; ++i) CHECK(std::abs(w[i]) < 1e-14);
}

TEST_CASE("series preconditions") {
  CHECK_THROWS_AS(series_log(PowerSeries({2.0, 1.0})), PreconditionError);
  CHECK_THROWS_AS(series_exp(PowerSeries({0.5, 1.0})), PreconditionError);
  CHECK_THROWS_AS(PowerSeries(std::vector<Complex>{}), PreconditionError);
}

TEST_CASE("root finder") {
  const RootResult a = find_root_increasing([](double r) { return r - 0.5; });
  CHECK(std::abs(a.value - 0.5) < 1e-10);
  CHECK(a.bracket_lo <= a.value);
  CHECK(a.value <= a.bracket_hi);

  const RootResult b = find_root_increasing([](double r) { return -(r * r - 6.0 * r + 1.0); }, 1e-12);
  CHECK(std::abs(b.value - (3.0 - 2.0 * std::sqrt(2.0))) < 1e-12);
  CHECK(std::abs(b.residual) <= 1e-12);

  CHECK_THROWS_AS(find_root_increasing([](double r) { return r + 1.0; }), NoRootError);
  CHECK_THROWS_AS(find_root_increasing([](double r) { return r < 0.3 ? -1.0 : std::nan(""); }), EvaluationError);
  RootOptions bad;
  bad.tol = -1.0;
  CHECK_THROWS_AS(find_root_increasing([](double r) { return r; }, bad), PreconditionError);
}

TEST_CASE("adaptive quadrature") {
  const Quadrature lin = integrate([](double x) { return x; }, 0.0, 1.0, 1e-12);
  CHECK(std::abs(lin.value - 0.5) < 1e-14);
  CHECK(lin.converged);
  CHECK(std::abs(integrate([](double x) { return x; }, 0.0, 0.3, 1e-12).value - 0.045) < 1e-15);
  // The endpoint singularity exhausts the bisection depth; the value is still
  // close and the result says it did not converge.
  const Quadrature lg = integrate([](double x) { return -std::log(x); }, 0.0, 1.0, 1e-10);
  CHECK(std::abs(lg.value - 1.0) < 1e-8);
  CHECK_FALSE(lg.converged);
  const Quadrature empty = integrate([](double x) { return x; }, 0.4, 0.4, 1e-10);
  CHECK(empty.value == 0.0);
  CHECK(empty.evaluations == 0);

  const ComplexQuadrature cq =
      integrate_complex([](double t) { return std::exp(Complex(0.0, t)); }, 0.0, kPi / 2.0, 1e-12);
  CHECK(std::abs(cq.value - Complex(1.0, 1.0)) < 1e-12);
}

TEST_CASE("gauss legendre integrates polynomials exactly") {
  const GaussRule g = gauss_legendre(8);
  REQUIRE(g.nodes.size() == 8);
  for (int p = 0; p <= 15; ++p) {
    double acc = 0.0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) acc += g.weights[i] * std::pow(g.nodes[i], p);
    const double exact = p % 2 == 1 ? 0.0 : 2.0 / (p + 1);
    CHECK(std::abs(acc - exact) < 1e-14);
  }
  CHECK(gauss_legendre(7).nodes.size() == 7);
}

TEST_CASE("jets carry derivatives") {
  const Complex z0(0.2, 0.1);
  const Jet x = Jet::variable(z0);
  const Jet f = exp(x * x);  // e^{z^2}
  const Complex e = std::exp(z0 * z0);
  CHECK(std::abs(f.value() - e) < 1e-15);
  CHECK(std::abs(f.d1() - 2.0 * z0 * e) < 1e-14);
  CHECK(std::abs(f.d2() - (2.0 + 4.0 * z0 * z0) * e) < 1e-14);
  CHECK(std::abs(f.d3() - (12.0 * z0 + 8.0 * z0 * z0 * z0) * e) < 1e-13);

  const Jet l = log(Complex(1.0) + x);
  CHECK(std::abs(l.d1() - 1.0 / (1.0 + z0)) < 1e-15);
  CHECK(std::abs(l.d3() - 2.0 / std::pow(1.0 + z0, 3)) < 1e-13);

  // exp composed with z^2
  const Jet inner = x * x;
  const Jet outer = exp(Jet::variable(inner.value()));
  const Jet comp = compose(outer, inner);
  for (int i = 0; i <= 3; ++i) CHECK(std::abs(comp.coeff(i) - f.coeff(i)) < 1e-14);

  const Jet p = pow(Complex(1.0) + (-x), -2.0);
  CHECK(std::abs(p.d1() - 2.0 / std::pow(1.0 - z0, 3)) < 1e-13);
  CHECK(std::abs(ipow(x, -2).d1() + 2.0 / std::pow(z0, 3)) < 1e-10);

  const Jet d = f.derivative();
  CHECK(std::abs(d.value() - f.d1()) < 1e-15);
  CHECK(std::isnan(d.coeff(3).real()));
}

TEST_CASE("jet division by the variable at the origin") {
  const Jet s = exp(Jet::variable(0.0)) + Jet::constant(-1.0);  // e^z - 1
  const Jet q = s.divided_by_variable(0.0);
  CHECK(std::abs(q.value() - 1.0) < 1e-15);
  CHECK(std::abs(q.d1() - 0.5) < 1e-15);
  CHECK_THROWS_AS(exp(Jet::variable(0.0)).divided_by_variable(0.0), DomainError);
}
