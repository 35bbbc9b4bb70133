#include <doctest.h>

#include <cmath>
#include <numbers>

#include "logharmonic/area.hpp"
#include "logharmonic/bounds.hpp"
#include "logharmonic/error.hpp"
#include "oracles.hpp"

using namespace logharmonic;

namespace {

constexpr double kPi = std::numbers::pi;

// 2 pi L2 by a fine trapezoid rule: squared f_z upper bound minus squared
// f_zbar lower bound.
double upper_area_trapezoid(const Params& p, double r, int n) {
  double acc = 0.0;
  for (int i = 1; i <= n; ++i) {
    const double rho = r * i / n;
    const double weight = i == n ? 0.5 : 1.0;
    const double a = oracle::fz_upper(p.alpha(), p.k(), rho);
    const double b = std::pow(rho, p.k()) * oracle::fz_lower(p.alpha(), p.k(), rho);
    acc += weight * (a * a - b * b) * rho;
  }
  return 2.0 * kPi * acc * r / n;
}

}  // namespace

TEST_CASE("identity and f3 direct areas") {
  for (double r : {0.1, 0.5, 0.9}) CHECK(std::abs(area_direct(identity_map(), r).value - kPi * r * r) < 1e-12);
  CHECK(std::abs(area_direct(identity_map(), 0.5).value - 0.7853981634) < 1e-10);
  const DirectArea f3 = area_direct(example_map(ExampleKind::f3, Params(0.0, 1)), 0.5);
  CHECK(std::abs(f3.value - kPi * std::pow(0.5, 6)) < 1e-12);
  CHECK(area_direct(identity_map(), 0.0).value == 0.0);
}

TEST_CASE("direct area agrees with a finite-difference midpoint oracle") {
  const LogharmonicMap f = koebe_map(Params(0.5, 2));
  const auto map = [&f](oracle::C z) { return eval(f, z); };
  const double expected = oracle::area_midpoint(map, 0.5, 600, 200);
  CHECK(std::abs(area_direct(f, 0.5, 64, 256).value - expected) < 1e-5 * expected);
}

TEST_CASE("area bounds") {
  const AreaResult zero = area_bounds(Params(0.0, 1), 0.0);
  CHECK(zero.upper_2piL2 == 0.0);
  CHECK(zero.lower_2piL1 == 0.0);

  // Both bounds approach the disk area like 1 + O(r) relative.
  const AreaResult small = area_bounds(Params(0.0, 1), 1e-3);
  const double disk = kPi * 1e-6;
  CHECK(std::abs(small.upper_2piL2 - disk) < 0.03 * disk);
  CHECK(std::abs(small.lower_2piL1 - disk) < 0.03 * disk);
  const AreaResult smaller = area_bounds(Params(0.0, 1), 1e-4);
  CHECK(std::abs(smaller.upper_2piL2 / (kPi * 1e-8) - 1.0) < 0.2 * std::abs(small.upper_2piL2 / disk - 1.0));

  const Params p(0.0, 1);
  const AreaResult half = area_bounds(p, 0.5);
  const double oracle_upper = upper_area_trapezoid(p, 0.5, 200000);
  CHECK(std::abs(half.upper_2piL2 - oracle_upper) < 1e-6 * oracle_upper);
  CHECK(half.converged);
  CHECK(half.lower_floored == std::max(half.lower_2piL1, 0.0));

  CHECK_THROWS_AS(area_bounds(p, 1.0), DomainError);
  CHECK_THROWS_AS(area_bounds(p, -0.1), DomainError);
}

TEST_CASE("koebe area sandwich") {
  for (double a : {0.0, 0.5}) {
    for (int k : {1, 2}) {
      const Params p(a, k);
      for (double r : {0.2, 0.3, 0.5, 0.8}) {
        const AreaResult b = area_bounds(p, r);
        const DirectArea d = area_direct(koebe_map(p), r, 64, 256);
        const double eps = b.quadrature_error + d.error_estimate;
        CAPTURE(a);
        CAPTURE(k);
        CAPTURE(r);
        CHECK(b.lower_2piL1 - eps <= d.value);
        CHECK(d.value <= b.upper_2piL2 + eps);
      }
    }
  }
}

TEST_CASE("sense reversal is reported") {
  // f4 with k = 2 is sense-reversing for |z|^2 > 1/3.
  CHECK_THROWS_AS(area_direct(example_map(ExampleKind::f4, Params(0.0, 2)), 0.9), SenseReversalError);
}
