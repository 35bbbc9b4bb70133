#include <doctest.h>

#include <cmath>

#include "logharmonic/bounds.hpp"
#include "logharmonic/error.hpp"
#include "oracles.hpp"

using namespace logharmonic;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("growth upper bounds equal the Koebe closed forms") {
  for (double a : {0.0, 0.2, 0.5, 0.8, 0.99}) {
    for (int k : {1, 2, 3, 7}) {
      const Params p(a, k);
      for (double r : {0.05, 0.3, 0.6, 0.9}) {
        CAPTURE(a);
        CAPTURE(k);
        CAPTURE(r);
        CHECK(rel(growth_bounds(p, r, Quantity::abs_h).upper, oracle::abs_h_upper(a, k, r)) < 1e-13);
        CHECK(rel(growth_bounds(p, r, Quantity::abs_g).upper, oracle::abs_g_upper(a, k, r)) < 1e-13);
        CHECK(rel(growth_bounds(p, r, Quantity::abs_f).upper, oracle::abs_f_upper(a, k, r)) < 1e-13);
        CHECK(rel(distortion_bounds(p, r, Quantity::fz).upper, oracle::fz_upper(a, k, r)) < 1e-13);
        CHECK(rel(distortion_bounds(p, r, Quantity::fzbar).upper, std::pow(r, k) * oracle::fz_upper(a, k, r)) <
              1e-13);
      }
    }
  }
}

TEST_CASE("growth bound examples") {
  const Params p(0.0, 1);
  CHECK(std::abs(growth_bounds(p, 0.5, Quantity::abs_f).upper - 0.5 * std::exp(4.0)) < 1e-11);
  const Bounds tiny = growth_bounds(Params(0.4, 2), 1e-6, Quantity::abs_f);
  CHECK(tiny.upper < 1.1e-6);
  CHECK(tiny.upper / tiny.lower == doctest::Approx(1.0).epsilon(1e-9));
  const Bounds near_one = growth_bounds(Params(0.9999999, 1), 0.5, Quantity::abs_h);
  CHECK(near_one.upper == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("bounds are ordered and finite") {
  const std::vector<Quantity> all{Quantity::abs_h,     Quantity::abs_g,   Quantity::abs_f,
                                  Quantity::fz,        Quantity::fzbar,   Quantity::h_prime,
                                  Quantity::g_prime,   Quantity::phi_ratio, Quantity::phi_abs,
                                  Quantity::omega_ratio};
  for (double a : {0.0, 0.5, 0.99}) {
    for (int k : {1, 4}) {
      const Params p(a, k);
      for (double r : {0.01, 0.5, 0.9}) {
        for (Quantity q : all) {
          Bounds b;
          if (q == Quantity::abs_h || q == Quantity::abs_g || q == Quantity::abs_f) b = growth_bounds(p, r, q);
          else if (q == Quantity::phi_ratio || q == Quantity::phi_abs || q == Quantity::omega_ratio)
            b = phi_bounds(p, r, q);
          else b = distortion_bounds(p, r, q);
          CAPTURE(to_string(q));
          CHECK(b.lower >= 0.0);
          CHECK(b.lower <= b.upper);
          CHECK(std::isfinite(b.upper));
          CHECK(b.quantity == q);
        }
      }
    }
  }
}

TEST_CASE("h' lower bound is floored and keeps the raw value") {
  const Bounds b = distortion_bounds(Params(0.0, 1), 0.5, Quantity::h_prime);
  // (1 - r - (1+r)^2) / (r (1+r)^2) exp(-2 r/(1+r)) at r = 1/2
  const double raw = (1.0 - 0.5 - 2.25) / (0.5 * 2.25) * std::exp(-2.0 * 0.5 / 1.5);
  CHECK(std::abs(b.raw_lower - raw) < 1e-14);
  CHECK(b.lower == 0.0);
  CHECK(std::isinf(b.log_lower));
  CHECK(h_prime_upper_as_printed(Params(0.0, 1), 0.5) ==
        doctest::Approx((1.0 + 0.5 + 0.25) / (0.5 * 0.25) * std::exp(2.0)).epsilon(1e-14));
}

TEST_CASE("coefficient bounds") {
  const CoeffBound c = coeff_bounds(Params(0.0, 1), 1);
  CHECK(c.a_bound == doctest::Approx(3.0));
  CHECK(c.b_bound == doctest::Approx(1.0));
  const CoeffBound d = coeff_bounds(Params(0.5, 2), 5);
  CHECK(d.a_bound == doctest::Approx(0.6));
  CHECK(d.b_bound == doctest::Approx(0.5));
  const CoeffBound far = coeff_bounds(Params(0.3, 3), 1'000'000);
  CHECK(far.a_bound == doctest::Approx(2.0 * 0.7 / 3.0).epsilon(1e-6));
  CHECK(far.b_bound == doctest::Approx(2.0 * 0.7 / 3.0).epsilon(1e-6));
  CHECK_THROWS_AS(coeff_bounds(Params(0.3, 3), 0), DomainError);
}

TEST_CASE("phi and omega bounds") {
  const Params p(0.25, 2);
  const double r = 0.6;
  const double x = r * r;
  const Bounds ratio = phi_bounds(p, r, Quantity::phi_ratio);
  CHECK(ratio.lower == doctest::Approx(0.75 * (1 - x) / (1 + x) + 0.25));
  CHECK(ratio.upper == doctest::Approx(0.75 * (1 + x) / (1 - x) + 0.25));
  const Bounds abs_phi = phi_bounds(p, r, Quantity::phi_abs);
  CHECK(abs_phi.upper == doctest::Approx(r / std::pow(1 - x, 0.75)));
  CHECK(abs_phi.lower == doctest::Approx(r / std::pow(1 + x, 0.75)));
  const Bounds w = phi_bounds(p, r, Quantity::omega_ratio);
  CHECK(w.lower == doctest::Approx(x / (1 + x)));
  CHECK(w.upper == doctest::Approx(x / (1 - x)));
}

TEST_CASE("distance bounds") {
  CHECK(distance_bounds(Params(0.0, 1), Quantity::dist_f).lower == doctest::Approx(std::exp(-2.0)).epsilon(1e-15));
  for (double a : {0.0, 0.4, 0.99}) {
    for (int k : {1, 3, 10}) {
      const Params p(a, k);
      CHECK(rel(distance_bounds(p, Quantity::dist_f).lower, oracle::dist_f(a, k)) < 1e-14);
      CHECK(rel(distance_bounds(p, Quantity::dist_h).lower, oracle::dist_h(a, k)) < 1e-14);
      CHECK(rel(distance_bounds(p, Quantity::dist_g).lower, oracle::dist_g(a, k)) < 1e-14);
      CHECK(distance_bounds(p, Quantity::dist_f).upper == 1.0);
      // The distance bound is the r -> 1 limit of the |f| lower bound.
      CHECK(rel(growth_bounds(p, 1.0 - 1e-9, Quantity::abs_f).lower, oracle::dist_f(a, k)) < 1e-7);
    }
  }
}

TEST_CASE("errors and names") {
  const Params p(0.2, 2);
  CHECK_THROWS_AS(growth_bounds(p, 0.0, Quantity::abs_f), DomainError);
  CHECK_THROWS_AS(growth_bounds(p, 1.0, Quantity::abs_f), DomainError);
  CHECK_THROWS_AS(distortion_bounds(p, -0.5, Quantity::fz), DomainError);
  CHECK_THROWS_AS(growth_bounds(p, 0.5, Quantity::fz), PreconditionError);
  CHECK_THROWS_AS(distance_bounds(p, Quantity::abs_f), PreconditionError);
  CHECK(quantity_from_string("omega-ratio") == Quantity::omega_ratio);
  CHECK(to_string(Quantity::dist_g) == "dist-g");
  CHECK_THROWS_AS(quantity_from_string("nope"), PreconditionError);
}

TEST_CASE("bounds stay finite near the boundary") {
  const Bounds b = growth_bounds(Params(0.0, 1), 1.0 - 1e-6, Quantity::abs_f);
  CHECK(std::isfinite(b.log_upper));
  CHECK(b.log_upper > 1e6);
}
