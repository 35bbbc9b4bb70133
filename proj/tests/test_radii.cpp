#include <doctest.h>

#include <cmath>

#include "logharmonic/error.hpp"
#include "logharmonic/radii.hpp"
#include "oracles.hpp"

using namespace logharmonic;

namespace {

const std::vector<RadiusId> kBohr{RadiusId::r1, RadiusId::r2, RadiusId::r3, RadiusId::r4, RadiusId::r5, RadiusId::r6};

int index_of(RadiusId id) { return static_cast<int>(id) + 1; }

}  // namespace

TEST_CASE("radius names") {
  CHECK(to_string(RadiusId::starlike_class) == "starlike");
  CHECK(radius_from_string("starlike-example") == RadiusId::starlike_example);
  CHECK(radius_from_string("r4") == RadiusId::r4);
  CHECK_THROWS_AS(radius_from_string("r7"), PreconditionError);
  CHECK(bohr_target(RadiusId::r2) == Quantity::dist_h);
  CHECK(bohr_target(RadiusId::r3) == Quantity::dist_g);
  CHECK(bohr_target(RadiusId::r6) == Quantity::dist_f);
  CHECK_THROWS_AS(bohr_target(RadiusId::starlike_class), PreconditionError);
}

TEST_CASE("solved radii agree with brute-force bisection on the majorant series") {
  for (RadiusId id : kBohr) {
    for (double a : {0.0, 0.4, 0.99}) {
      for (int k : {1, 3, 10}) {
        CAPTURE(to_string(id));
        CAPTURE(a);
        CAPTURE(k);
        const double got = solve_radius({id, Params(a, k)}).value;
        const double expected = oracle::bohr_radius(index_of(id), a, k);
        CHECK(std::abs(got - expected) < 1e-9);
      }
    }
  }
}

TEST_CASE("reference anchors") {
  const auto solve = [](RadiusId id, double a, int k) { return solve_radius({id, Params(a, k)}).value; };
  CHECK(std::abs(solve(RadiusId::r1, 0.0, 1) - 0.0758) < 5e-4);
  CHECK(std::abs(solve(RadiusId::r3, 0.0, 1) - 0.2771) < 5e-4);
  CHECK(std::abs(solve(RadiusId::r5, 0.0, 1) - 0.0592) < 5e-4);
  CHECK(std::abs(solve(RadiusId::r6, 0.99, 10) - 0.4349) < 5e-4);
  CHECK(std::abs(solve(RadiusId::r6, 0.8, 4) - 0.3371) < 5e-4);
  CHECK(std::abs(equation_value({RadiusId::r1, Params(0.0, 1)}, 0.0758)) < 2e-3);
  CHECK(std::abs(equation_value({RadiusId::r4, Params(0.0, 1)}, 0.0170)) < 6e-3);
}

TEST_CASE("starlikeness radii") {
  const double s = 3.0 - 2.0 * std::sqrt(2.0);
  CHECK(std::abs(equation_value({RadiusId::starlike_class, Params(0.0, 1)}, s)) < 1e-14);
  CHECK(std::abs(solve_radius({RadiusId::starlike_class, Params(0.0, 1)}).value - s) < 1e-10);
  CHECK_THROWS_AS(solve_radius({RadiusId::starlike_example, Params(0.0, 1)}), NoRootError);
  CHECK(std::abs(solve_radius({RadiusId::starlike_example, Params(0.0, 2)}).value - 1.0 / std::sqrt(3.0)) < 1e-10);
  CHECK_THROWS_AS(equation_value({RadiusId::r1, Params(0.0, 1)}, 0.0), DomainError);
  CHECK_THROWS_AS(equation_value({RadiusId::r1, Params(0.0, 1)}, 1.0), DomainError);
}

TEST_CASE("numeric starlikeness radius of the examples") {
  const StarlikeRadius f3 = starlike_radius_numeric(example_map(ExampleKind::f3, Params(0.0, 2)), 0.0);
  CHECK(f3.saturated);
  const StarlikeRadius f4k1 = starlike_radius_numeric(example_map(ExampleKind::f4, Params(0.0, 1)), 0.0);
  CHECK(f4k1.saturated);
  const StarlikeRadius f5k1 = starlike_radius_numeric(example_map(ExampleKind::f5, Params(0.0, 1)), 0.0);
  CHECK(f5k1.saturated);
  // Re(1 + 2k(1-a) u/(1-u)) first vanishes at u = -x with x = 1/(2k(1-a) - 1).
  for (int k : {2, 3, 4}) {
    for (double a : {0.0, 0.25}) {
      const StarlikeRadius f5 = starlike_radius_numeric(example_map(ExampleKind::f5, Params(a, k)), 0.0);
      const double expected = std::pow(1.0 / (2.0 * k * (1.0 - a) - 1.0), 1.0 / k);
      CHECK_FALSE(f5.saturated);
      CHECK(std::abs(f5.value - expected) < 1e-8);
    }
  }
  const StarlikeRadius f4 = starlike_radius_numeric(example_map(ExampleKind::f4, Params(0.0, 2)), 0.0);
  CHECK(std::abs(f4.value - 1.0 / std::sqrt(3.0)) < 1e-8);
}

TEST_CASE("bohr sums match the brute-force majorant") {
  for (RadiusId id : kBohr) {
    for (double r : {0.05, 0.2, 0.5}) {
      const Params p(0.3, 2);
      const BohrSum s = bohr_sum(id, p, r);
      CHECK(s.truncation_ok);
      CHECK(s.tail_bound < 1e-12);
      const double expected = oracle::bohr_majorant(index_of(id), 0.3, 2, r);
      CHECK(std::abs(s.value - expected) < 1e-10 * expected);
    }
  }
  const BohrSum short_sum = bohr_sum(RadiusId::r1, Params(0.0, 1), 0.5, 3);
  CHECK(short_sum.terms == 3);
  CHECK_FALSE(short_sum.truncation_ok);
  CHECK(bohr_sum(RadiusId::r1, Params(0.0, 1), 1e-8).value < 2e-8);
  CHECK(bohr_sum(RadiusId::r5, Params(0.0, 1), 1e-8).value < 3e-8);
  CHECK_THROWS_AS(bohr_sum(RadiusId::r1, Params(0.0, 1), 1.0), DomainError);
  CHECK_THROWS_AS(bohr_sum(RadiusId::starlike_class, Params(0.0, 1), 0.5), PreconditionError);
}

TEST_CASE("bohr identity at the radius and strict inequality below it") {
  for (RadiusId id : kBohr) {
    const Params p(0.2, 2);
    const double root = solve_radius({id, p}).value;
    const double d = distance_bounds(p, bohr_target(id)).lower;
    CHECK(std::abs(bohr_sum(id, p, root).value - d) < 1e-6);
    CHECK(bohr_sum(id, p, 0.9 * root).value < d);
  }
}

TEST_CASE("reference tables") {
  for (RadiusId id : kBohr) {
    const ReferenceTable& t = reference_table(id);
    CHECK(t.id == id);
    CHECK(t.ks == std::vector<int>{1, 2, 3, 4, 7, 10});
    CHECK(t.improved.size() == t.alphas.size());
    for (const auto& row : t.improved) CHECK(row.size() == t.ks.size());
    const bool compared = id == RadiusId::r1 || id == RadiusId::r2 || id == RadiusId::r3;
    CHECK(t.comparison.empty() != compared);
  }
  CHECK(reference_table(RadiusId::r1).improved[0][0] == 0.0758);
  CHECK(reference_table(RadiusId::r6).alphas.size() == 6);
  CHECK(reference_table(RadiusId::r1).alphas.size() == 5);
}
