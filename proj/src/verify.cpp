#include "logharmonic/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <utility>

#include "logharmonic/area.hpp"
#include "logharmonic/bounds.hpp"
#include "logharmonic/error.hpp"
#include "logharmonic/mappings.hpp"
#include "logharmonic/radii.hpp"
#include "logharmonic/schwarzian.hpp"

namespace logharmonic {

namespace {

constexpr double kPi = std::numbers::pi;

class Tally {
 public:
  Tally(std::string suite, std::string name) {
    result_.suite = std::move(suite);
    result_.name = std::move(name);
  }

  void record(bool ok, double error = 0.0) {
    ++result_.checked;
    if (!ok) ++result_.failures;
    if (std::isfinite(error)) result_.worst = std::max(result_.worst, error);
  }

  // Runs `body`, counting an exception as a failed check.
  void guarded(const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception&) {
      record(false);
    }
  }

  PropertyResult result() const { return result_; }

 private:
  PropertyResult result_;
};

double relative_error(double value, double reference) {
  return std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
}

const std::vector<std::pair<double, int>>& sharpness_grid() {
  static const std::vector<std::pair<double, int>> grid{{0.0, 1}, {0.0, 2}, {0.5, 1}, {0.5, 2}};
  return grid;
}

// Measured moduli of every bounded quantity of a map at z.
struct Measured {
  double abs_h, abs_g, abs_f, fz, fzbar, h_prime, g_prime, phi_ratio, phi_abs, omega_ratio;
  double value(Quantity q) const {
    switch (q) {
      case Quantity::abs_h: return abs_h;
      case Quantity::abs_g: return abs_g;
      case Quantity::abs_f: return abs_f;
      case Quantity::fz: return fz;
      case Quantity::fzbar: return fzbar;
      case Quantity::h_prime: return h_prime;
      case Quantity::g_prime: return g_prime;
      case Quantity::phi_ratio: return phi_ratio;
      case Quantity::phi_abs: return phi_abs;
      case Quantity::omega_ratio: return omega_ratio;
      default: throw PreconditionError("no measurement for " + to_string(q));
    }
  }
};

Measured measure(const LogharmonicMap& map, Complex z) {
  const MapJets j = map.jets(z);
  const Jet h = j.F.divided_by_variable(z);
  const Complex w = j.omega.value();
  const Complex G = std::conj(j.G.value());
  Measured m;
  m.abs_h = std::abs(h.value());
  m.abs_g = std::abs(j.G.value());
  m.abs_f = std::abs(j.F.value() * G);
  m.fz = std::abs(j.F.d1() * G);
  m.fzbar = std::abs(j.F.value() * std::conj(j.G.d1()));
  m.h_prime = std::abs(h.d1());
  m.g_prime = std::abs(j.G.d1());
  m.phi_ratio = std::abs(z * (j.F.d1() / j.F.value() - j.G.d1() / j.G.value()));
  m.phi_abs = std::abs(j.F.value() / j.G.value());
  m.omega_ratio = std::abs(w / (1.0 - w));
  return m;
}

Bounds bounds_for(const Params& p, double r, Quantity q) {
  switch (q) {
    case Quantity::abs_h:
    case Quantity::abs_g:
    case Quantity::abs_f: return growth_bounds(p, r, q);
    case Quantity::phi_ratio:
    case Quantity::phi_abs:
    case Quantity::omega_ratio: return phi_bounds(p, r, q);
    default: return distortion_bounds(p, r, q);
  }
}

// Random class members phi = z/(1 - lambda z^k)^(2(1-a)/k), omega = c z^k,
// each sampled at five radii; checks lower and upper bounds per quantity.
void member_sandwich(const std::string& suite, const std::vector<Quantity>& quantities, int samples,
                     UniformSource& rng, std::vector<PropertyResult>& out) {
  std::vector<Tally> lower;
  std::vector<Tally> upper;
  for (Quantity q : quantities) {
    lower.emplace_back(suite, "member sandwich " + to_string(q) + " lower");
    upper.emplace_back(suite, "member sandwich " + to_string(q) + " upper");
  }
  Tally pde(suite, "member logharmonic equation residual < 1e-9");
  constexpr double kSlack = 1e-9;
  for (int s = 0; s < samples; ++s) {
    const Params p(rng.uniform(0.0, 0.99), rng.integer(1, 4));
    const Complex lambda = std::polar(std::sqrt(rng.next()), 2.0 * kPi * rng.next());
    const Complex c = std::polar(0.9 * std::sqrt(rng.next()), 2.0 * kPi * rng.next());
    const LogharmonicMap map = member_from(starlike_phi(p, lambda), monomial_omega(c, p.k()));
    for (double r : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      const Complex z = std::polar(r, 2.0 * kPi * rng.next());
      Measured m{};
      try {
        m = measure(map, z);
        const double res = pde_residual(map, z);
        pde.record(res < 1e-9, res);
      } catch (const std::exception&) {
        pde.record(false);
        for (std::size_t i = 0; i < quantities.size(); ++i) {
          lower[i].record(false);
          upper[i].record(false);
        }
        continue;
      }
      for (std::size_t i = 0; i < quantities.size(); ++i) {
        const Bounds b = bounds_for(p, r, quantities[i]);
        const double v = m.value(quantities[i]);
        const double below = b.lower - v;
        const double above = v - b.upper;
        lower[i].record(below <= kSlack * b.lower, std::max(below, 0.0) / std::max(b.lower, 1e-300));
        upper[i].record(above <= kSlack * b.upper, std::max(above, 0.0) / b.upper);
      }
    }
  }
  if (samples <= 0) return;
  for (std::size_t i = 0; i < quantities.size(); ++i) {
    out.push_back(lower[i].result());
    out.push_back(upper[i].result());
  }
  out.push_back(pde.result());
}

// The Koebe map at z = r attains the upper bound and at z^k = -r^k the lower one.
void koebe_sharpness(const std::string& suite, Quantity q, bool lower_too, std::vector<PropertyResult>& out) {
  Tally up(suite, "koebe attains " + to_string(q) + " upper");
  Tally low(suite, "koebe attains " + to_string(q) + " lower");
  for (const auto& [alpha, k] : sharpness_grid()) {
    const Params p(alpha, k);
    const LogharmonicMap f = koebe_map(p);
    for (double r : {0.2, 0.6}) {
      const Bounds b = bounds_for(p, r, q);
      up.guarded([&] {
        const double v = measure(f, Complex(r, 0.0)).value(q);
        const double err = relative_error(v, b.upper);
        up.record(err < 1e-8, err);
      });
      if (lower_too) {
        low.guarded([&] {
          const double v = measure(f, std::polar(r, kPi / k)).value(q);
          const double err = relative_error(v, b.lower);
          low.record(err < 1e-8, err);
        });
      }
    }
  }
  out.push_back(up.result());
  if (lower_too) out.push_back(low.result());
}

void growth_suite(int samples, UniformSource& rng, std::vector<PropertyResult>& out) {
  const std::string suite = "growth";
  for (Quantity q : {Quantity::abs_h, Quantity::abs_g, Quantity::abs_f}) koebe_sharpness(suite, q, true, out);

  Tally mono(suite, "growth upper bounds and |f| lower bound nondecreasing in r");
  for (double alpha : {0.0, 0.2, 0.4, 0.6, 0.8, 0.99}) {
    for (int k : {1, 2, 3, 4, 7, 10}) {
      const Params p(alpha, k);
      double prev[4] = {-1e300, -1e300, -1e300, -1e300};
      for (int i = 1; i <= 50; ++i) {
        const double r = i / 51.0;
        const double cur[4] = {growth_bounds(p, r, Quantity::abs_h).log_upper,
                               growth_bounds(p, r, Quantity::abs_g).log_upper,
                               growth_bounds(p, r, Quantity::abs_f).log_upper,
                               growth_bounds(p, r, Quantity::abs_f).log_lower};
        for (int j = 0; j < 4; ++j) {
          mono.record(cur[j] >= prev[j], std::max(prev[j] - cur[j], 0.0));
          prev[j] = cur[j];
        }
      }
    }
  }
  out.push_back(mono.result());
  member_sandwich(suite, {Quantity::abs_h, Quantity::abs_g, Quantity::abs_f}, samples, rng, out);
}

void distortion_suite(int samples, UniformSource& rng, std::vector<PropertyResult>& out) {
  const std::string suite = "distortion";
  for (Quantity q : {Quantity::fz, Quantity::fzbar, Quantity::g_prime}) koebe_sharpness(suite, q, true, out);
  koebe_sharpness(suite, Quantity::h_prime, false, out);
  member_sandwich(suite,
                  {Quantity::fz, Quantity::fzbar, Quantity::h_prime, Quantity::g_prime, Quantity::phi_ratio,
                   Quantity::phi_abs, Quantity::omega_ratio},
                  samples, rng, out);
}

void coeffs_suite(int samples, UniformSource& rng, std::vector<PropertyResult>& out) {
  Tally t("coeffs", "koebe log coefficients equal coefficient bounds (n <= 64)");
  auto check = [&t](const Params& p) {
    const LogCoefficients c = koebe_log_coeffs(p, 64);
    for (int n = 1; n <= 64; ++n) {
      const CoeffBound b = coeff_bounds(p, n);
      const double err = std::max(std::abs(c.a[n - 1] - b.a_bound), std::abs(c.b[n - 1] - b.b_bound));
      t.record(err < 1e-10, err);
    }
  };
  for (double alpha : {0.0, 0.2, 0.5, 0.8, 0.99}) {
    for (int k : {1, 2, 3, 4, 7, 10}) check(Params(alpha, k));
  }
  for (int s = 0; s < samples; ++s) check(Params(rng.uniform(0.0, 0.99), rng.integer(1, 10)));
  out.push_back(t.result());
}

const std::vector<RadiusId> kBohrIds{RadiusId::r1, RadiusId::r2, RadiusId::r3,
                                     RadiusId::r4, RadiusId::r5, RadiusId::r6};

void bohr_suite(int samples, UniformSource& rng, std::vector<PropertyResult>& out) {
  const std::string suite = "bohr";
  Tally residual(suite, "solved residual <= 1e-10 and sign change within 1e-6");
  Tally mono(suite, "equations strictly increasing on 200-point grid");
  Tally ends(suite, "negative at r = 1e-6, positive at r = 1 - 1e-6");
  Tally identity(suite, "bohr sum at the radius equals the distance bound (1e-6)");
  Tally below(suite, "bohr sum below the distance bound at 0.9 x radius");
  Tally dominance(suite, "tables 1-3: improved radius below comparison constant");
  Tally folds(suite, "radius strictly increasing in k");

  auto check_case = [&](RadiusId id, const Params& p, bool grid) {
    const RadiusEquation eq{id, p};
    double root = 0.0;
    residual.guarded([&] {
      const auto res = solve_radius(eq);
      root = res.value;
      const bool ok = std::abs(res.residual) <= 1e-10 && equation_value(eq, root - 1e-6) < 0.0 &&
                      equation_value(eq, root + 1e-6) > 0.0;
      residual.record(ok, std::abs(res.residual));
    });
    if (grid) {
      mono.guarded([&] {
        double prev = equation_value(eq, 1.0 / 201.0);
        bool ok = true;
        for (int i = 2; i <= 200; ++i) {
          const double cur = equation_value(eq, i / 201.0);
          ok = ok && cur > prev;
          prev = cur;
        }
        mono.record(ok);
      });
    }
    ends.guarded([&] { ends.record(equation_value(eq, 1e-6) < 0.0 && equation_value(eq, 1.0 - 1e-6) > 0.0); });
    if (root <= 0.0) return;
    const double target = distance_bounds(p, bohr_target(id)).lower;
    identity.guarded([&] {
      const double err = std::abs(bohr_sum(id, p, root).value - target);
      identity.record(err <= 1e-6, err);
    });
    below.guarded([&] { below.record(bohr_sum(id, p, 0.9 * root).value < target); });
  };

  for (RadiusId id : kBohrIds) {
    const ReferenceTable& table = reference_table(id);
    for (std::size_t i = 0; i < table.alphas.size(); ++i) {
      double prev_root = 0.0;
      for (std::size_t j = 0; j < table.ks.size(); ++j) {
        const Params p(table.alphas[i], table.ks[j]);
        check_case(id, p, true);
        folds.guarded([&] {
          const double root = solve_radius({id, p}).value;
          folds.record(root > prev_root);
          prev_root = root;
        });
        if (!table.comparison.empty()) {
          dominance.guarded([&] {
            const double root = solve_radius({id, p}).value;
            dominance.record(root < table.comparison[i][j], std::max(root - table.comparison[i][j], 0.0));
          });
        }
      }
    }
  }
  for (int s = 0; s < samples; ++s) {
    const RadiusId id = kBohrIds[static_cast<std::size_t>(rng.integer(0, 5))];
    check_case(id, Params(rng.uniform(0.0, 0.99), rng.integer(1, 10)), false);
  }
  for (const Tally* t : {&residual, &mono, &ends, &identity, &below, &dominance, &folds}) {
    out.push_back(t->result());
  }
}

void area_suite(int samples, UniformSource& rng, std::vector<PropertyResult>& out) {
  const std::string suite = "area";
  Tally sandwich(suite, "koebe: 2 pi L1 - eps <= direct area <= 2 pi L2 + eps");
  Tally converge(suite, "doubling the grid moves the direct area by < 4 x its error estimate (worst is relative)");
  Tally identity(suite, "identity map area equals pi r^2 (1e-9)");
  auto check = [&](const Params& p, double r) {
    sandwich.guarded([&] {
      const AreaResult b = area_bounds(p, r);
      const DirectArea d = area_direct(koebe_map(p), r, 64, 256);
      const double eps = b.quadrature_error + d.error_estimate;
      const bool ok = b.lower_2piL1 - eps <= d.value && d.value <= b.upper_2piL2 + eps;
      sandwich.record(ok, std::max({b.lower_2piL1 - eps - d.value, d.value - b.upper_2piL2 - eps, 0.0}));
    });
  };
  for (const auto& [alpha, k] : sharpness_grid()) {
    for (double r : {0.2, 0.5, 0.8}) {
      check(Params(alpha, k), r);
      converge.guarded([&] {
        const LogharmonicMap f = koebe_map(Params(alpha, k));
        const DirectArea a = area_direct(f, r, 32, 128);
        const DirectArea b = area_direct(f, r, 64, 256);
        const double change = std::abs(a.value - b.value);
        converge.record(change <= 4.0 * a.error_estimate || change <= 1e-12 * std::abs(b.value), change / std::abs(b.value));
      });
    }
  }
  for (double r : {0.1, 0.5, 0.9}) {
    identity.guarded([&] {
      const double err = std::abs(area_direct(identity_map(), r).value - kPi * r * r);
      identity.record(err < 1e-9, err);
    });
  }
  for (int s = 0; s < samples; ++s) check(Params(rng.uniform(0.0, 0.99), rng.integer(1, 2)), rng.uniform(0.05, 0.8));
  out.push_back(sandwich.result());
  out.push_back(converge.result());
  out.push_back(identity.result());
}

Jet koebe_analytic_h(Complex z) { return pow(Complex(1.0) + (-Jet::variable(z)), -2.0); }

Jet mobius(Complex z, Complex a) {
  const Jet Z = Jet::variable(z);
  return (a + Z) / (Complex(1.0) + std::conj(a) * Z);
}

void schwarzian_suite(int samples, UniformSource& rng, std::vector<PropertyResult>& out) {
  const std::string suite = "schwarzian";
  const LogharmonicMap koebe = analytic_map(koebe_analytic_h, "z/(1-z)^2");

  Tally values(suite, "analytic koebe: P(0) = 4, S(0) = -6, S(0.5) = -32/3");
  values.guarded([&] {
    const double e1 = std::abs(pre_schwarzian(koebe, 0.0) - 4.0);
    const double e2 = std::abs(schwarzian(koebe, 0.0) + 6.0);
    const double e3 = std::abs(schwarzian(koebe, 0.5) + 32.0 / 3.0);
    const double err = std::max({e1, e2, e3});
    values.record(err < 1e-8, err);
  });

  std::vector<Complex> points{{0.1, 0.2}, {-0.3, 0.1}, {0.25, -0.25}, {0.0, 0.4}, {-0.2, -0.35}};
  for (int s = 0; s < samples; ++s) points.push_back(std::polar(0.5 * std::sqrt(rng.next()), 2.0 * kPi * rng.next()));

  Tally reduction(suite, "analytic maps: classical pre-Schwarzian and Schwarzian (1e-9)");
  Tally chain_pre(suite, "pre-Schwarzian chain rule, affine and Mobius phi (1e-8)");
  Tally chain_s(suite, "Schwarzian chain rule, affine and Mobius phi (1e-7)");
  Tally annihilate(suite, "Mobius phi has zero Schwarzian (1e-10)");
  const LogharmonicMap f = koebe_map(Params(0.5, 2));
  const Complex a(0.3, -0.2);
  const std::vector<std::pair<std::string, AnalyticFn>> phis{
      {"affine", [](Complex z) { return Complex(0.5) * Jet::variable(z); }},
      {"mobius", [a](Complex z) { return mobius(z, a); }}};
  for (const Complex z : points) {
    reduction.guarded([&] {
      const Complex w = 1.0 - z;
      const double e1 = std::abs(pre_schwarzian(koebe, z) - 2.0 * (2.0 + z) / (w * (1.0 + z)));
      const double e2 = std::abs(schwarzian(koebe, z) + 6.0 / ((1.0 - z * z) * (1.0 - z * z)));
      reduction.record(std::max(e1, e2) < 1e-9, std::max(e1, e2));
    });
    for (const auto& [name, phi] : phis) {
      const LogharmonicMap composed = precompose(f, phi);
      const Jet pj = phi(z);
      chain_pre.guarded([&] {
        const Complex expected = pre_schwarzian(f, pj.value()) * pj.d1() + classical_pre_schwarzian(pj);
        const double err = std::abs(pre_schwarzian(composed, z) - expected);
        chain_pre.record(err < 1e-8, err);
      });
      chain_s.guarded([&] {
        const Complex expected = schwarzian(f, pj.value()) * pj.d1() * pj.d1() + classical_schwarzian(pj);
        const double err = std::abs(schwarzian(composed, z) - expected);
        chain_s.record(err < 1e-7, err);
      });
    }
    annihilate.guarded([&] {
      const double err = std::abs(classical_schwarzian(mobius(z, a)));
      annihilate.record(err < 1e-10, err);
    });
  }

  Tally harmonic(suite, "constant omega: harmonicity residual < 1e-5");
  Tally not_harmonic(suite, "omega = z/2: harmonicity residual > 1e-2 at z = 0.3");
  harmonic.guarded([&] {
    const double e1 = harmonicity_residual(example_map(ExampleKind::f3, Params(0.0, 1)), 0.3);
    const double e2 = harmonicity_residual(koebe, Complex(0.2, -0.1));
    harmonic.record(std::max(e1, e2) < 1e-5, std::max(e1, e2));
  });
  not_harmonic.guarded([&] {
    const LogharmonicMap m = member_from([](Complex z) { return Jet::variable(z); },
                                         [](Complex z) { return Complex(0.5) * Jet::variable(z); });
    const double v = harmonicity_residual(m, 0.3);
    not_harmonic.record(v > 1e-2, v);
  });
  for (const Tally* t : {&values, &reduction, &chain_pre, &chain_s, &annihilate, &harmonic, &not_harmonic}) {
    out.push_back(t->result());
  }
}

using SuiteFn = void (*)(int, UniformSource&, std::vector<PropertyResult>&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"growth", growth_suite}, {"distortion", distortion_suite}, {"coeffs", coeffs_suite},
      {"bohr", bohr_suite},     {"area", area_suite},             {"schwarzian", schwarzian_suite}};
  return table;
}

}  // namespace

const std::vector<std::string>& verification_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : suite_table()) v.push_back(name);
    v.push_back("all");
    return v;
  }();
  return names;
}

std::vector<PropertyResult> run_verification(const std::string& suite, int samples, std::uint64_t seed) {
  if (samples < 0) throw PreconditionError("run_verification: samples must be nonnegative");
  std::vector<PropertyResult> out;
  bool matched = false;
  std::uint64_t offset = 0;
  for (const auto& [name, fn] : suite_table()) {
    ++offset;
    if (suite != "all" && suite != name) continue;
    matched = true;
    UniformSource rng(seed + offset);
    fn(samples, rng, out);
  }
  if (!matched) throw PreconditionError("unknown verification suite '" + suite + "'");
  return out;
}

}  // namespace logharmonic
