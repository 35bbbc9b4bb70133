#include "logharmonic/radii.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "logharmonic/error.hpp"

namespace logharmonic {

std::string to_string(RadiusId id) {
  switch (id) {
    case RadiusId::r1: return "r1";
    case RadiusId::r2: return "r2";
    case RadiusId::r3: return "r3";
    case RadiusId::r4: return "r4";
    case RadiusId::r5: return "r5";
    case RadiusId::r6: return "r6";
    case RadiusId::starlike_class: return "starlike";
    case RadiusId::starlike_example: return "starlike-example";
  }
  return "unknown";
}

RadiusId radius_from_string(const std::string& name) {
  for (RadiusId id : {RadiusId::r1, RadiusId::r2, RadiusId::r3, RadiusId::r4, RadiusId::r5,
                      RadiusId::r6, RadiusId::starlike_class, RadiusId::starlike_example}) {
    if (to_string(id) == name) return id;
  }
  throw PreconditionError("unknown radius '" + name + "'");
}

Quantity bohr_target(RadiusId id) {
  switch (id) {
    case RadiusId::r2: return Quantity::dist_h;
    case RadiusId::r3: return Quantity::dist_g;
    case RadiusId::r1:
    case RadiusId::r4:
    case RadiusId::r5:
    case RadiusId::r6: return Quantity::dist_f;
    default: throw PreconditionError("bohr_target: not a Bohr radius");
  }
}

namespace {

// log(1 + e^t) without overflow.
double softplus(double t) { return t > 0.0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t)); }

}  // namespace

double equation_value(const RadiusEquation& eq, double r) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("equation_value: r must lie in (0, 1)");
  const double a = eq.params.alpha();
  const double k = eq.params.k();
  const double x = std::pow(r, eq.params.k());
  const double log_r = std::log(r);
  const double l1m = std::log1p(-x);  // log(1 - x)
  const double q = x / (1.0 - x);
  switch (eq.id) {
    case RadiusId::r1:
    case RadiusId::r2:
    case RadiusId::r3: {
      const double d = distance_bounds(eq.params, bohr_target(eq.id)).log_lower;
      const double li2 = numerics::dilog(x);
      if (eq.id == RadiusId::r1) {
        return log_r - 2.0 * a * (3.0 - 2.0 * a) / k * l1m + 4.0 * (1.0 - a) * (2.0 - a) * q / k +
               (2.0 * a - 1.0) * li2 / k - d;
      }
      const double common = log_r + 2.0 * (1.0 - a) * (3.0 - 2.0 * a) * q / k;
      if (eq.id == RadiusId::r2) return common - (5.0 - 4.0 * a) / k * l1m + li2 / k - d;
      return common - (2.0 * a - 1.0) * (5.0 - 4.0 * a) / k * l1m +
             (2.0 * a - 1.0) * (2.0 * a - 1.0) * li2 / k - d;
    }
    case RadiusId::r4:
    case RadiusId::r5:
    case RadiusId::r6: {
      const double d = distance_bounds(eq.params, Quantity::dist_f).log_lower;
      const double growth = 4.0 * (1.0 - a) * q / k;
      if (eq.id == RadiusId::r4) return 2.0 + log_r - 2.0 * a / k * l1m + growth - d;
      if (eq.id == RadiusId::r5) return log_r + softplus(-2.0 * a / k * l1m + growth) - d;
      return log_r + std::log(2.0 - (1.0 + 2.0 * a) * x + x * x) - 2.0 * (a + k) / k * l1m + growth - d;
    }
    case RadiusId::starlike_class:
      return -((1.0 + 2.0 * a) * x * x - (6.0 - 2.0 * a) * x + 1.0);
    case RadiusId::starlike_example:
      return -(1.0 + (1.0 - 2.0 * k) * x * x - 2.0 * (k - 1.0) * x);
  }
  throw PreconditionError("equation_value: unknown equation");
}

numerics::RootResult solve_radius(const RadiusEquation& eq, double tol) {
  return numerics::find_root_increasing([&eq](double r) { return equation_value(eq, r); }, tol);
}

BohrSum bohr_sum(RadiusId id, const Params& params, double r, std::optional<int> terms) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("bohr_sum: r must lie in (0, 1)");
  const double alpha = params.alpha();
  const double k = params.k();
  const double c = 2.0 * (1.0 - alpha) / k;
  auto a_n = [&](int n) { return c + 1.0 / (k * n); };
  auto b_n = [&](int n) { return c + (2.0 * alpha - 1.0) / (k * n); };
  auto coefficient = [&](int n) {
    const double a = a_n(n);
    const double b = b_n(n);
    switch (id) {
      case RadiusId::r1: return a + b + k * a * b;
      case RadiusId::r2: return a + k * a * a;
      case RadiusId::r3: return b + k * b * b;
      case RadiusId::r4:
      case RadiusId::r5:
      case RadiusId::r6: return a + b;
      default: throw PreconditionError("bohr_sum: not a Bohr radius");
    }
  };
  // a_n and b_n are positive and monotone in n, so their suprema sit at n = 1 or n -> infinity.
  const double sup_a = std::max(a_n(1), c);
  const double sup_b = std::max(b_n(1), c);
  double sup = 0.0;
  switch (id) {
    case RadiusId::r1: sup = sup_a + sup_b + k * sup_a * sup_b; break;
    case RadiusId::r2: sup = sup_a + k * sup_a * sup_a; break;
    case RadiusId::r3: sup = sup_b + k * sup_b * sup_b; break;
    default: sup = sup_a + sup_b; break;
  }

  const double x = std::pow(r, params.k());
  constexpr double kTailTarget = 1e-12;
  constexpr int kMaxTerms = 50'000'000;
  auto tail_after = [&](int n) { return sup * std::pow(x, n + 1) / (1.0 - x); };

  int N = 0;
  if (terms) {
    if (*terms < 1) throw PreconditionError("bohr_sum: need at least one term");
    N = *terms;
  } else {
    // Smallest N with tail below the target: x^(N+1) < target (1-x) / sup.
    const double need = std::log(kTailTarget * (1.0 - x) / sup) / std::log(x) - 1.0;
    N = std::max(1, static_cast<int>(std::min(std::ceil(need), static_cast<double>(kMaxTerms))));
    while (N > 1 && tail_after(N - 1) < kTailTarget) --N;
    while (N < kMaxTerms && !(tail_after(N) < kTailTarget)) ++N;
  }

  double exponent = 0.0;
  double power = 1.0;
  for (int n = 1; n <= N; ++n) {
    power *= x;
    exponent += coefficient(n) * power;
  }

  BohrSum out;
  out.terms = N;
  out.tail_bound = tail_after(N);
  out.truncation_ok = out.tail_bound < kTailTarget;
  const double majorant = r * std::exp(exponent);
  switch (id) {
    case RadiusId::r4: out.value = std::exp(2.0) * majorant; break;
    case RadiusId::r5: out.value = r + majorant; break;
    case RadiusId::r6: out.value = std::abs(r * eval_fz(koebe_map(params), Complex(r, 0.0))) + majorant; break;
    default: out.value = majorant; break;
  }
  return out;
}

StarlikeRadius starlike_radius_numeric(const LogharmonicMap& map, double alpha, double tol) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw DomainError("starlike_radius_numeric: alpha must lie in [0, 1)");
  if (!(tol > 0.0)) throw PreconditionError("starlike_radius_numeric: tolerance must be positive");
  constexpr int kThetas = 720;
  constexpr int kScan = 200;
  constexpr double kMax = 1.0 - 1e-9;

  auto holds = [&](double rho) {
    for (int j = 0; j < kThetas; ++j) {
      const Complex z = std::polar(rho, 2.0 * std::numbers::pi * j / kThetas);
      double re = std::numeric_limits<double>::quiet_NaN();
      try {
        re = d_ratio(map, z).real();
      } catch (const Error&) {
        return false;
      }
      if (!(re > alpha)) return false;
    }
    return true;
  };

  double lo = 0.0;
  double hi = 0.0;
  bool found = false;
  for (int i = 1; i <= kScan; ++i) {
    const double rho = kMax * i / kScan;
    if (!holds(rho)) {
      hi = rho;
      found = true;
      break;
    }
    lo = rho;
  }
  if (!found) return {kMax, true};
  if (lo == 0.0) {
    lo = 1e-12;
    if (!holds(lo)) return {0.0, false};
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (holds(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {0.5 * (lo + hi), false};
}

namespace {

const std::vector<int> kTableKs{1, 2, 3, 4, 7, 10};
const std::vector<double> kFiveAlphas{0.0, 0.2, 0.4, 0.6, 0.99};
const std::vector<double> kSixAlphas{0.0, 0.2, 0.4, 0.6, 0.8, 0.99};

const ReferenceTable kTable1{
    RadiusId::r1, kFiveAlphas, kTableKs,
    {{0.0758, 0.2754, 0.4234, 0.5248, 0.6918, 0.7727},
     {0.0856, 0.2927, 0.4408, 0.5410, 0.7039, 0.7821},
     {0.0974, 0.3120, 0.4601, 0.5586, 0.7170, 0.7922},
     {0.1117, 0.3342, 0.4816, 0.5781, 0.7311, 0.8031},
     {0.1516, 0.3894, 0.5332, 0.6240, 0.7638, 0.8281}},
    {{0.0908, 0.3013, 0.4494, 0.5489, 0.7089, 0.7867},
     {0.1019, 0.3192, 0.4671, 0.5650, 0.7216, 0.7958},
     {0.1149, 0.3390, 0.4862, 0.5822, 0.7341, 0.8054},
     {0.1302, 0.3608, 0.5068, 0.6007, 0.7473, 0.8155},
     {0.1702, 0.4126, 0.5543, 0.6424, 0.7766, 0.8378}}};

const ReferenceTable kTable2{
    RadiusId::r2, kFiveAlphas, kTableKs,
    {{0.0729, 0.2700, 0.4178, 0.5197, 0.6880, 0.7679},
     {0.0906, 0.3011, 0.4493, 0.5488, 0.7097, 0.7866},
     {0.1146, 0.3385, 0.8457, 0.5818, 0.7338, 0.8052},
     {0.1478, 0.3844, 0.5287, 0.6200, 0.7609, 0.8260},
     {0.2669, 0.5166, 0.6439, 0.7188, 0.8280, 0.8762}},
    {{0.1222, 0.3496, 0.4963, 0.5913, 0.7406, 0.8104},
     {0.1460, 0.3820, 0.5265, 0.6181, 0.7596, 0.8249},
     {0.1753, 0.4187, 0.5597, 0.6471, 0.7798, 0.8402},
     {0.2126, 0.4611, 0.5969, 0.6790, 0.8016, 0.8566},
     {0.3289, 0.5735, 0.6903, 0.7573, 0.8531, 0.8948}}};

const ReferenceTable kTable3{
    RadiusId::r3, kFiveAlphas, kTableKs,
    {{0.2771, 0.5264, 0.6519, 0.7255, 0.8324, 0.8796},
     {0.2788, 0.5280, 0.6532, 0.7267, 0.8332, 0.8801},
     {0.2795, 0.5287, 0.6538, 0.7271, 0.8336, 0.8803},
     {0.2788, 0.5280, 0.6532, 0.7266, 0.8332, 0.8800},
     {0.2720, 0.5215, 0.6479, 0.7221, 0.8302, 0.8779}},
    {{0.3659, 0.6049, 0.7152, 0.7778, 0.8662, 0.9044},
     {0.3609, 0.6008, 0.7120, 0.7751, 0.8651, 0.9031},
     {0.3552, 0.5960, 0.7083, 0.7720, 0.8625, 0.9016},
     {0.3489, 0.5906, 0.7040, 0.7685, 0.8603, 0.9000},
     {0.3338, 0.5777, 0.6937, 0.7601, 0.8549, 0.8961}}};

const ReferenceTable kTable4{
    RadiusId::r4, kSixAlphas, kTableKs,
    {{0.0170, 0.0459, 0.0694, 0.0820, 0.1017, 0.1108},
     {0.0192, 0.0527, 0.0724, 0.0846, 0.1035, 0.1122},
     {0.0218, 0.0560, 0.0754, 0.0873, 0.1053, 0.1136},
     {0.0247, 0.0596, 0.0785, 0.0900, 0.1071, 0.1150},
     {0.0280, 0.0633, 0.0818, 0.0928, 0.1090, 0.1164},
     {0.0315, 0.0672, 0.0850, 0.0956, 0.1109, 0.1177}},
    {}};

const ReferenceTable kTable5{
    RadiusId::r5, kSixAlphas, kTableKs,
    {{0.0592, 0.1779, 0.2539, 0.3020, 0.3756, 0.4049},
     {0.0667, 0.1891, 0.2644, 0.3113, 0.3823, 0.4144},
     {0.0754, 0.2010, 0.2754, 0.3210, 0.3890, 0.4195},
     {0.0853, 0.2138, 0.2870, 0.3311, 0.3959, 0.4247},
     {0.0969, 0.2276, 0.2991, 0.3414, 0.4029, 0.4299},
     {0.1097, 0.2416, 0.3111, 0.3516, 0.4097, 0.4350}},
    {}};

const ReferenceTable kTable6{
    RadiusId::r6, kSixAlphas, kTableKs,
    {{0.0505, 0.1665, 0.2460, 0.2974, 0.3749, 0.4093},
     {0.0570, 0.1769, 0.2562, 0.3066, 0.3816, 0.4143},
     {0.0644, 0.1883, 0.2671, 0.3163, 0.3883, 0.4194},
     {0.0732, 0.2010, 0.2787, 0.3264, 0.3953, 0.4246},
     {0.0838, 0.2147, 0.2912, 0.3371, 0.4023, 0.4299},
     {0.0961, 0.2295, 0.3039, 0.3478, 0.4092, 0.4349}},
    {}};

}  // namespace

const ReferenceTable& reference_table(RadiusId id) {
  switch (id) {
    case RadiusId::r1: return kTable1;
    case RadiusId::r2: return kTable2;
    case RadiusId::r3: return kTable3;
    case RadiusId::r4: return kTable4;
    case RadiusId::r5: return kTable5;
    case RadiusId::r6: return kTable6;
    default: throw PreconditionError("reference_table: no table for " + to_string(id));
  }
}

}  // namespace logharmonic
