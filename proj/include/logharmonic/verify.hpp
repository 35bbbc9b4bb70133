#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace logharmonic {

/// Uniform doubles in [0, 1) from the top 53 bits of mt19937_64, so a seed
/// gives the same stream on every platform.
class UniformSource {
 public:
  explicit UniformSource(std::uint64_t seed) : engine_(seed) {}
  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * next(); }
  int integer(int lo, int hi) { return lo + static_cast<int>(next() * (hi - lo + 1)); }

 private:
  std::mt19937_64 engine_;
};

struct PropertyResult {
  std::string suite;
  std::string name;
  int checked = 0;
  int failures = 0;
  double worst = 0.0;  ///< largest violation or error seen
  bool passed() const { return failures == 0 && checked > 0; }
};

/// Names accepted by run_verification.
const std::vector<std::string>& verification_suites();

/// Runs one suite ("growth", "distortion", "coeffs", "bohr", "area",
/// "schwarzian") or all of them ("all"). Fixed checks always run; `samples`
/// adds that many random cases drawn from `seed`. Throws PreconditionError
/// for an unknown suite.
std::vector<PropertyResult> run_verification(const std::string& suite, int samples, std::uint64_t seed);

}  // namespace logharmonic
