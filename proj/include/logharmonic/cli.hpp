#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace logharmonic {

/// Runs the command line given without the program name. Output goes to
/// `out` (or the --out file), diagnostics to `err`. Returns 0 on success, 1 on
/// a computation or verification failure and 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Fixed-point with 10 decimals and trailing zeros removed ("1", "0.1353352832");
/// scientific notation outside [1e-4, 1e15).
std::string format_number(double x);

/// Half-to-even rounding to 4 decimals, printed with exactly 4 decimals.
std::string format_table_cell(double x);

}  // namespace logharmonic
