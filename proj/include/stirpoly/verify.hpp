#pragma once

#include <stirpoly/pk.hpp>

#include <string>
#include <vector>

namespace stirpoly {

// Verification suites exposed by the CLI. The identity suites keep their
// short historical names as stable command tokens:
//   table   - the T triangle against the built-in 7-row reference plus
//             structural facts (first column, diagonal, upper zeros, sign)
//   rowsums - row sums of T equal factorials
//   eq8     - odd-index constant terms P_{2m-1}(0) against Bernoulli numbers
//   eq9     - the even-index recursion against interpolation
//   eq10    - the odd Bernoulli-polynomial recursion against the
//             binomial-formula construction
//   eq11    - the coefficient recursion: sign resolution plus agreement
//             with interpolation
//   all     - every suite above
enum class Suite { table, rowsums, eq8, eq9, eq10, eq11, all };

Suite parse_suite(const std::string& name);  // throws std::invalid_argument
std::string suite_name(Suite s);

struct CheckResult {
  std::string name;    // e.g. "rowsums/factorial-match"
  bool passed = false;
  std::string detail;  // summary, or the first counterexample in full
};

struct VerifyReport {
  Suite suite = Suite::all;
  unsigned depth = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  // Deterministic: depends only on the mathematical results, so repeated
  // runs are byte-identical.
  std::string to_text() const;
};

// Runs the selected suite to the given depth. `coeff_sign` feeds the
// coefficient-recursion agreement check only (regression use); the sign
// resolution protocol always evaluates both variants.
VerifyReport run_verify(Suite suite, unsigned depth, int coeff_sign = kCoeffSignResolved);

}  // namespace stirpoly
