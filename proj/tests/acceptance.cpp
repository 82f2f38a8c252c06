// Acceptance suite: runs every acceptance criterion at its stated
// tolerance (exact rational equality throughout) and prints one pass/fail
// line per criterion. Exits nonzero if any criterion fails.
//
// Usage: acceptance <path-to-cli-binary>

#include <stirpoly/format.hpp>
#include <stirpoly/pk.hpp>
#include <stirpoly/verify.hpp>

#include "reference_data.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

using stirpoly::BernoulliCache;
using stirpoly::BigInt;
using stirpoly::PkProvenance;
using stirpoly::PkSequence;
using stirpoly::Poly;
using stirpoly::Rational;
using stirpoly::StirlingTable;

namespace {

std::string g_cli;
int g_failed = 0;

void report(int criterion, const std::string& name, bool passed, const std::string& detail) {
  std::printf("%s  criterion %2d: %s%s%s\n", passed ? "PASS" : "FAIL", criterion, name.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!passed) ++g_failed;
}

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  RunResult r;
  const std::string command = "\"" + g_cli + "\" " + args;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

Poly reference_pk(unsigned k) {
  std::vector<Rational> coeffs;
  for (const char* c : testdata::kReferencePk[k]) coeffs.push_back(Rational::parse(c));
  return Poly(std::move(coeffs));
}

PkSequence oracle_sequence(unsigned max_k) {
  const StirlingTable table(2 * max_k + 2);
  return PkSequence{stirpoly::interpolate_pk_range(table, max_k),
                    std::vector<PkProvenance>(max_k + 1, PkProvenance::interpolated)};
}

// 1. The T triangle reproduces the 49 reference entries exactly and the
//    CLI table suite passes at depth 7, in under a second.
void criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  const StirlingTable t(7);
  bool entries_ok = true;
  for (unsigned n = 1; n <= 7 && entries_ok; ++n)
    for (unsigned k = 1; k <= 7 && entries_ok; ++k)
      entries_ok = t.t_number(n, k) == testdata::kT7[n - 1][k - 1];
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const auto cli = run("verify table --depth 7 >/dev/null 2>&1");
  const bool ok = entries_ok && cli.exit_code == 0 && seconds < 1.0;
  report(1, "table reproduction (49 entries, exact; verify table exits 0)", ok,
         entries_ok ? (cli.exit_code == 0 ? "" : "verify table exit code " +
                                                     std::to_string(cli.exit_code))
                    : "entry mismatch");
}

// 2. Interpolated P_0 .. P_10 match the reference family coefficient for
//    coefficient.
void criterion_2() {
  const StirlingTable table(24);
  bool ok = true;
  std::string detail;
  for (unsigned j = 0; j <= 10 && ok; ++j) {
    const Poly got = stirpoly::pk_from_stirling(j, table);
    if (!(got == reference_pk(j))) {
      ok = false;
      detail = "mismatch at P_" + std::to_string(j);
    }
  }
  if (ok) {
    ok = stirpoly::pk_from_stirling(7, table).coefficient(1) == Rational(404, 135) &&
         stirpoly::pk_from_stirling(10, table).coefficient(0) == Rational(0);
    if (!ok) detail = "spot values (P_7 linear, P_10 constant) mismatch";
  }
  report(2, "polynomial reproduction P_0..P_10 (exact coefficients)", ok, detail);
}

// 3. Odd-index constant terms match the Bernoulli side for m = 1..20,
//    including the five spot values.
void criterion_3() {
  const auto seq = oracle_sequence(39);
  const BernoulliCache cache;
  bool ok = true;
  std::string detail;
  for (unsigned m = 1; m <= 20 && ok; ++m) {
    if (!stirpoly::check_odd_constant_term(m, seq, cache)) {
      ok = false;
      detail = "identity fails at m = " + std::to_string(m);
    }
  }
  for (unsigned m = 1; m <= 5 && ok; ++m) {
    const Rational expected = Rational::parse(testdata::kOddConstants[m - 1]);
    const Rational lhs = seq.polys[2 * m - 1].eval(0);
    const Rational rhs =
        -(Rational(stirpoly::power(BigInt(4), m)) * cache.number(2 * m)) / Rational(2L * m);
    if (!(lhs == expected && rhs == expected)) {
      ok = false;
      detail = "spot value mismatch at m = " + std::to_string(m) + ": lhs " + lhs.str() +
               ", rhs " + rhs.str() + ", expected " + expected.str();
    }
  }
  report(3, "odd constant terms vs Bernoulli numbers, m = 1..20 (exact)", ok, detail);
}

// 4. The even-index recursion equals the interpolation oracle for
//    m = 1..15 as polynomials.
void criterion_4() {
  const auto seq = oracle_sequence(30);
  bool ok = true;
  std::string detail;
  for (unsigned m = 1; m <= 15 && ok; ++m)
    if (!(stirpoly::pk_even_via_recursion(m, seq) == seq.polys[2 * m])) {
      ok = false;
      detail = "mismatch at m = " + std::to_string(m);
    }
  report(4, "even-index recursion vs interpolation, m = 1..15 (exact)", ok, detail);
}

// 5. The odd Bernoulli-polynomial recursion equals the binomial-formula
//    construction for m = 1..15.
void criterion_5() {
  const BernoulliCache cache;
  bool ok = true;
  std::string detail;
  for (unsigned m = 1; m <= 15 && ok; ++m)
    if (!(stirpoly::bernoulli_odd_via_recursion(cache, m) == cache.polynomial(2 * m + 1))) {
      ok = false;
      detail = "mismatch at m = " + std::to_string(m);
    }
  report(5, "Bernoulli odd-polynomial recursion, m = 1..15 (exact)", ok, detail);
}

// 6. The sign-resolution protocol: exactly one sign variant of the
//    coefficient recursion matches the oracle for all m = 1..15, and the
//    winner is recorded.
void criterion_6() {
  const auto seq = oracle_sequence(16);
  const BernoulliCache cache;
  auto matches_through = [&](int sign) -> unsigned {
    for (unsigned m = 1; m <= 15; ++m)
      if (!(stirpoly::pk_next_via_bernoulli_coeffs(m, seq, cache, sign) == seq.polys[m + 1]))
        return m - 1;
    return 15;
  };
  const unsigned printed = matches_through(stirpoly::kCoeffSignAsPrinted);
  const unsigned flipped = matches_through(stirpoly::kCoeffSignFlipped);
  const bool exactly_one = (printed == 15) != (flipped == 15);
  const bool resolved_is_winner =
      (flipped == 15 && stirpoly::kCoeffSignResolved == stirpoly::kCoeffSignFlipped) ||
      (printed == 15 && stirpoly::kCoeffSignResolved == stirpoly::kCoeffSignAsPrinted);
  std::string detail;
  if (flipped == 15)
    detail = "winner: flipped (-1); as-printed (+1) fails first at m = " +
             std::to_string(printed + 1);
  else if (printed == 15)
    detail = "winner: as-printed (+1); flipped (-1) fails first at m = " +
             std::to_string(flipped + 1);
  else
    detail = "no sign matches through m = 15";
  report(6, "coefficient-recursion sign resolution, m = 1..15", exactly_one && resolved_is_winner,
         detail);
}

// 7. Row sums equal n! exactly for n = 1..50.
void criterion_7() {
  const StirlingTable t(50);
  bool ok = true;
  std::string detail;
  for (unsigned n = 1; n <= 50 && ok; ++n)
    if (t.row_sum(n) != stirpoly::factorial(n)) {
      ok = false;
      detail = "mismatch at n = " + std::to_string(n);
    }
  report(7, "row sums equal n! for n = 1..50 (exact)", ok, detail);
}

// 8. reconstruct_t is integral and equals t_number for all
//    1 <= k <= n <= 17 with K = 15.
void criterion_8() {
  const auto seq = oracle_sequence(15);
  const StirlingTable t(17);
  bool ok = true;
  std::string detail;
  try {
    for (unsigned n = 1; n <= 17 && ok; ++n)
      for (unsigned k = 1; k <= n && ok; ++k)
        if (stirpoly::reconstruct_t(n, k, seq) != t.t_number(n, k)) {
          ok = false;
          detail = "mismatch at (n,k) = (" + std::to_string(n) + "," + std::to_string(k) + ")";
        }
  } catch (const stirpoly::consistency_error& e) {
    ok = false;
    detail = e.what();
  }
  report(8, "integrality round trip, 1 <= k <= n <= 17 with K = 15", ok, detail);
}

// 9. Interpolating from shifted nodes reproduces identical polynomials
//    for j <= 12.
void criterion_9() {
  const StirlingTable table(27);
  bool ok = true;
  std::string detail;
  for (unsigned j = 0; j <= 12 && ok; ++j)
    if (!(stirpoly::pk_from_stirling_at(j, table, j + 3) == stirpoly::pk_from_stirling(j, table))) {
      ok = false;
      detail = "shifted nodes disagree at j = " + std::to_string(j);
    }
  report(9, "node-shift independence, j <= 12", ok, detail);
}

// 10. Two CLI verification runs over every suite are byte-identical and
//     both exit 0.
void criterion_10() {
  const auto a = run("verify all --depth 15 2>/dev/null");
  const auto b = run("verify all --depth 15 2>/dev/null");
  const bool ok = a.exit_code == 0 && b.exit_code == 0 && !a.output.empty() && a.output == b.output;
  std::string detail;
  if (a.exit_code != 0 || b.exit_code != 0)
    detail = "exit codes " + std::to_string(a.exit_code) + ", " + std::to_string(b.exit_code);
  else if (a.output != b.output)
    detail = "reports differ between runs";
  report(10, "determinism: verify all --depth 15 twice, byte-identical, exit 0", ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <cli-binary>\n";
    return 2;
  }
  g_cli = argv[1];

  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();

  if (g_failed == 0) {
    std::printf("acceptance: all 10 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", g_failed);
  return 1;
}
