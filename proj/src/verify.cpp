#include <stirpoly/verify.hpp>

#include <algorithm>
#include <array>
#include <sstream>

namespace stirpoly {

namespace {

// Built-in 7-row reference triangle used by the table suite and frozen
// into the acceptance tests.
constexpr unsigned long kReferenceTriangle[7][7] = {
    {1, 0, 0, 0, 0, 0, 0},
    {1, 1, 0, 0, 0, 0, 0},
    {1, 3, 2, 0, 0, 0, 0},
    {1, 6, 11, 6, 0, 0, 0},
    {1, 10, 35, 50, 24, 0, 0},
    {1, 15, 85, 225, 274, 120, 0},
    {1, 21, 175, 735, 1624, 1764, 720},
};

std::string range_m(unsigned depth) { return "m = 1.." + std::to_string(depth); }
std::string range_n(unsigned depth) { return "n = 1.." + std::to_string(depth); }

std::vector<CheckResult> check_table(unsigned depth) {
  std::vector<CheckResult> out;
  const StirlingTable t(depth);

  {
    CheckResult r{"table/reference-entries", true, ""};
    const unsigned rows = std::min(depth, 7u);
    unsigned verified = 0;
    for (unsigned n = 1; n <= rows && r.passed; ++n)
      for (unsigned k = 1; k <= 7 && r.passed; ++k) {
        const BigInt got = t.t_number(n, k);
        if (got != kReferenceTriangle[n - 1][k - 1]) {
          r.passed = false;
          r.detail = "first counterexample at (n,k) = (" + std::to_string(n) + "," +
                     std::to_string(k) + "): T = " + to_string(got) + ", reference = " +
                     std::to_string(kReferenceTriangle[n - 1][k - 1]);
        } else {
          ++verified;
        }
      }
    if (r.passed)
      r.detail = std::to_string(verified) + " entries of the 7-row reference triangle match";
    out.push_back(std::move(r));
  }

  {
    CheckResult r{"table/first-column", true, "T(n,1) = 1 for " + range_n(depth)};
    for (unsigned n = 1; n <= depth; ++n)
      if (t.t_number(n, 1) != 1) {
        r.passed = false;
        r.detail = "first counterexample at n = " + std::to_string(n) + ": T(n,1) = " +
                   to_string(t.t_number(n, 1)) + ", expected 1";
        break;
      }
    out.push_back(std::move(r));
  }

  {
    CheckResult r{"table/diagonal-factorial", true,
                  "T(n,n) = (n-1)! for " + range_n(depth)};
    for (unsigned n = 1; n <= depth; ++n)
      if (t.t_number(n, n) != factorial(n - 1)) {
        r.passed = false;
        r.detail = "first counterexample at n = " + std::to_string(n) + ": T(n,n) = " +
                   to_string(t.t_number(n, n)) + ", expected (n-1)! = " +
                   to_string(factorial(n - 1));
        break;
      }
    out.push_back(std::move(r));
  }

  {
    CheckResult r{"table/upper-zeros", true,
                  "T(n,k) = 0 for k > n, n <= " + std::to_string(depth)};
    for (unsigned n = 1; n <= depth && r.passed; ++n)
      for (unsigned k = n + 1; k <= n + 3; ++k)
        if (t.t_number(n, k) != 0) {
          r.passed = false;
          r.detail = "first counterexample at (n,k) = (" + std::to_string(n) + "," +
                     std::to_string(k) + "): T = " + to_string(t.t_number(n, k));
          break;
        }
    out.push_back(std::move(r));
  }

  {
    CheckResult r{"table/nonnegative", true,
                  "all T(n,k) >= 0 for n <= " + std::to_string(depth) +
                      " (the reindexing sign cancels exactly)"};
    for (unsigned n = 1; n <= depth && r.passed; ++n)
      for (unsigned k = 1; k <= n; ++k)
        if (t.t_number(n, k) < 0) {
          r.passed = false;
          r.detail = "first counterexample at (n,k) = (" + std::to_string(n) + "," +
                     std::to_string(k) + "): T = " + to_string(t.t_number(n, k));
          break;
        }
    out.push_back(std::move(r));
  }

  return out;
}

std::vector<CheckResult> check_rowsums(unsigned depth) {
  const StirlingTable t(depth);
  CheckResult r{"rowsums/factorial-match", true, "row sums equal n! for " + range_n(depth)};
  for (unsigned n = 1; n <= depth; ++n) {
    const BigInt sum = t.row_sum(n);
    const BigInt expected = factorial(n);
    if (sum != expected) {
      r.passed = false;
      r.detail = "first counterexample at n = " + std::to_string(n) + ": row sum = " +
                 to_string(sum) + ", n! = " + to_string(expected);
      break;
    }
  }
  return {r};
}

std::vector<CheckResult> check_constant_terms(unsigned depth) {
  const unsigned max_k = 2 * depth - 1;
  const StirlingTable table(2 * max_k + 2);
  const auto polys = interpolate_pk_range(table, max_k);
  const BernoulliCache cache;
  CheckResult r{"eq8/odd-constant-terms", true,
                "P_{2m-1}(0) = -(1/(2m)) 4^m B_{2m} for " + range_m(depth)};
  for (unsigned m = 1; m <= depth; ++m) {
    const Rational lhs = polys[2 * m - 1].eval(0);
    const Rational rhs = -(Rational(power(BigInt(4), m)) * cache.number(2 * m)) / Rational(2L * m);
    if (!(lhs == rhs)) {
      r.passed = false;
      r.detail = "first counterexample at m = " + std::to_string(m) + ": P_{2m-1}(0) = " +
                 lhs.str() + ", Bernoulli side = " + rhs.str();
      break;
    }
  }
  return {r};
}

// First ascending power where two polynomials differ; both exact values.
std::string describe_poly_diff(const Poly& a, const Poly& b, const char* a_name,
                               const char* b_name) {
  const std::size_t top = std::max(a.coeffs().size(), b.coeffs().size());
  for (std::size_t i = 0; i < top; ++i)
    if (!(a.coefficient(i) == b.coefficient(i)))
      return "coefficient of power " + std::to_string(i) + " differs: " + std::string(a_name) +
             " " + a.coefficient(i).str() + ", " + b_name + " " + b.coefficient(i).str();
  return "polynomials agree";
}

std::vector<CheckResult> check_even_recursion(unsigned depth) {
  const unsigned max_k = 2 * depth;
  const StirlingTable table(2 * max_k + 2);
  PkSequence oracle{interpolate_pk_range(table, max_k),
                    std::vector<PkProvenance>(max_k + 1, PkProvenance::interpolated)};
  CheckResult r{"eq9/even-recursion-vs-interpolation", true,
                "even-index recursion reproduces interpolation for " + range_m(depth)};
  for (unsigned m = 1; m <= depth; ++m) {
    const Poly got = pk_even_via_recursion(m, oracle);
    if (!(got == oracle.polys[2 * m])) {
      r.passed = false;
      r.detail = "first counterexample at m = " + std::to_string(m) + " (P_" +
                 std::to_string(2 * m) + "): " +
                 describe_poly_diff(got, oracle.polys[2 * m], "recursion", "interpolation");
      break;
    }
  }
  return {r};
}

std::vector<CheckResult> check_bernoulli_recursion(unsigned depth) {
  const BernoulliCache cache;
  CheckResult r{"eq10/bernoulli-odd-recursion", true,
                "recursion and binomial-formula B_{2m+1}(x) agree for " + range_m(depth)};
  for (unsigned m = 1; m <= depth; ++m) {
    const Poly got = bernoulli_odd_via_recursion(cache, m);
    const Poly expected = cache.polynomial(2 * m + 1);
    if (!(got == expected)) {
      r.passed = false;
      r.detail = "first counterexample at m = " + std::to_string(m) + " (B_" +
                 std::to_string(2 * m + 1) + "(x)): " +
                 describe_poly_diff(got, expected, "recursion", "binomial formula");
      break;
    }
  }
  return {r};
}

std::vector<CheckResult> check_coeff_recursion(unsigned depth, int coeff_sign) {
  const unsigned max_k = depth + 1;
  const StirlingTable table(2 * max_k + 2);
  PkSequence oracle{interpolate_pk_range(table, max_k),
                    std::vector<PkProvenance>(max_k + 1, PkProvenance::interpolated)};
  const BernoulliCache cache;

  // Sign resolution protocol: run both variants against the oracle and
  // require exactly one to match at every m.
  struct Variant {
    int sign;
    const char* label;
    bool all_match = true;
    unsigned first_fail = 0;
  };
  std::array<Variant, 2> variants{Variant{kCoeffSignAsPrinted, "as-printed"},
                                  Variant{kCoeffSignFlipped, "flipped"}};
  for (auto& v : variants)
    for (unsigned m = 1; m <= depth; ++m)
      if (!(pk_next_via_bernoulli_coeffs(m, oracle, cache, v.sign) == oracle.polys[m + 1])) {
        v.all_match = false;
        v.first_fail = m;
        break;
      }

  std::vector<CheckResult> out;
  {
    CheckResult r{"eq11/sign-resolution", false, ""};
    const auto describe = [](const Variant& v) {
      std::string s = std::string(v.label) + " (" + (v.sign > 0 ? "+1" : "-1") + ") ";
      s += v.all_match ? "matches for all m"
                       : "fails first at m = " + std::to_string(v.first_fail);
      return s;
    };
    const int matching = (variants[0].all_match ? 1 : 0) + (variants[1].all_match ? 1 : 0);
    if (matching == 1) {
      const Variant& winner = variants[0].all_match ? variants[0] : variants[1];
      const Variant& loser = variants[0].all_match ? variants[1] : variants[0];
      r.passed = true;
      r.detail = "exactly one sign reproduces interpolation for " + range_m(depth) +
                 ": winner " + describe(winner) + "; " + describe(loser);
    } else {
      r.detail = "expected exactly one matching sign, found " + std::to_string(matching) + ": " +
                 describe(variants[0]) + "; " + describe(variants[1]);
    }
    out.push_back(std::move(r));
  }

  {
    const char* label = coeff_sign == kCoeffSignAsPrinted ? "as-printed (+1)" : "flipped (-1)";
    CheckResult r{"eq11/selected-sign-agreement", true,
                  std::string("coefficient recursion with the ") + label +
                      " sign matches interpolation for " + range_m(depth)};
    for (unsigned m = 1; m <= depth; ++m) {
      const Poly got = pk_next_via_bernoulli_coeffs(m, oracle, cache, coeff_sign);
      if (!(got == oracle.polys[m + 1])) {
        r.passed = false;
        r.detail = std::string("sign ") + label + ": first counterexample at m = " +
                   std::to_string(m) + " (P_" + std::to_string(m + 1) + "): " +
                   describe_poly_diff(got, oracle.polys[m + 1], "recursion", "interpolation");
        break;
      }
    }
    out.push_back(std::move(r));
  }

  return out;
}

void append(std::vector<CheckResult>& to, std::vector<CheckResult> from) {
  for (auto& r : from) to.push_back(std::move(r));
}

}  // namespace

Suite parse_suite(const std::string& name) {
  if (name == "table") return Suite::table;
  if (name == "rowsums") return Suite::rowsums;
  if (name == "eq8") return Suite::eq8;
  if (name == "eq9") return Suite::eq9;
  if (name == "eq10") return Suite::eq10;
  if (name == "eq11") return Suite::eq11;
  if (name == "all") return Suite::all;
  throw std::invalid_argument("unknown suite \"" + name +
                              "\" (expected table, rowsums, eq8, eq9, eq10, eq11 or all)");
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::table: return "table";
    case Suite::rowsums: return "rowsums";
    case Suite::eq8: return "eq8";
    case Suite::eq9: return "eq9";
    case Suite::eq10: return "eq10";
    case Suite::eq11: return "eq11";
    case Suite::all: return "all";
  }
  throw std::invalid_argument("suite_name: unknown suite");
}

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& r) { return r.passed; });
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  os << "verify " << suite_name(suite) << " (depth " << depth << ")\n";
  unsigned failed = 0;
  for (const auto& r : checks) {
    os << (r.passed ? "PASS" : "FAIL") << "  " << r.name << ": " << r.detail << "\n";
    if (!r.passed) ++failed;
  }
  if (failed == 0)
    os << "result: PASS (" << checks.size() << " checks)\n";
  else
    os << "result: FAIL (" << failed << " of " << checks.size() << " checks failed)\n";
  return os.str();
}

VerifyReport run_verify(Suite suite, unsigned depth, int coeff_sign) {
  if (depth < 1) throw std::invalid_argument("run_verify: depth must be >= 1");
  VerifyReport report;
  report.suite = suite;
  report.depth = depth;
  switch (suite) {
    case Suite::table: report.checks = check_table(depth); break;
    case Suite::rowsums: report.checks = check_rowsums(depth); break;
    case Suite::eq8: report.checks = check_constant_terms(depth); break;
    case Suite::eq9: report.checks = check_even_recursion(depth); break;
    case Suite::eq10: report.checks = check_bernoulli_recursion(depth); break;
    case Suite::eq11: report.checks = check_coeff_recursion(depth, coeff_sign); break;
    case Suite::all:
      append(report.checks, check_table(depth));
      append(report.checks, check_rowsums(depth));
      append(report.checks, check_constant_terms(depth));
      append(report.checks, check_even_recursion(depth));
      append(report.checks, check_bernoulli_recursion(depth));
      append(report.checks, check_coeff_recursion(depth, coeff_sign));
      break;
  }
  return report;
}

}  // namespace stirpoly
