// Command-line front end: T-triangle generation, P_k derivation,
// Bernoulli dumps, and the identity verification suites.
//
// Exit codes: 0 = success / all checks pass, 1 = verification or
// cross-check failure, 2 = usage error.

#include <stirpoly/format.hpp>
#include <stirpoly/verify.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

// Writes to the path when given, standard output otherwise.
bool write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open output file \"" << out_path << "\"\n";
    return false;
  }
  f << text;
  return static_cast<bool>(f);
}

struct Options {
  unsigned max_n = 7;
  unsigned max_k = 10;
  unsigned max_m = 15;
  unsigned depth = 0;  // 0 = suite default
  std::string format = "text";
  std::string method = "interp";
  std::string suite = "all";
  std::string out_path;
  int eq11_sign = stirpoly::kCoeffSignResolved;
};

int run_stirling(const Options& opt) {
  const stirpoly::StirlingTable table(opt.max_n);
  const std::string text = stirpoly::render_table(table, stirpoly::parse_format(opt.format));
  return write_output(text, opt.out_path) ? kExitOk : kExitUsage;
}

stirpoly::PkMethod parse_method(const std::string& name) {
  if (name == "interp") return stirpoly::PkMethod::interp;
  if (name == "recursion") return stirpoly::PkMethod::recursion;
  if (name == "cross-check-all") return stirpoly::PkMethod::cross_check_all;
  throw std::invalid_argument("unknown method \"" + name +
                              "\" (expected interp, recursion or cross-check-all)");
}

int run_pk(const Options& opt) {
  stirpoly::PkSequence seq;
  try {
    seq = stirpoly::build_pk_sequence(opt.max_k, parse_method(opt.method), opt.eq11_sign);
  } catch (const stirpoly::consistency_error& e) {
    std::cerr << "cross-check failure: " << e.what() << "\n";
    return kExitVerifyFailure;
  }
  const std::string text = stirpoly::render_pk(seq, stirpoly::parse_format(opt.format));
  return write_output(text, opt.out_path) ? kExitOk : kExitUsage;
}

int run_bernoulli(const Options& opt) {
  const stirpoly::BernoulliCache cache;
  const std::string text =
      stirpoly::render_bernoulli(cache, opt.max_m, stirpoly::parse_format(opt.format));
  return write_output(text, opt.out_path) ? kExitOk : kExitUsage;
}

int run_verify(const Options& opt) {
  const stirpoly::Suite suite = stirpoly::parse_suite(opt.suite);
  // Default depths: 7 for the table suite, 15 for the identity suites.
  unsigned depth = opt.depth;
  if (depth == 0) depth = suite == stirpoly::Suite::table ? 7 : 15;
  const stirpoly::VerifyReport report = stirpoly::run_verify(suite, depth, opt.eq11_sign);
  if (!write_output(report.to_text(), opt.out_path)) return kExitUsage;
  return report.all_passed() ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Stirling-triangle and Bernoulli-like polynomial toolkit"};
  app.require_subcommand(1);

  Options opt;

  auto* stirling = app.add_subcommand("stirling", "emit the T triangle");
  stirling->add_option("--max-n", opt.max_n, "number of rows")
      ->required()
      ->check(CLI::PositiveNumber);
  stirling->add_option("--format", opt.format, "csv, json, latex or text")
      ->check(CLI::IsMember({"csv", "json", "latex", "text"}));
  stirling->add_option("--out", opt.out_path, "output file (default: stdout)");

  auto* pk = app.add_subcommand("pk", "derive the polynomials P_0 .. P_K");
  pk->add_option("--max-k", opt.max_k, "largest index K")->required();
  pk->add_option("--method", opt.method,
                 "interp (interpolation oracle), recursion, or cross-check-all")
      ->check(CLI::IsMember({"interp", "recursion", "cross-check-all"}));
  pk->add_option("--format", opt.format, "csv, json, latex or text")
      ->check(CLI::IsMember({"csv", "json", "latex", "text"}));
  pk->add_option("--out", opt.out_path, "output file (default: stdout)");
  pk->add_option("--eq11-sign", opt.eq11_sign,
                 "sign variant for the coefficient recursion, +1 or -1 (regression/debug)")
      ->check(CLI::IsMember({1, -1}));

  auto* verify = app.add_subcommand("verify", "run identity verification suites");
  verify->add_option("suite", opt.suite, "table, rowsums, eq8, eq9, eq10, eq11 or all")
      ->check(CLI::IsMember({"table", "rowsums", "eq8", "eq9", "eq10", "eq11", "all"}));
  verify->add_option("--depth", opt.depth, "verification depth (default: table 7, identities 15)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--out", opt.out_path, "output file (default: stdout)");
  verify->add_option("--eq11-sign", opt.eq11_sign,
                     "sign variant fed to the agreement check, +1 or -1 (regression/debug)")
      ->check(CLI::IsMember({1, -1}));

  auto* bernoulli = app.add_subcommand("bernoulli", "emit Bernoulli numbers and polynomials");
  bernoulli->add_option("--max-m", opt.max_m, "largest index m")->required();
  bernoulli->add_option("--format", opt.format, "csv, json, latex or text")
      ->check(CLI::IsMember({"csv", "json", "latex", "text"}));
  bernoulli->add_option("--out", opt.out_path, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (stirling->parsed()) return run_stirling(opt);
    if (pk->parsed()) return run_pk(opt);
    if (verify->parsed()) return run_verify(opt);
    if (bernoulli->parsed()) return run_bernoulli(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailure;
  }
  return kExitUsage;
}
