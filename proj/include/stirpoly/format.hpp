#pragma once

#include <stirpoly/bernoulli.hpp>
#include <stirpoly/pk.hpp>
#include <stirpoly/stirling.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace stirpoly {

enum class OutputFormat { text, csv, json, latex };

OutputFormat parse_format(const std::string& name);  // throws std::invalid_argument

// Canonical text form, descending powers: "n^3 - 2*n^2 + 1/3*n + 2/15".
// Unit coefficients are omitted before the variable; the zero polynomial
// renders as "0".
std::string poly_to_text(const Poly& p, const std::string& var);

// Same ordering in display-math style: "n^3-2n^2+\frac{1}{3}n+\frac{2}{15}".
std::string poly_to_latex(const Poly& p, const std::string& var);

// {"coeffs": ["2/15", "1/3", "-2", "1"]}, ascending powers.
nlohmann::ordered_json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

// The T triangle as plain values, for JSON round trips. rows[n-1] holds
// T_{n,1} .. T_{n,n}.
struct TableDump {
  unsigned max_n = 0;
  std::vector<std::vector<BigInt>> rows;

  bool operator==(const TableDump& o) const = default;
};

TableDump table_dump(const StirlingTable& t);
std::string table_to_text(const StirlingTable& t);
std::string table_to_csv(const StirlingTable& t);
std::string table_to_latex(const StirlingTable& t);
nlohmann::ordered_json table_to_json(const StirlingTable& t);
TableDump table_from_json(const nlohmann::json& j);
std::string render_table(const StirlingTable& t, OutputFormat f);

std::string provenance_name(PkProvenance p);
PkProvenance provenance_from_name(const std::string& name);

std::string pk_to_text(const PkSequence& seq);
std::string pk_to_csv(const PkSequence& seq);
std::string pk_to_latex(const PkSequence& seq);
// [{"k": 0, "method": "interp", "coeffs": ["1"]}, ...]
nlohmann::ordered_json pk_to_json(const PkSequence& seq);
PkSequence pk_from_json(const nlohmann::json& j);
std::string render_pk(const PkSequence& seq, OutputFormat f);

std::string bernoulli_to_text(const BernoulliCache& cache, unsigned max_m);
std::string bernoulli_to_csv(const BernoulliCache& cache, unsigned max_m);
std::string bernoulli_to_latex(const BernoulliCache& cache, unsigned max_m);
nlohmann::ordered_json bernoulli_to_json(const BernoulliCache& cache, unsigned max_m);
std::string render_bernoulli(const BernoulliCache& cache, unsigned max_m, OutputFormat f);

}  // namespace stirpoly
