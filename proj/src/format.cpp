#include <stirpoly/format.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace stirpoly {

using nlohmann::json;
using nlohmann::ordered_json;

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::text;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  if (name == "latex") return OutputFormat::latex;
  throw std::invalid_argument("unknown format \"" + name + "\" (expected csv, json, latex or text)");
}

// ---------------------------------------------------------------------------
// polynomials

std::string poly_to_text(const Poly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  const std::size_t deg = *p.degree();
  for (std::size_t e = deg + 1; e-- > 0;) {
    const Rational c = p.coefficient(e);
    if (c.is_zero()) continue;
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    const Rational mag = abs(c);
    if (e == 0) {
      out += mag.str();
    } else {
      if (!(mag == Rational(1))) out += mag.str() + "*";
      out += var;
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

namespace {

std::string latex_magnitude(const Rational& mag) {
  if (mag.is_integer()) return to_string(mag.numerator());
  return "\\frac{" + to_string(mag.numerator()) + "}{" + to_string(mag.denominator()) + "}";
}

std::string latex_power(const std::string& var, std::size_t e) {
  if (e == 1) return var;
  if (e < 10) return var + "^" + std::to_string(e);
  return var + "^{" + std::to_string(e) + "}";
}

std::string latex_subscript(unsigned k) {
  return k < 10 ? std::to_string(k) : "{" + std::to_string(k) + "}";
}

}  // namespace

std::string poly_to_latex(const Poly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  const std::size_t deg = *p.degree();
  for (std::size_t e = deg + 1; e-- > 0;) {
    const Rational c = p.coefficient(e);
    if (c.is_zero()) continue;
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? "-" : "+";
    }
    const Rational mag = abs(c);
    if (e == 0) {
      out += latex_magnitude(mag);
    } else {
      if (!(mag == Rational(1))) out += latex_magnitude(mag);
      out += latex_power(var, e);
    }
  }
  return out;
}

ordered_json poly_to_json(const Poly& p) {
  ordered_json coeffs = ordered_json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
  return ordered_json{{"coeffs", std::move(coeffs)}};
}

Poly poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw std::invalid_argument("polynomial JSON must be {\"coeffs\": [...]}");
  std::vector<Rational> coeffs;
  coeffs.reserve(j["coeffs"].size());
  for (const auto& c : j["coeffs"]) {
    if (!c.is_string()) throw std::invalid_argument("polynomial coefficients must be strings");
    coeffs.push_back(Rational::parse(c.get<std::string>()));
  }
  return Poly(std::move(coeffs));
}

// ---------------------------------------------------------------------------
// T triangle

TableDump table_dump(const StirlingTable& t) {
  TableDump d;
  d.max_n = t.max_n();
  d.rows.resize(d.max_n);
  for (unsigned n = 1; n <= d.max_n; ++n) {
    d.rows[n - 1].reserve(n);
    for (unsigned k = 1; k <= n; ++k) d.rows[n - 1].push_back(t.t_number(n, k));
  }
  return d;
}

std::string table_to_text(const StirlingTable& t) {
  const unsigned max_n = t.max_n();
  // Rectangular layout with explicit zeros right of the diagonal, one
  // right-aligned column per k.
  std::vector<std::vector<std::string>> cells(max_n, std::vector<std::string>(max_n));
  std::vector<std::size_t> width(max_n, 0);
  for (unsigned n = 1; n <= max_n; ++n)
    for (unsigned k = 1; k <= max_n; ++k) {
      cells[n - 1][k - 1] = to_string(t.t_number(n, k));
      width[k - 1] = std::max(width[k - 1], cells[n - 1][k - 1].size());
    }
  std::size_t label_width = 0;
  std::vector<std::string> labels(max_n);
  for (unsigned n = 1; n <= max_n; ++n) {
    labels[n - 1] = "T_{" + std::to_string(n) + ",k}:";
    label_width = std::max(label_width, labels[n - 1].size());
  }
  std::ostringstream os;
  for (unsigned n = 1; n <= max_n; ++n) {
    os << labels[n - 1] << std::string(label_width - labels[n - 1].size(), ' ');
    for (unsigned k = 1; k <= max_n; ++k) {
      const std::string& cell = cells[n - 1][k - 1];
      os << "  " << std::string(width[k - 1] - cell.size(), ' ') << cell;
    }
    os << "\n";
  }
  return os.str();
}

std::string table_to_csv(const StirlingTable& t) {
  std::ostringstream os;
  for (unsigned n = 1; n <= t.max_n(); ++n) {
    for (unsigned k = 1; k <= t.max_n(); ++k) {
      if (k > 1) os << ",";
      os << to_string(t.t_number(n, k));
    }
    os << "\n";
  }
  return os.str();
}

std::string table_to_latex(const StirlingTable& t) {
  const unsigned max_n = t.max_n();
  std::ostringstream os;
  os << "\\begin{array}{" << std::string(max_n + 2, 'c') << "}\n";
  for (unsigned n = 1; n <= max_n; ++n) {
    os << "T_{" << n << ",k}:&\\quad";
    for (unsigned k = 1; k <= max_n; ++k) os << "&" << to_string(t.t_number(n, k));
    if (n < max_n) os << "\\\\";
    os << "\n";
  }
  os << "\\end{array}\n";
  return os.str();
}

ordered_json table_to_json(const StirlingTable& t) {
  const TableDump d = table_dump(t);
  ordered_json rows = ordered_json::array();
  for (const auto& row : d.rows) {
    ordered_json r = ordered_json::array();
    for (const auto& v : row) r.push_back(to_string(v));
    rows.push_back(std::move(r));
  }
  return ordered_json{{"max_n", d.max_n}, {"rows", std::move(rows)}};
}

TableDump table_from_json(const json& j) {
  if (!j.is_object() || !j.contains("max_n") || !j.contains("rows") || !j["rows"].is_array())
    throw std::invalid_argument("table JSON must be {\"max_n\": N, \"rows\": [[...], ...]}");
  TableDump d;
  d.max_n = j["max_n"].get<unsigned>();
  if (d.max_n < 1 || j["rows"].size() != d.max_n)
    throw std::invalid_argument("table JSON: rows must hold max_n triangle rows");
  d.rows.resize(d.max_n);
  for (unsigned n = 1; n <= d.max_n; ++n) {
    const auto& row = j["rows"][n - 1];
    if (!row.is_array() || row.size() != n)
      throw std::invalid_argument("table JSON: row " + std::to_string(n) + " must have " +
                                  std::to_string(n) + " entries");
    for (const auto& v : row) {
      if (!v.is_string()) throw std::invalid_argument("table JSON: entries must be strings");
      d.rows[n - 1].emplace_back(v.get<std::string>());
    }
  }
  return d;
}

std::string render_table(const StirlingTable& t, OutputFormat f) {
  switch (f) {
    case OutputFormat::text: return table_to_text(t);
    case OutputFormat::csv: return table_to_csv(t);
    case OutputFormat::json: return table_to_json(t).dump(2) + "\n";
    case OutputFormat::latex: return table_to_latex(t);
  }
  throw std::invalid_argument("render_table: unknown format");
}

// ---------------------------------------------------------------------------
// P_k sequences

std::string provenance_name(PkProvenance p) {
  switch (p) {
    case PkProvenance::base: return "base";
    case PkProvenance::interpolated: return "interp";
    case PkProvenance::even_recursion: return "eq9";
    case PkProvenance::coeff_recursion: return "eq11";
  }
  throw std::invalid_argument("provenance_name: unknown provenance");
}

PkProvenance provenance_from_name(const std::string& name) {
  if (name == "base") return PkProvenance::base;
  if (name == "interp") return PkProvenance::interpolated;
  if (name == "eq9") return PkProvenance::even_recursion;
  if (name == "eq11") return PkProvenance::coeff_recursion;
  throw std::invalid_argument("unknown provenance \"" + name + "\"");
}

std::string pk_to_text(const PkSequence& seq) {
  std::ostringstream os;
  for (unsigned k = 0; k <= seq.max_k(); ++k)
    os << "P_" << k << "(n) = " << poly_to_text(seq.polys[k], "n") << "\n";
  return os.str();
}

std::string pk_to_csv(const PkSequence& seq) {
  std::ostringstream os;
  os << "k,method,coeffs\n";
  for (unsigned k = 0; k <= seq.max_k(); ++k) {
    os << k << "," << provenance_name(seq.provenance[k]) << ",";
    const auto& coeffs = seq.polys[k].coeffs();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (i > 0) os << " ";
      os << coeffs[i].str();
    }
    os << "\n";
  }
  return os.str();
}

std::string pk_to_latex(const PkSequence& seq) {
  std::ostringstream os;
  for (unsigned k = 0; k <= seq.max_k(); ++k)
    os << "P_" << latex_subscript(k) << "(n)=" << poly_to_latex(seq.polys[k], "n") << "\n";
  return os.str();
}

ordered_json pk_to_json(const PkSequence& seq) {
  ordered_json arr = ordered_json::array();
  for (unsigned k = 0; k <= seq.max_k(); ++k) {
    ordered_json entry;
    entry["k"] = k;
    entry["method"] = provenance_name(seq.provenance[k]);
    entry["coeffs"] = poly_to_json(seq.polys[k])["coeffs"];
    arr.push_back(std::move(entry));
  }
  return arr;
}

PkSequence pk_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("P_k JSON must be a non-empty array");
  PkSequence seq;
  seq.polys.reserve(j.size());
  seq.provenance.reserve(j.size());
  unsigned expected_k = 0;
  for (const auto& entry : j) {
    if (!entry.is_object() || !entry.contains("k") || !entry.contains("method") ||
        !entry.contains("coeffs"))
      throw std::invalid_argument("P_k JSON entries must have k, method and coeffs");
    if (entry["k"].get<unsigned>() != expected_k)
      throw std::invalid_argument("P_k JSON entries must be consecutive from k = 0");
    seq.provenance.push_back(provenance_from_name(entry["method"].get<std::string>()));
    seq.polys.push_back(poly_from_json(json{{"coeffs", entry["coeffs"]}}));
    ++expected_k;
  }
  return seq;
}

std::string render_pk(const PkSequence& seq, OutputFormat f) {
  switch (f) {
    case OutputFormat::text: return pk_to_text(seq);
    case OutputFormat::csv: return pk_to_csv(seq);
    case OutputFormat::json: return pk_to_json(seq).dump(2) + "\n";
    case OutputFormat::latex: return pk_to_latex(seq);
  }
  throw std::invalid_argument("render_pk: unknown format");
}

// ---------------------------------------------------------------------------
// Bernoulli numbers and polynomials

std::string bernoulli_to_text(const BernoulliCache& cache, unsigned max_m) {
  std::ostringstream os;
  for (unsigned m = 0; m <= max_m; ++m) os << "B_" << m << " = " << cache.number(m).str() << "\n";
  for (unsigned m = 0; m <= max_m; ++m)
    os << "B_" << m << "(x) = " << poly_to_text(cache.polynomial(m), "x") << "\n";
  return os.str();
}

std::string bernoulli_to_csv(const BernoulliCache& cache, unsigned max_m) {
  std::ostringstream os;
  os << "m,number,coeffs\n";
  for (unsigned m = 0; m <= max_m; ++m) {
    os << m << "," << cache.number(m).str() << ",";
    const auto coeffs = cache.polynomial(m).coeffs();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (i > 0) os << " ";
      os << coeffs[i].str();
    }
    os << "\n";
  }
  return os.str();
}

std::string bernoulli_to_latex(const BernoulliCache& cache, unsigned max_m) {
  std::ostringstream os;
  for (unsigned m = 0; m <= max_m; ++m) {
    const Rational b = cache.number(m);
    os << "B_" << latex_subscript(m) << "=" << (b.sign() < 0 ? "-" : "") << latex_magnitude(abs(b))
       << "\n";
  }
  for (unsigned m = 0; m <= max_m; ++m)
    os << "B_" << latex_subscript(m) << "(x)=" << poly_to_latex(cache.polynomial(m), "x") << "\n";
  return os.str();
}

ordered_json bernoulli_to_json(const BernoulliCache& cache, unsigned max_m) {
  ordered_json numbers = ordered_json::array();
  for (unsigned m = 0; m <= max_m; ++m) numbers.push_back(cache.number(m).str());
  ordered_json polys = ordered_json::array();
  for (unsigned m = 0; m <= max_m; ++m) {
    ordered_json entry;
    entry["m"] = m;
    entry["coeffs"] = poly_to_json(cache.polynomial(m))["coeffs"];
    polys.push_back(std::move(entry));
  }
  return ordered_json{{"numbers", std::move(numbers)}, {"polynomials", std::move(polys)}};
}

std::string render_bernoulli(const BernoulliCache& cache, unsigned max_m, OutputFormat f) {
  switch (f) {
    case OutputFormat::text: return bernoulli_to_text(cache, max_m);
    case OutputFormat::csv: return bernoulli_to_csv(cache, max_m);
    case OutputFormat::json: return bernoulli_to_json(cache, max_m).dump(2) + "\n";
    case OutputFormat::latex: return bernoulli_to_latex(cache, max_m);
  }
  throw std::invalid_argument("render_bernoulli: unknown format");
}

}  // namespace stirpoly
