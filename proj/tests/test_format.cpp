#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stirpoly/format.hpp>

#include <random>

using nlohmann::json;
using stirpoly::BernoulliCache;
using stirpoly::OutputFormat;
using stirpoly::PkMethod;
using stirpoly::Poly;
using stirpoly::Rational;
using stirpoly::StirlingTable;

namespace {

Poly make(std::vector<Rational> ascending) { return Poly(std::move(ascending)); }

}  // namespace

TEST_CASE("format names") {
  CHECK(stirpoly::parse_format("csv") == OutputFormat::csv);
  CHECK(stirpoly::parse_format("text") == OutputFormat::text);
  CHECK_THROWS_AS(stirpoly::parse_format("xml"), std::invalid_argument);
}

TEST_CASE("canonical polynomial text") {
  const Poly p3 = make({Rational(2, 15), Rational(1, 3), -2, 1});
  CHECK(stirpoly::poly_to_text(p3, "n") == "n^3 - 2*n^2 + 1/3*n + 2/15");
  CHECK(stirpoly::poly_to_text(make({Rational(-1, 3), 1}), "n") == "n - 1/3");
  CHECK(stirpoly::poly_to_text(Poly{}, "n") == "0");
  CHECK(stirpoly::poly_to_text(Poly::constant(Rational(2, 15)), "n") == "2/15");
  CHECK(stirpoly::poly_to_text(make({0, Rational(1, 2), Rational(-3, 2), 1}), "x") ==
        "x^3 - 3/2*x^2 + 1/2*x");
  CHECK(stirpoly::poly_to_text(make({2, -1}), "n") == "-n + 2");
  CHECK(stirpoly::poly_to_text(Poly::variable(), "n") == "n");
  CHECK(stirpoly::poly_to_text(Poly::monomial(1, 11), "n") == "n^11");
}

TEST_CASE("latex polynomial form") {
  const Poly p3 = make({Rational(2, 15), Rational(1, 3), -2, 1});
  CHECK(stirpoly::poly_to_latex(p3, "n") == "n^3-2n^2+\\frac{1}{3}n+\\frac{2}{15}");
  CHECK(stirpoly::poly_to_latex(Poly::monomial(1, 10), "n") == "n^{10}");
  CHECK(stirpoly::poly_to_latex(make({Rational(-1, 3), 1}), "n") == "n-\\frac{1}{3}");
  CHECK(stirpoly::poly_to_latex(Poly{}, "n") == "0");
}

TEST_CASE("polynomial JSON round trip") {
  const Poly p3 = make({Rational(2, 15), Rational(1, 3), -2, 1});
  CHECK(stirpoly::poly_to_json(p3).dump() == R"({"coeffs":["2/15","1/3","-2","1"]})");
  CHECK(stirpoly::poly_from_json(json::parse(stirpoly::poly_to_json(p3).dump())) == p3);

  std::mt19937 rng(5);
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(1, 30);
  std::uniform_int_distribution<std::size_t> deg(0, 12);
  for (int iter = 0; iter < 100; ++iter) {
    std::vector<Rational> coeffs(deg(rng) + 1);
    for (auto& c : coeffs) c = Rational(num(rng), den(rng));
    const Poly p(std::move(coeffs));
    CHECK(stirpoly::poly_from_json(json::parse(stirpoly::poly_to_json(p).dump())) == p);
  }

  CHECK_THROWS_AS(stirpoly::poly_from_json(json::parse(R"({"coeffs":[1,2]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(stirpoly::poly_from_json(json::parse(R"(["1"])")), std::invalid_argument);
}

TEST_CASE("table renderings") {
  const StirlingTable t1(1);
  CHECK(stirpoly::table_to_csv(t1) == "1\n");

  const StirlingTable t7(7);
  const std::string text = stirpoly::table_to_text(t7);
  CHECK(text.find("T_{7,k}:") != std::string::npos);
  CHECK(text.find("1624") != std::string::npos);
  CHECK(text == stirpoly::table_to_text(t7));  // deterministic

  const std::string csv = stirpoly::table_to_csv(t7);
  CHECK(csv.find("1,21,175,735,1624,1764,720\n") != std::string::npos);

  const std::string latex = stirpoly::table_to_latex(t7);
  CHECK(latex.find("\\begin{array}{ccccccccc}") == 0);
  CHECK(latex.find("T_{4,k}:&\\quad&1&6&11&6&0&0&0\\\\") != std::string::npos);
}

TEST_CASE("table JSON round trip") {
  const StirlingTable t(9);
  const auto emitted = stirpoly::table_to_json(t);
  CHECK(stirpoly::table_from_json(json::parse(emitted.dump())) == stirpoly::table_dump(t));
  CHECK_THROWS_AS(stirpoly::table_from_json(json::parse(R"({"max_n":2,"rows":[["1"]]})")),
                  std::invalid_argument);
}

TEST_CASE("pk renderings and JSON round trip") {
  const auto seq = stirpoly::build_pk_sequence(3, PkMethod::interp);

  CHECK(stirpoly::pk_to_text(seq) ==
        "P_0(n) = 1\n"
        "P_1(n) = n - 1/3\n"
        "P_2(n) = n^2 - n\n"
        "P_3(n) = n^3 - 2*n^2 + 1/3*n + 2/15\n");

  const auto j = stirpoly::pk_to_json(seq);
  CHECK(j[3].dump() == R"({"k":3,"method":"interp","coeffs":["2/15","1/3","-2","1"]})");
  CHECK(stirpoly::pk_from_json(json::parse(j.dump())) == seq);

  const std::string csv = stirpoly::pk_to_csv(seq);
  CHECK(csv.find("k,method,coeffs\n") == 0);
  CHECK(csv.find("3,interp,2/15 1/3 -2 1\n") != std::string::npos);

  const std::string latex = stirpoly::pk_to_latex(seq);
  CHECK(latex.find("P_3(n)=n^3-2n^2+\\frac{1}{3}n+\\frac{2}{15}") != std::string::npos);

  const auto rec = stirpoly::build_pk_sequence(4, PkMethod::recursion);
  CHECK(stirpoly::pk_from_json(json::parse(stirpoly::pk_to_json(rec).dump())) == rec);
  CHECK(stirpoly::pk_to_csv(rec).find("2,eq9,") != std::string::npos);
  CHECK(stirpoly::pk_to_csv(rec).find("3,eq11,") != std::string::npos);
  CHECK(stirpoly::pk_to_csv(rec).find("0,base,") != std::string::npos);
}

TEST_CASE("bernoulli renderings") {
  const BernoulliCache cache;
  const std::string text = stirpoly::bernoulli_to_text(cache, 3);
  CHECK(text.find("B_0 = 1\n") != std::string::npos);
  CHECK(text.find("B_2 = 1/6\n") != std::string::npos);
  CHECK(text.find("B_3(x) = x^3 - 3/2*x^2 + 1/2*x\n") != std::string::npos);

  const auto j = stirpoly::bernoulli_to_json(cache, 4);
  CHECK(j["numbers"][2] == "1/6");
  CHECK(j["polynomials"][2]["coeffs"][0] == "1/6");

  const std::string csv = stirpoly::bernoulli_to_csv(cache, 2);
  CHECK(csv == "m,number,coeffs\n0,1,1\n1,-1/2,-1/2 1\n2,1/6,1/6 -1 1\n");

  const std::string latex = stirpoly::bernoulli_to_latex(cache, 2);
  CHECK(latex.find("B_1=-\\frac{1}{2}") != std::string::npos);
  CHECK(latex.find("B_2(x)=x^2-x+\\frac{1}{6}") != std::string::npos);
}
