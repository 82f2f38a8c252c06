#include <stirpoly/rational.hpp>

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace stirpoly {

Rational::Rational(const BigInt& num, const BigInt& den) { init(num, den); }

Rational::Rational(long num, long den) { init(BigInt(num), BigInt(den)); }

void Rational::init(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
  check();
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  r.check();
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  check();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  check();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  check();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  check();
  return *this;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  const int c = mpq_cmp(v_.get_mpq_t(), o.v_.get_mpq_t());
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::parse(const std::string& text) {
  // -?digits(/digits)?  -- no spaces, no leading '+'
  const auto bad = [&] {
    throw std::invalid_argument("Rational: cannot parse \"" + text + "\"");
  };
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  const std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) bad();
  const std::string num_part = text.substr(0, i);
  std::string den_part = "1";
  if (i < text.size()) {
    if (text[i] != '/') bad();
    ++i;
    const std::size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin || i != text.size()) bad();
    den_part = text.substr(den_begin);
  }
  return Rational(BigInt(num_part), BigInt(den_part));
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace stirpoly
