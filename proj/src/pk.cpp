#include <stirpoly/pk.hpp>

#include <algorithm>
#include <exception>
#include <sstream>
#include <stdexcept>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace stirpoly {

namespace {

// First ascending power at which two polynomials differ, with both values.
struct CoeffDiff {
  std::size_t power = 0;
  Rational lhs, rhs;
};

CoeffDiff first_coeff_diff(const Poly& a, const Poly& b) {
  const std::size_t top =
      std::max(a.coeffs().size(), b.coeffs().size());
  for (std::size_t i = 0; i < top; ++i)
    if (!(a.coefficient(i) == b.coefficient(i))) return {i, a.coefficient(i), b.coefficient(i)};
  return {};
}

[[noreturn]] void throw_cross_check_mismatch(unsigned k, const char* method_a,
                                             const char* method_b, const Poly& a,
                                             const Poly& b) {
  const CoeffDiff d = first_coeff_diff(a, b);
  std::ostringstream os;
  os << "cross-check mismatch for P_" << k << ": " << method_a << " vs " << method_b
     << " first differ at power " << d.power << ": " << d.lhs.str() << " vs " << d.rhs.str();
  throw consistency_error(os.str());
}

}  // namespace

const Poly& PkSequence::at(unsigned k) const {
  if (k >= polys.size())
    throw std::out_of_range("PkSequence: index " + std::to_string(k) + " not present (max " +
                            std::to_string(polys.size() - 1) + ")");
  return polys[k];
}

Poly pk_from_stirling_at(unsigned j, const StirlingTable& t, unsigned first_node) {
  if (first_node < j + 2)
    throw std::invalid_argument("pk_from_stirling: sample nodes must start at n >= j + 2");
  const unsigned last_node = first_node + j;
  if (t.max_n() < last_node)
    throw std::invalid_argument("pk_from_stirling: table too small (need max_n >= " +
                                std::to_string(last_node) + ", have " +
                                std::to_string(t.max_n()) + ")");

  // Sample ordinates are exact rationals; integrality is never assumed
  // mid-computation.
  const BigInt scale = power(BigInt(2), j + 1) * factorial(j + 1);
  std::vector<std::pair<Rational, Rational>> points;
  points.reserve(j + 1);
  for (unsigned n = first_node; n <= last_node; ++n) {
    const Rational y(t.t_number(n, j + 2) * scale, falling_factorial(BigInt(n), j + 2));
    points.emplace_back(Rational(static_cast<long>(n)), y);
  }
  Poly p = interpolate(points);
  if (p.degree() != std::optional<std::size_t>(j) || !(p.leading() == Rational(1))) {
    std::ostringstream os;
    os << "pk_from_stirling: interpolated P_" << j << " is not monic of degree " << j
       << " (a broken table or a misread column convention)";
    throw consistency_error(os.str());
  }
  return p;
}

Poly pk_from_stirling(unsigned j, const StirlingTable& t) {
  return pk_from_stirling_at(j, t, j + 2);
}

Poly pk_even_via_recursion(unsigned m, const PkSequence& seq) {
  if (m < 1) throw std::invalid_argument("pk_even_via_recursion: m must be >= 1");
  if (seq.max_k() < 2 * m - 1)
    throw std::invalid_argument("pk_even_via_recursion: sequence must contain P_0 .. P_" +
                                std::to_string(2 * m - 1));
  Poly acc = seq.at(2 * m - 1).mul_by_power(1).scale(Rational(2 * m + 1));
  for (unsigned k = 1; k <= m; ++k) {
    const Rational coef(power(BigInt(-2), k) * factorial(m) * (2 * m - k + 1),
                        factorial(k + 1) * factorial(m - k));
    acc = acc + seq.at(2 * m - k - 1).mul_by_power(k + 1).scale(coef);
  }
  return acc;
}

Poly pk_next_via_bernoulli_coeffs(unsigned m, const PkSequence& seq, const BernoulliCache& cache,
                                  int sign) {
  if (m < 1)
    throw std::domain_error(
        "pk_next_via_bernoulli_coeffs: undefined at m = 0; P_0 and P_1 are base cases");
  if (sign != kCoeffSignAsPrinted && sign != kCoeffSignFlipped)
    throw std::invalid_argument("pk_next_via_bernoulli_coeffs: sign must be +1 or -1");
  if (seq.max_k() < m)
    throw std::invalid_argument("pk_next_via_bernoulli_coeffs: sequence must contain P_0 .. P_" +
                                std::to_string(m));

  Poly result = seq.at(m).mul_by_power(1);  // n * P_m(n)

  const Poly b_next = cache.polynomial(m + 2);
  Poly inner;
  for (unsigned k = 1; k <= m / 2; ++k) {
    const Rational f = Rational(power(BigInt(4), k)) * b_next.coefficient(m + 2 - 2 * k);
    inner = inner + seq.at(m + 1 - 2 * k).scale(f);
  }
  result = result - inner.mul_by_power(1).scale(Rational(1, static_cast<long>(m) + 2));

  const BigInt two_m = power(BigInt(2), m);
  result = result - Poly::constant(Rational(two_m) * Rational(4, static_cast<long>(m) + 2) *
                                   cache.number(m + 2));
  result = result +
           Poly::monomial(Rational(sign) * Rational(2) * Rational(two_m) * cache.number(m + 1), 1);
  return result;
}

bool check_odd_constant_term(unsigned m, const PkSequence& seq, const BernoulliCache& cache) {
  if (m < 1) throw std::invalid_argument("check_odd_constant_term: m must be >= 1");
  const Rational lhs = seq.at(2 * m - 1).eval(0);
  const Rational rhs =
      -(Rational(power(BigInt(4), m)) * cache.number(2 * m)) / Rational(2L * m);
  return lhs == rhs;
}

BigInt reconstruct_t(unsigned n, unsigned k, const PkSequence& seq) {
  if (n < 1 || k < 1) throw std::invalid_argument("reconstruct_t: n and k must be >= 1");
  if (k == 1) return 1;
  if (seq.max_k() + 2 < k)
    throw std::invalid_argument("reconstruct_t: sequence must contain P_" + std::to_string(k - 2));
  const Rational prefactor(falling_factorial(BigInt(n), k),
                           power(BigInt(2), k - 1) * factorial(k - 1));
  const Rational value = prefactor * seq.at(k - 2).eval(Rational(static_cast<long>(n)));
  if (!value.is_integer()) {
    std::ostringstream os;
    os << "reconstruct_t: T(" << n << "," << k << ") reconstructed as the non-integer "
       << value.str() << " (broken P derivation)";
    throw consistency_error(os.str());
  }
  return value.numerator();
}

std::vector<Poly> interpolate_pk_range_serial(const StirlingTable& t, unsigned max_k) {
  std::vector<Poly> out(max_k + 1);
  for (unsigned j = 0; j <= max_k; ++j) out[j] = pk_from_stirling(j, t);
  return out;
}

std::vector<Poly> interpolate_pk_range(const StirlingTable& t, unsigned max_k) {
  if (t.max_n() < 2 * max_k + 2)
    throw std::invalid_argument("interpolate_pk_range: table too small (need max_n >= " +
                                std::to_string(2 * max_k + 2) + ")");
#ifdef _OPENMP
  std::vector<Poly> out(max_k + 1);
  std::exception_ptr error;
  // Per-index interpolations are independent; the table is shared
  // read-only. Dynamic schedule: cost grows quadratically with j.
#pragma omp parallel for schedule(dynamic)
  for (long j = 0; j <= static_cast<long>(max_k); ++j) {
    try {
      out[static_cast<std::size_t>(j)] = pk_from_stirling(static_cast<unsigned>(j), t);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
#else
  return interpolate_pk_range_serial(t, max_k);
#endif
}

PkSequence build_pk_sequence(unsigned max_k, PkMethod method, int sign) {
  PkSequence seq;
  seq.polys.reserve(max_k + 1);
  seq.provenance.reserve(max_k + 1);

  switch (method) {
    case PkMethod::interp: {
      const StirlingTable table(2 * max_k + 2);
      seq.polys = interpolate_pk_range(table, max_k);
      seq.provenance.assign(max_k + 1, PkProvenance::interpolated);
      return seq;
    }

    case PkMethod::recursion: {
      seq.polys.push_back(Poly::constant(1));
      seq.provenance.push_back(PkProvenance::base);
      if (max_k >= 1) {
        seq.polys.push_back(Poly(std::vector<Rational>{Rational(-1, 3), Rational(1)}));
        seq.provenance.push_back(PkProvenance::base);
      }
      const BernoulliCache cache;
      for (unsigned k = 2; k <= max_k; ++k) {
        if (k % 2 == 0) {
          seq.polys.push_back(pk_even_via_recursion(k / 2, seq));
          seq.provenance.push_back(PkProvenance::even_recursion);
        } else {
          seq.polys.push_back(pk_next_via_bernoulli_coeffs(k - 1, seq, cache, sign));
          seq.provenance.push_back(PkProvenance::coeff_recursion);
        }
      }
      return seq;
    }

    case PkMethod::cross_check_all: {
      const StirlingTable table(2 * max_k + 2);
      seq.polys = interpolate_pk_range(table, max_k);
      seq.provenance.assign(max_k + 1, PkProvenance::interpolated);
      const BernoulliCache cache;
      for (unsigned k = 2; k <= max_k; ++k) {
        const Poly via_coeff = pk_next_via_bernoulli_coeffs(k - 1, seq, cache, sign);
        if (!(via_coeff == seq.polys[k]))
          throw_cross_check_mismatch(k, "coefficient-recursion", "interpolation", via_coeff,
                                     seq.polys[k]);
        if (k % 2 == 0) {
          const Poly via_even = pk_even_via_recursion(k / 2, seq);
          if (!(via_even == seq.polys[k]))
            throw_cross_check_mismatch(k, "even-recursion", "interpolation", via_even,
                                       seq.polys[k]);
        }
      }
      return seq;
    }
  }
  throw std::invalid_argument("build_pk_sequence: unknown method");
}

}  // namespace stirpoly
