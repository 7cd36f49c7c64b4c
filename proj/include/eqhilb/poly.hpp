#pragma once

// Exact polynomials over Z in t and in (s, t), and the structured rational
// functions whose power-series expansions are equivariant Hilbert series.

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace eqhilb {

using Integer = mpz_class;
using Rational = mpq_class;

/// Univariate polynomial in t, stored sparsely. No stored coefficient is zero.
class IntPoly1 {
public:
  using Coeffs = std::map<std::uint32_t, Integer>;

  IntPoly1() = default;
  IntPoly1(long constant);
  explicit IntPoly1(const Integer& constant);

  static IntPoly1 monomial(const Integer& coeff, std::uint32_t exp);
  /// (1 - t)^k
  static IntPoly1 one_minus_t_pow(std::uint32_t k);
  /// 1 + t + ... + t^(b-1); zero for b = 0.
  static IntPoly1 geometric(std::uint32_t b);
  static IntPoly1 from_dense(std::span<const Integer> coeffs);

  const Coeffs& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  std::int64_t degree() const noexcept;
  Integer coeff(std::uint32_t exp) const;
  Integer eval_at_one() const;
  /// Coefficients of t^0 .. t^(len-1).
  std::vector<Integer> dense(std::size_t len) const;

  void add_term(std::uint32_t exp, const Integer& c);

  IntPoly1& operator+=(const IntPoly1& rhs);
  IntPoly1& operator-=(const IntPoly1& rhs);
  IntPoly1& operator*=(const IntPoly1& rhs);
  IntPoly1& operator*=(const Integer& scalar);

  IntPoly1 pow(std::uint32_t k) const;

  friend IntPoly1 operator+(IntPoly1 a, const IntPoly1& b) { return a += b; }
  friend IntPoly1 operator-(IntPoly1 a, const IntPoly1& b) { return a -= b; }
  friend IntPoly1 operator*(const IntPoly1& a, const IntPoly1& b);
  friend IntPoly1 operator*(IntPoly1 a, const Integer& k) { return a *= k; }
  friend IntPoly1 operator-(const IntPoly1& a);
  friend bool operator==(const IntPoly1& a, const IntPoly1& b) {
    return a.coeffs_ == b.coeffs_;
  }

private:
  Coeffs coeffs_;
};

/// Bivariate polynomial in (s, t). Keys are (s-degree, t-degree), so iteration
/// runs s-degree first, then t-degree, both ascending.
class IntPoly2 {
public:
  using Key = std::pair<std::uint32_t, std::uint32_t>;
  using Coeffs = std::map<Key, Integer>;

  IntPoly2() = default;
  IntPoly2(long constant);
  /// Embeds a polynomial in t as the s^0 part.
  explicit IntPoly2(const IntPoly1& p);

  static IntPoly2 monomial(const Integer& coeff, std::uint32_t s_exp,
                           std::uint32_t t_exp);
  static IntPoly2 s();
  /// Sum_k s^k * coeffs[k].
  static IntPoly2 from_s_coefficients(std::span<const IntPoly1> coeffs);

  const Coeffs& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  std::int64_t degree_s() const noexcept;
  Integer coeff(std::uint32_t s_exp, std::uint32_t t_exp) const;

  /// Entry k is the coefficient of s^k, a polynomial in t.
  std::vector<IntPoly1> s_coefficients() const;
  /// p(q(t), t)
  IntPoly1 substitute_s(const IntPoly1& q) const;

  void add_term(std::uint32_t s_exp, std::uint32_t t_exp, const Integer& c);

  IntPoly2& operator+=(const IntPoly2& rhs);
  IntPoly2& operator-=(const IntPoly2& rhs);
  IntPoly2& operator*=(const IntPoly2& rhs);
  IntPoly2& operator*=(const Integer& scalar);

  IntPoly2 pow(std::uint32_t k) const;

  friend IntPoly2 operator+(IntPoly2 a, const IntPoly2& b) { return a += b; }
  friend IntPoly2 operator-(IntPoly2 a, const IntPoly2& b) { return a -= b; }
  friend IntPoly2 operator*(const IntPoly2& a, const IntPoly2& b);
  friend IntPoly2 operator*(IntPoly2 a, const Integer& k) { return a *= k; }
  friend IntPoly2 operator-(const IntPoly2& a);
  friend bool operator==(const IntPoly2& a, const IntPoly2& b) {
    return a.coeffs_ == b.coeffs_;
  }

private:
  Coeffs coeffs_;
};

/// Exact quotient in Z[t]; throws Error(not_divisible) when d does not divide p.
IntPoly1 exact_divide(const IntPoly1& p, const IntPoly1& d);

/// Exact quotient in Z[s,t]; throws Error(not_divisible) when d does not
/// divide p. Division runs in Z[t][s], dividing leading s-coefficients
/// exactly in Z[t].
IntPoly2 exact_divide(const IntPoly2& p, const IntPoly2& d);

/// Pseudo-remainder of p by d as polynomials in s over Z[t]. A non-zero
/// result certifies that d does not divide p.
IntPoly2 pseudo_remainder(const IntPoly2& p, const IntPoly2& d);

/// Denominator factor (1 - t)^c_exp - s * f(t).
struct DenominatorFactor {
  std::uint32_t c_exp = 0;
  IntPoly1 f;

  IntPoly2 as_poly() const;
  friend bool operator==(const DenominatorFactor&,
                         const DenominatorFactor&) = default;
};

/// numerator / ((1 - t)^pow_one_minus_t * prod_j factors[j]).
/// pow_one_minus_t may be negative.
class FactoredRational2 {
public:
  FactoredRational2() = default;
  /// Throws Error(invalid_argument) unless every factor has f(1) > 0.
  FactoredRational2(IntPoly2 numerator, std::int64_t pow_one_minus_t,
                    std::vector<DenominatorFactor> factors);

  const IntPoly2& numerator() const noexcept { return numerator_; }
  std::int64_t pow_one_minus_t() const noexcept { return pow_one_minus_t_; }
  const std::vector<DenominatorFactor>& factors() const noexcept {
    return factors_;
  }

  /// Numerators multiplied, exponents added, factor lists concatenated.
  friend FactoredRational2 operator*(const FactoredRational2& a,
                                     const FactoredRational2& b);
  friend bool operator==(const FactoredRational2&,
                         const FactoredRational2&) = default;

private:
  IntPoly2 numerator_;
  std::int64_t pow_one_minus_t_ = 0;
  std::vector<DenominatorFactor> factors_;
};

/// Truncated bivariate power series: entry (n, j) is the coefficient of
/// s^n t^j for 0 <= n <= nmax, 0 <= j <= degmax.
class SeriesTable {
public:
  SeriesTable() = default;
  SeriesTable(std::int64_t nmax, std::int64_t degmax);

  std::int64_t nmax() const noexcept { return nmax_; }
  std::int64_t degmax() const noexcept { return degmax_; }

  Integer& at(std::int64_t n, std::int64_t j);
  const Integer& at(std::int64_t n, std::int64_t j) const;
  std::span<const Integer> row(std::int64_t n) const;

  friend bool operator==(const SeriesTable&, const SeriesTable&) = default;

private:
  std::int64_t nmax_ = -1;
  std::int64_t degmax_ = -1;
  std::vector<Integer> entries_;
};

/// Power-series expansion of H up to s^nmax t^degmax. Throws
/// Error(invalid_truncation) for negative bounds.
SeriesTable expand(const FactoredRational2& h, std::int64_t nmax,
                   std::int64_t degmax);

struct ReducedSeries {
  std::int64_t dim = 0;
  Integer deg;
  IntPoly1 numerator;
};

/// Writes num / (1 - t)^pow in lowest terms: num = (1 - t)^k * reduced with
/// reduced(1) != 0, dim = pow - k, deg = reduced(1). Throws
/// Error(zero_numerator) for num = 0.
ReducedSeries reduce_univariate(const IntPoly1& num, std::int64_t pow);

} // namespace eqhilb
