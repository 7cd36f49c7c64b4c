#include "eqhilb/poly.hpp"

#include <algorithm>

#include "eqhilb/error.hpp"

namespace eqhilb {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
  case ErrorCode::parse_error: return "ParseError";
  case ErrorCode::empty_monomial: return "EmptyMonomial";
  case ErrorCode::negative_exponent: return "NegativeExponent";
  case ErrorCode::invalid_truncation: return "InvalidTruncation";
  case ErrorCode::not_divisible: return "NotDivisible";
  case ErrorCode::zero_numerator: return "ZeroNumerator";
  case ErrorCode::too_many_generators: return "TooManyGenerators";
  case ErrorCode::no_parent: return "NoParent";
  case ErrorCode::unsupported_r: return "UnsupportedR";
  case ErrorCode::unsupported_exponent: return "UnsupportedExponent";
  case ErrorCode::repeated_column_degrees: return "RepeatedColumnDegrees";
  case ErrorCode::invalid_argument: return "InvalidArgument";
  case ErrorCode::internal: return "Internal";
  }
  return "Unknown";
}

namespace {

template <class Map, class Key>
void accumulate(Map& coeffs, const Key& key, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
}

Integer binomial(std::uint64_t n, std::uint64_t k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

} // namespace

// ---------------------------------------------------------------- IntPoly1

IntPoly1::IntPoly1(long constant) : IntPoly1(Integer(constant)) {}

IntPoly1::IntPoly1(const Integer& constant) {
  if (constant != 0) coeffs_.emplace(0, constant);
}

IntPoly1 IntPoly1::monomial(const Integer& coeff, std::uint32_t exp) {
  IntPoly1 p;
  p.add_term(exp, coeff);
  return p;
}

IntPoly1 IntPoly1::one_minus_t_pow(std::uint32_t k) {
  IntPoly1 p;
  for (std::uint32_t i = 0; i <= k; ++i) {
    Integer c = binomial(k, i);
    if (i % 2) c = -c;
    p.add_term(i, c);
  }
  return p;
}

IntPoly1 IntPoly1::geometric(std::uint32_t b) {
  IntPoly1 p;
  for (std::uint32_t i = 0; i < b; ++i) p.add_term(i, 1);
  return p;
}

IntPoly1 IntPoly1::from_dense(std::span<const Integer> coeffs) {
  IntPoly1 p;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    p.add_term(static_cast<std::uint32_t>(i), coeffs[i]);
  return p;
}

std::int64_t IntPoly1::degree() const noexcept {
  return coeffs_.empty() ? -1 : static_cast<std::int64_t>(coeffs_.rbegin()->first);
}

Integer IntPoly1::coeff(std::uint32_t exp) const {
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

Integer IntPoly1::eval_at_one() const {
  Integer sum = 0;
  for (const auto& [e, c] : coeffs_) sum += c;
  return sum;
}

std::vector<Integer> IntPoly1::dense(std::size_t len) const {
  std::vector<Integer> out(len);
  for (const auto& [e, c] : coeffs_) {
    if (e >= len) break;
    out[e] = c;
  }
  return out;
}

void IntPoly1::add_term(std::uint32_t exp, const Integer& c) {
  accumulate(coeffs_, exp, c);
}

IntPoly1& IntPoly1::operator+=(const IntPoly1& rhs) {
  for (const auto& [e, c] : rhs.coeffs_) add_term(e, c);
  return *this;
}

IntPoly1& IntPoly1::operator-=(const IntPoly1& rhs) {
  for (const auto& [e, c] : rhs.coeffs_) add_term(e, -c);
  return *this;
}

IntPoly1& IntPoly1::operator*=(const IntPoly1& rhs) {
  *this = *this * rhs;
  return *this;
}

IntPoly1& IntPoly1::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [e, c] : coeffs_) c *= scalar;
  return *this;
}

IntPoly1 operator*(const IntPoly1& a, const IntPoly1& b) {
  IntPoly1 out;
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_) out.add_term(ea + eb, ca * cb);
  return out;
}

IntPoly1 operator-(const IntPoly1& a) {
  IntPoly1 out = a;
  for (auto& [e, c] : out.coeffs_) c = -c;
  return out;
}

IntPoly1 IntPoly1::pow(std::uint32_t k) const {
  IntPoly1 result(1);
  IntPoly1 base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------- IntPoly2

IntPoly2::IntPoly2(long constant) {
  if (constant != 0) coeffs_.emplace(Key{0, 0}, Integer(constant));
}

IntPoly2::IntPoly2(const IntPoly1& p) {
  for (const auto& [e, c] : p.coeffs()) coeffs_.emplace(Key{0, e}, c);
}

IntPoly2 IntPoly2::monomial(const Integer& coeff, std::uint32_t s_exp,
                            std::uint32_t t_exp) {
  IntPoly2 p;
  p.add_term(s_exp, t_exp, coeff);
  return p;
}

IntPoly2 IntPoly2::s() { return monomial(1, 1, 0); }

IntPoly2 IntPoly2::from_s_coefficients(std::span<const IntPoly1> coeffs) {
  IntPoly2 p;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    for (const auto& [e, c] : coeffs[k].coeffs())
      p.add_term(static_cast<std::uint32_t>(k), e, c);
  return p;
}

std::int64_t IntPoly2::degree_s() const noexcept {
  return coeffs_.empty() ? -1
                         : static_cast<std::int64_t>(coeffs_.rbegin()->first.first);
}

Integer IntPoly2::coeff(std::uint32_t s_exp, std::uint32_t t_exp) const {
  auto it = coeffs_.find(Key{s_exp, t_exp});
  return it == coeffs_.end() ? Integer(0) : it->second;
}

std::vector<IntPoly1> IntPoly2::s_coefficients() const {
  std::vector<IntPoly1> out(static_cast<std::size_t>(degree_s() + 1));
  for (const auto& [key, c] : coeffs_) out[key.first].add_term(key.second, c);
  return out;
}

IntPoly1 IntPoly2::substitute_s(const IntPoly1& q) const {
  // Horner in s.
  auto parts = s_coefficients();
  IntPoly1 acc;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) acc = acc * q + *it;
  return acc;
}

void IntPoly2::add_term(std::uint32_t s_exp, std::uint32_t t_exp,
                        const Integer& c) {
  accumulate(coeffs_, Key{s_exp, t_exp}, c);
}

IntPoly2& IntPoly2::operator+=(const IntPoly2& rhs) {
  for (const auto& [k, c] : rhs.coeffs_) add_term(k.first, k.second, c);
  return *this;
}

IntPoly2& IntPoly2::operator-=(const IntPoly2& rhs) {
  for (const auto& [k, c] : rhs.coeffs_) add_term(k.first, k.second, -c);
  return *this;
}

IntPoly2& IntPoly2::operator*=(const IntPoly2& rhs) {
  *this = *this * rhs;
  return *this;
}

IntPoly2& IntPoly2::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [k, c] : coeffs_) c *= scalar;
  return *this;
}

IntPoly2 operator*(const IntPoly2& a, const IntPoly2& b) {
  IntPoly2 out;
  for (const auto& [ka, ca] : a.coeffs_)
    for (const auto& [kb, cb] : b.coeffs_)
      out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return out;
}

IntPoly2 operator-(const IntPoly2& a) {
  IntPoly2 out = a;
  for (auto& [k, c] : out.coeffs_) c = -c;
  return out;
}

IntPoly2 IntPoly2::pow(std::uint32_t k) const {
  IntPoly2 result(1);
  IntPoly2 base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------- division

IntPoly1 exact_divide(const IntPoly1& p, const IntPoly1& d) {
  if (d.is_zero())
    throw Error(ErrorCode::invalid_argument, "division by the zero polynomial");
  const auto d_deg = static_cast<std::uint32_t>(d.degree());
  const Integer& d_lead = d.coeffs().rbegin()->second;
  IntPoly1 rem = p;
  IntPoly1 quot;
  while (!rem.is_zero()) {
    const auto [r_deg, r_lead] = *rem.coeffs().rbegin();
    if (r_deg < d_deg || !mpz_divisible_p(r_lead.get_mpz_t(), d_lead.get_mpz_t()))
      throw Error(ErrorCode::not_divisible, "polynomial is not divisible");
    IntPoly1 term = IntPoly1::monomial(Integer(r_lead / d_lead), r_deg - d_deg);
    quot += term;
    rem -= term * d;
  }
  return quot;
}

IntPoly2 exact_divide(const IntPoly2& p, const IntPoly2& d) {
  if (d.is_zero())
    throw Error(ErrorCode::invalid_argument, "division by the zero polynomial");
  auto rem = p.s_coefficients();
  const auto dc = d.s_coefficients();
  const std::size_t d_deg = dc.size() - 1;
  const IntPoly1& d_lead = dc.back();

  std::vector<IntPoly1> quot;
  while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
  if (rem.size() > d_deg) quot.resize(rem.size() - d_deg);

  while (!rem.empty()) {
    if (rem.size() <= d_deg)
      throw Error(ErrorCode::not_divisible, "polynomial is not divisible");
    const std::size_t shift = rem.size() - 1 - d_deg;
    IntPoly1 q = exact_divide(rem.back(), d_lead);
    for (std::size_t k = 0; k <= d_deg; ++k) rem[shift + k] -= q * dc[k];
    quot[shift] = std::move(q);
    while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
  }
  return IntPoly2::from_s_coefficients(quot);
}

IntPoly2 pseudo_remainder(const IntPoly2& p, const IntPoly2& d) {
  if (d.is_zero())
    throw Error(ErrorCode::invalid_argument, "division by the zero polynomial");
  auto rem = p.s_coefficients();
  const auto dc = d.s_coefficients();
  const std::size_t d_deg = dc.size() - 1;
  const IntPoly1& d_lead = dc.back();
  while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
  while (rem.size() > d_deg) {
    const std::size_t shift = rem.size() - 1 - d_deg;
    const IntPoly1 r_lead = rem.back();
    for (auto& c : rem) c *= d_lead;
    for (std::size_t k = 0; k <= d_deg; ++k) rem[shift + k] -= r_lead * dc[k];
    while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
  }
  return IntPoly2::from_s_coefficients(rem);
}

// ---------------------------------------------------------------- rational

IntPoly2 DenominatorFactor::as_poly() const {
  return IntPoly2(IntPoly1::one_minus_t_pow(c_exp)) - IntPoly2::s() * IntPoly2(f);
}

FactoredRational2::FactoredRational2(IntPoly2 numerator,
                                     std::int64_t pow_one_minus_t,
                                     std::vector<DenominatorFactor> factors)
    : numerator_(std::move(numerator)), pow_one_minus_t_(pow_one_minus_t),
      factors_(std::move(factors)) {
  for (const auto& factor : factors_)
    if (factor.f.eval_at_one() <= 0)
      throw Error(ErrorCode::invalid_argument,
                  "denominator factor must satisfy f(1) > 0");
}

FactoredRational2 operator*(const FactoredRational2& a,
                            const FactoredRational2& b) {
  auto factors = a.factors_;
  factors.insert(factors.end(), b.factors_.begin(), b.factors_.end());
  return FactoredRational2(a.numerator_ * b.numerator_,
                           a.pow_one_minus_t_ + b.pow_one_minus_t_,
                           std::move(factors));
}

// ---------------------------------------------------------------- expansion

SeriesTable::SeriesTable(std::int64_t nmax, std::int64_t degmax)
    : nmax_(nmax), degmax_(degmax) {
  if (nmax < 0 || degmax < 0)
    throw Error(ErrorCode::invalid_truncation,
                "truncation bounds must be non-negative");
  entries_.resize(static_cast<std::size_t>((nmax + 1) * (degmax + 1)));
}

Integer& SeriesTable::at(std::int64_t n, std::int64_t j) {
  return entries_.at(static_cast<std::size_t>(n * (degmax_ + 1) + j));
}

const Integer& SeriesTable::at(std::int64_t n, std::int64_t j) const {
  return entries_.at(static_cast<std::size_t>(n * (degmax_ + 1) + j));
}

std::span<const Integer> SeriesTable::row(std::int64_t n) const {
  return std::span<const Integer>(entries_).subspan(
      static_cast<std::size_t>(n * (degmax_ + 1)),
      static_cast<std::size_t>(degmax_ + 1));
}

namespace {

using Series = std::vector<Integer>;

// Division by (1 - t) of a truncated series: running prefix sums.
void divide_one_minus_t(Series& a, std::int64_t times) {
  for (std::int64_t k = 0; k < times; ++k)
    for (std::size_t j = 1; j < a.size(); ++j) a[j] += a[j - 1];
}

void multiply_one_minus_t(Series& a, std::int64_t times) {
  for (std::int64_t k = 0; k < times; ++k)
    for (std::size_t j = a.size(); j-- > 1;) a[j] -= a[j - 1];
}

Series multiply_truncated(const IntPoly1& f, const Series& a) {
  Series out(a.size());
  for (const auto& [e, c] : f.coeffs()) {
    if (e >= a.size()) break;
    for (std::size_t j = e; j < a.size(); ++j) out[j] += c * a[j - e];
  }
  return out;
}

} // namespace

SeriesTable expand(const FactoredRational2& h, std::int64_t nmax,
                   std::int64_t degmax) {
  if (nmax < 0 || degmax < 0)
    throw Error(ErrorCode::invalid_truncation,
                "truncation bounds must be non-negative");
  const auto rows = static_cast<std::size_t>(nmax + 1);
  const auto len = static_cast<std::size_t>(degmax + 1);

  std::vector<Series> table(rows, Series(len));
  for (const auto& [key, c] : h.numerator().coeffs())
    if (key.first < rows && key.second < len) table[key.first][key.second] = c;

  for (auto& row : table) {
    if (h.pow_one_minus_t() >= 0)
      divide_one_minus_t(row, h.pow_one_minus_t());
    else
      multiply_one_minus_t(row, -h.pow_one_minus_t());
  }

  // T = H / ((1 - t)^c - s f) solves (1 - t)^c T_n = H_n + f T_{n-1}.
  for (const auto& factor : h.factors()) {
    for (std::size_t n = 0; n < rows; ++n) {
      if (n > 0) {
        Series shifted = multiply_truncated(factor.f, table[n - 1]);
        for (std::size_t j = 0; j < len; ++j) table[n][j] += shifted[j];
      }
      divide_one_minus_t(table[n], factor.c_exp);
    }
  }

  SeriesTable out(nmax, degmax);
  for (std::size_t n = 0; n < rows; ++n)
    for (std::size_t j = 0; j < len; ++j)
      out.at(static_cast<std::int64_t>(n), static_cast<std::int64_t>(j)) =
          std::move(table[n][j]);
  return out;
}

ReducedSeries reduce_univariate(const IntPoly1& num, std::int64_t pow) {
  if (num.is_zero())
    throw Error(ErrorCode::zero_numerator,
                "Hilbert numerator is zero (unit ideal)");
  if (pow < 0)
    throw Error(ErrorCode::invalid_argument, "denominator exponent must be >= 0");
  IntPoly1 reduced = num;
  std::int64_t k = 0;
  while (reduced.eval_at_one() == 0) {
    // Quotient by (1 - t): prefix sums of the coefficients.
    const auto deg = static_cast<std::size_t>(reduced.degree());
    auto dense = reduced.dense(deg + 1);
    for (std::size_t j = 1; j < dense.size(); ++j) dense[j] += dense[j - 1];
    dense.pop_back();
    reduced = IntPoly1::from_dense(dense);
    ++k;
  }
  ReducedSeries out;
  out.dim = pow - k;
  out.deg = reduced.eval_at_one();
  out.numerator = std::move(reduced);
  return out;
}

} // namespace eqhilb
