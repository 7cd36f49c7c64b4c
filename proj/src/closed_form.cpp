#include "eqhilb/closed_form.hpp"

#include <algorithm>
#include <numeric>

#include "eqhilb/error.hpp"

namespace eqhilb {

namespace {

IntPoly2 one_minus_t_pow2(std::uint32_t k) {
  return IntPoly2(IntPoly1::one_minus_t_pow(k));
}

IntPoly2 t_pow2(std::uint64_t k) {
  return IntPoly2::monomial(1, 0, static_cast<std::uint32_t>(k));
}

} // namespace

IntPoly2 unit_factor(std::uint32_t c) {
  return one_minus_t_pow2(c) - IntPoly2::s();
}

std::int64_t one_minus_t_exponent(const OrbitMonomial& orb) {
  const auto c = static_cast<std::int64_t>(orb.c());
  const auto r = static_cast<std::int64_t>(orb.r());
  const auto mu_r = static_cast<std::int64_t>(orb.width());
  return c * (mu_r - r - 1) + r;
}

IntPoly2 gtilde(const OrbitMonomial& orb) {
  const std::uint32_t c = orb.c();
  const IntPoly2 u = one_minus_t_pow2(c);
  const IntPoly2 s = IntPoly2::s();

  IntPoly2 product = one_minus_t_pow2(c * (orb.width() - orb.r()));
  for (auto b : orb.b()) product *= u - s + s * t_pow2(b);

  IntPoly2 tail = IntPoly2::monomial(1, orb.width(),
                                     static_cast<std::uint32_t>(orb.total_degree()));
  return product - tail;
}

IntPoly2 numerator_g(const OrbitMonomial& orb) {
  return exact_divide(gtilde(orb), unit_factor(orb.c()));
}

Denominator denominator(const OrbitMonomial& orb) {
  Denominator out;
  out.pow_one_minus_t = one_minus_t_exponent(orb);
  auto b = orb.b();
  std::sort(b.begin(), b.end());
  for (auto bj : b)
    out.factors.push_back(DenominatorFactor{orb.c() - 1, IntPoly1::geometric(bj)});
  return out;
}

FactoredRational2 equivariant_series(const OrbitMonomial& orb) {
  auto den = denominator(orb);
  return FactoredRational2(numerator_g(orb), den.pow_one_minus_t,
                           std::move(den.factors));
}

IntPoly2 small_r_numerator(const OrbitMonomial& orb) {
  const std::uint32_t r = orb.r();
  if (r > 3)
    throw Error(ErrorCode::unsupported_r,
                "closed small-r numerators exist only for r <= 3");
  if (one_minus_t_exponent(orb) < 0)
    throw Error(ErrorCode::unsupported_exponent,
                "closed small-r numerators need c(mu_r - r - 1) + r >= 0");

  const std::uint32_t c = orb.c();
  const std::uint32_t mu_r = orb.width();
  const auto& b = orb.b();
  const IntPoly2 s = IntPoly2::s();
  auto u_pow = [c](std::uint32_t k) { return one_minus_t_pow2(c * k); };

  IntPoly2 sum_single;  // t^b_1 + ... + t^b_r
  IntPoly2 sum_pairs;   // sum_{i<j} t^(b_i + b_j)
  for (std::uint32_t i = 0; i < r; ++i) {
    sum_single += t_pow2(b[i]);
    for (std::uint32_t j = i + 1; j < r; ++j) sum_pairs += t_pow2(b[i] + b[j]);
  }

  IntPoly2 out = u_pow(mu_r - 1);
  if (r == 2) {
    out += s * u_pow(mu_r - 2) * (IntPoly2(-1) + sum_single);
  } else if (r == 3) {
    out += s * u_pow(mu_r - 2) * (IntPoly2(-2) + sum_single);
    out += s.pow(2) * u_pow(mu_r - 3) * (IntPoly2(1) - sum_single + sum_pairs);
  }

  // t^(b_1+...+b_r) sum_{j=0}^{mu_r - r - 1} (1-t)^(cj) s^(mu_r-1-j); empty
  // when the upper limit is negative.
  const auto b_sum = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  for (std::int64_t j = 0; j <= static_cast<std::int64_t>(mu_r) - r - 1; ++j) {
    const auto jj = static_cast<std::uint32_t>(j);
    out += t_pow2(b_sum) * u_pow(jj) * s.pow(mu_r - 1 - jj);
  }
  return out;
}

bool ReducedReport::passed() const {
  return gtilde_divisible &&
         std::all_of(factor_coprime.begin(), factor_coprime.end(),
                     [](bool ok) { return ok; });
}

ReducedReport verify_reduced(const OrbitMonomial& orb) {
  ReducedReport report;
  report.gtilde_divisible =
      gtilde(orb).substitute_s(IntPoly1::one_minus_t_pow(orb.c())).is_zero();

  const IntPoly2 g = numerator_g(orb);
  for (const auto& factor : denominator(orb).factors)
    report.factor_coprime.push_back(!pseudo_remainder(g, factor.as_poly()).is_zero());
  return report;
}

} // namespace eqhilb
