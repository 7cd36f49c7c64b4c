#include "eqhilb/degree.hpp"

#include <algorithm>

#include "eqhilb/error.hpp"

namespace eqhilb {

std::vector<Integer> degree_sequence(const OrbitMonomial& orb, std::int64_t nmax) {
  const std::int64_t first = static_cast<std::int64_t>(orb.width()) - 1;
  if (nmax < first)
    throw Error(ErrorCode::invalid_argument,
                "nmax must be at least mu_r - 1 = " + std::to_string(first));
  const auto len = static_cast<std::size_t>(nmax - first + 1);

  // Multiply by 1 / (1 - b t) one factor at a time: h_k <- h_k + b h_{k-1}.
  std::vector<Integer> series(len);
  series[0] = 1;
  for (auto b : orb.b())
    for (std::size_t k = 1; k < len; ++k) series[k] += b * series[k - 1];
  return series;
}

Integer degree_closed(const OrbitMonomial& orb, std::int64_t n) {
  const auto& b = orb.b();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (b[i] == b[j])
        throw Error(ErrorCode::repeated_column_degrees,
                    "column degrees are not pairwise distinct");
  const std::int64_t mu_r = orb.width();
  if (n < mu_r - 1)
    throw Error(ErrorCode::invalid_argument, "n must be at least mu_r - 1");

  const auto exponent = static_cast<unsigned long>(n - mu_r + static_cast<std::int64_t>(b.size()));
  Rational total = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    Integer num;
    mpz_ui_pow_ui(num.get_mpz_t(), b[i], exponent);
    Integer den = 1;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (j != i) den *= Integer(static_cast<long>(b[i]) - static_cast<long>(b[j]));
    Rational term(num, den);
    term.canonicalize();
    total += term;
  }
  if (total.get_den() != 1)
    throw Error(ErrorCode::internal, "partial-fraction degree is not an integer");
  return total.get_num();
}

std::int64_t dimension_finite(const OrbitMonomial& orb, std::int64_t n) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "n must be non-negative");
  const std::int64_t c = orb.c();
  const std::int64_t mu_r = orb.width();
  if (n < mu_r) return c * n;
  return n * (c - 1) + mu_r - 1;
}

Asymptotics asymptotics(const OrbitMonomial& orb) {
  return Asymptotics{static_cast<std::int64_t>(orb.c()) - 1,
                     *std::max_element(orb.b().begin(), orb.b().end())};
}

} // namespace eqhilb
