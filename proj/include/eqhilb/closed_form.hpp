#pragma once

// Closed-form equivariant Hilbert series of K[X]/I for I generated by the
// Inc-orbit of a single monomial:
//
//   H(s,t) = g(s,t) / ((1-t)^e * prod_j [(1-t)^(c-1) - s(1 + t + ... + t^(b_j-1))])
//
// with e = c(mu_r - r - 1) + r and g defined by
//
//   g * [(1-t)^c - s] = (1-t)^(c(mu_r - r)) prod_j [(1-t)^c - s + s t^b_j]
//                       - s^mu_r t^(b_1 + ... + b_r).

#include <string>
#include <vector>

#include "eqhilb/orbit.hpp"
#include "eqhilb/poly.hpp"

namespace eqhilb {

/// The right-hand side of the defining identity for g.
IntPoly2 gtilde(const OrbitMonomial& orb);

/// (1 - t)^c - s
IntPoly2 unit_factor(std::uint32_t c);

/// gtilde / ((1 - t)^c - s). Error(not_divisible) here means a bug.
IntPoly2 numerator_g(const OrbitMonomial& orb);

struct Denominator {
  std::int64_t pow_one_minus_t = 0;
  std::vector<DenominatorFactor> factors;  // sorted by b_j ascending
};

Denominator denominator(const OrbitMonomial& orb);

FactoredRational2 equivariant_series(const OrbitMonomial& orb);

/// e = c(mu_r - r - 1) + r; negative exactly when r < c and mu_r = r.
std::int64_t one_minus_t_exponent(const OrbitMonomial& orb);

/// Closed numerators for r <= 3. Throws Error(unsupported_r) for r > 3 and
/// Error(unsupported_exponent) when the (1 - t) exponent is negative.
IntPoly2 small_r_numerator(const OrbitMonomial& orb);

struct ReducedReport {
  /// gtilde vanishes at s = (1 - t)^c.
  bool gtilde_divisible = false;
  /// Entry j: the j-th denominator factor does not divide g.
  std::vector<bool> factor_coprime;

  bool passed() const;
};

ReducedReport verify_reduced(const OrbitMonomial& orb);

} // namespace eqhilb
