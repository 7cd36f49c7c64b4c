#pragma once

#include <cstdint>
#include <vector>

#include "eqhilb/orbit.hpp"
#include "eqhilb/poly.hpp"

namespace eqhilb {

/// deg I_n for n = mu_r - 1 .. nmax: the coefficient of t^(n - mu_r + 1) in
/// prod_j 1 / (1 - b_j t). Entry 0 belongs to n = mu_r - 1 and equals 1.
/// Throws Error(invalid_argument) when nmax < mu_r - 1.
std::vector<Integer> degree_sequence(const OrbitMonomial& orb, std::int64_t nmax);

/// Partial-fraction evaluation
///   deg I_n = sum_i b_i^(n - mu_r + r) / prod_{j != i} (b_i - b_j)
/// in exact rationals. Throws Error(repeated_column_degrees) when two b_j
/// coincide and Error(internal) if the sum fails to be an integer.
Integer degree_closed(const OrbitMonomial& orb, std::int64_t n);

/// Krull dimension of K[X_n]/I_n: c n below mu_r, n(c - 1) + mu_r - 1 from
/// mu_r on.
std::int64_t dimension_finite(const OrbitMonomial& orb, std::int64_t n);

struct Asymptotics {
  std::int64_t dim = 0;
  std::uint32_t deg = 0;
};

/// (c - 1, max_j b_j)
Asymptotics asymptotics(const OrbitMonomial& orb);

} // namespace eqhilb
