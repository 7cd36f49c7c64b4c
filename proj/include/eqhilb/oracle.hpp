#pragma once

// Brute-force Hilbert series of finite monomial quotients K[X_n] / I_n.
// These routines know nothing about orbits or closed forms; they are the
// ground truth the closed-form results are compared against.

#include <cstdint>
#include <optional>
#include <vector>

#include "eqhilb/orbit.hpp"
#include "eqhilb/poly.hpp"

namespace eqhilb {

inline constexpr std::size_t default_taylor_guard = 25;

/// H(t) = num / (1 - t)^nvars.
struct HilbertSeriesFinite {
  IntPoly1 num;
  std::uint32_t nvars = 0;
  std::optional<ReducedSeries> reduced;
};

/// Inclusion-exclusion over all subsets of generators:
/// sum_S (-1)^|S| t^deg lcm(S). Throws Error(too_many_generators) above
/// `guard` generators.
IntPoly1 hilbert_numerator_taylor(const MonomialIdealFinite& ideal,
                                  std::size_t guard = default_taylor_guard);

/// Pivot splitting N(I) = N(I + (p)) + t^deg p N(I : p) with p a pure power
/// of the variable occurring in the most generators.
IntPoly1 hilbert_numerator_pivot(const MonomialIdealFinite& ideal);

HilbertSeriesFinite hilbert_series(const MonomialIdealFinite& ideal);

/// dim_K [K[X_n]/I]_j for j = 0 .. degmax.
std::vector<Integer> hilbert_function(const MonomialIdealFinite& ideal,
                                      std::int64_t degmax);

struct DimDegree {
  std::int64_t dim = 0;
  Integer deg;
};

DimDegree dim_and_degree(const MonomialIdealFinite& ideal);

/// Same as above for an already computed numerator over (1 - t)^nvars.
DimDegree dim_and_degree(const IntPoly1& numerator, std::uint32_t nvars);

} // namespace eqhilb
