#pragma once

// The orbit-generating monomial x^a and its finite truncations I_n.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace eqhilb {

/// Exponent vector of a monomial in K[x_{i,j} : 1 <= i <= c, 1 <= j <= n],
/// indexed row-major: variable x_{i,j} sits at (i - 1) * n + (j - 1).
using Monomial = std::vector<std::uint32_t>;

std::uint64_t total_degree(const Monomial& m);
bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);

/// The monomial prod_{i,j} x_{i,j}^{a_{i,j}} with trailing zero columns
/// removed, together with its column data.
class OrbitMonomial {
public:
  /// `matrix` has c rows of equal length. Throws Error(empty_monomial) for an
  /// all-zero matrix and Error(negative_exponent) for a negative entry.
  explicit OrbitMonomial(const std::vector<std::vector<std::int64_t>>& matrix);

  std::uint32_t c() const noexcept { return c_; }
  /// mu_r, the index of the last non-zero column.
  std::uint32_t width() const noexcept { return width_; }
  std::uint32_t r() const noexcept { return static_cast<std::uint32_t>(mu_.size()); }
  /// 1-based indices of the non-zero columns, strictly increasing.
  const std::vector<std::uint32_t>& mu() const noexcept { return mu_; }
  /// Column degrees b_j = sum_i a_{i, mu_j}.
  const std::vector<std::uint32_t>& b() const noexcept { return b_; }
  /// mu_r - mu_{r-1}; zero when r = 1.
  std::uint32_t delta_r() const noexcept { return delta_r_; }
  std::uint64_t total_degree() const noexcept;

  /// a_{i,j} with 1-based row i and column j.
  std::uint32_t exponent(std::uint32_t i, std::uint32_t j) const;
  /// c x width matrix.
  const std::vector<std::vector<std::uint32_t>>& matrix() const noexcept {
    return matrix_;
  }

  friend bool operator==(const OrbitMonomial&, const OrbitMonomial&) = default;

private:
  std::uint32_t c_ = 0;
  std::uint32_t width_ = 0;
  std::vector<std::vector<std::uint32_t>> matrix_;
  std::vector<std::uint32_t> mu_;
  std::vector<std::uint32_t> b_;
  std::uint32_t delta_r_ = 0;
};

OrbitMonomial new_orbit(const std::vector<std::vector<std::int64_t>>& matrix);

/// Parses `[[0,0,2,0,4]]` or `x[1,3]^2 x[1,5]^4` (factors separated by
/// whitespace or `*`). For the monomial form c is the largest row index
/// mentioned; `x[2,1]^0` can be used to widen c. Throws ParseError.
OrbitMonomial parse_orbit(std::string_view text);

/// `x[1,3]^2 x[1,5]^4` style rendering of the orbit generator.
std::string to_monomial_string(const OrbitMonomial& orb);

/// Drops the last non-zero column. Throws Error(no_parent) when r = 1.
OrbitMonomial parent_orbit(const OrbitMonomial& orb);

/// A finitely generated monomial ideal of K[X_n] with c rows.
struct MonomialIdealFinite {
  std::uint32_t c = 1;
  std::uint32_t n = 0;
  std::vector<Monomial> generators;

  std::uint32_t nvars() const noexcept { return c * n; }
  /// The same generators viewed in K[X_width] for width >= n.
  MonomialIdealFinite embed(std::uint32_t width) const;
  std::string generator_string(std::size_t k) const;
};

/// Divisibility-minimal subset, first occurrence kept, input order preserved.
std::vector<Monomial> minimalize(const std::vector<Monomial>& gens);

/// I_n: one generator per placement mu_1 <= j_1, j_{k+1} - j_k >=
/// mu_{k+1} - mu_k, j_r <= n, in lexicographic order of (j_1, ..., j_r).
MonomialIdealFinite truncate(const OrbitMonomial& orb, std::uint32_t n);

} // namespace eqhilb
