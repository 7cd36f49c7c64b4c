#include "eqhilb/orbit.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <numeric>
#include <utility>

#include "eqhilb/error.hpp"

namespace eqhilb {

std::uint64_t total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), std::uint64_t{0});
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

// ---------------------------------------------------------------- orbit

OrbitMonomial::OrbitMonomial(
    const std::vector<std::vector<std::int64_t>>& matrix) {
  if (matrix.empty())
    throw Error(ErrorCode::empty_monomial, "exponent matrix has no rows");
  const std::size_t cols = matrix.front().size();
  for (const auto& row : matrix) {
    if (row.size() != cols)
      throw Error(ErrorCode::invalid_argument,
                  "exponent matrix rows have different lengths");
    for (auto e : row) {
      if (e < 0)
        throw Error(ErrorCode::negative_exponent,
                    "exponent matrix has a negative entry");
      if (e > std::numeric_limits<std::uint32_t>::max())
        throw Error(ErrorCode::invalid_argument, "exponent too large");
    }
  }
  c_ = static_cast<std::uint32_t>(matrix.size());

  std::size_t last = 0;
  for (std::size_t j = 0; j < cols; ++j)
    for (const auto& row : matrix)
      if (row[j] != 0) last = j + 1;
  if (last == 0)
    throw Error(ErrorCode::empty_monomial, "monomial has degree zero");
  width_ = static_cast<std::uint32_t>(last);

  matrix_.assign(c_, std::vector<std::uint32_t>(width_));
  for (std::uint32_t i = 0; i < c_; ++i)
    for (std::uint32_t j = 0; j < width_; ++j)
      matrix_[i][j] = static_cast<std::uint32_t>(matrix[i][j]);

  for (std::uint32_t j = 0; j < width_; ++j) {
    std::uint64_t col = 0;
    for (std::uint32_t i = 0; i < c_; ++i) col += matrix_[i][j];
    if (col == 0) continue;
    if (col > std::numeric_limits<std::uint32_t>::max())
      throw Error(ErrorCode::invalid_argument, "column degree too large");
    mu_.push_back(j + 1);
    b_.push_back(static_cast<std::uint32_t>(col));
  }
  if (mu_.size() >= 2) delta_r_ = mu_.back() - mu_[mu_.size() - 2];
}

std::uint64_t OrbitMonomial::total_degree() const noexcept {
  return std::accumulate(b_.begin(), b_.end(), std::uint64_t{0});
}

std::uint32_t OrbitMonomial::exponent(std::uint32_t i, std::uint32_t j) const {
  return matrix_.at(i - 1).at(j - 1);
}

OrbitMonomial new_orbit(const std::vector<std::vector<std::int64_t>>& matrix) {
  return OrbitMonomial(matrix);
}

OrbitMonomial parent_orbit(const OrbitMonomial& orb) {
  if (orb.r() < 2)
    throw Error(ErrorCode::no_parent, "orbit with a single column has no parent");
  const std::uint32_t keep = orb.mu()[orb.r() - 2];
  std::vector<std::vector<std::int64_t>> m(orb.c(), std::vector<std::int64_t>(keep));
  for (std::uint32_t i = 0; i < orb.c(); ++i)
    for (std::uint32_t j = 0; j < keep; ++j) m[i][j] = orb.matrix()[i][j];
  return OrbitMonomial(m);
}

std::string to_monomial_string(const OrbitMonomial& orb) {
  std::string out;
  for (std::uint32_t j = 1; j <= orb.width(); ++j)
    for (std::uint32_t i = 1; i <= orb.c(); ++i) {
      const auto e = orb.exponent(i, j);
      if (e == 0) continue;
      if (!out.empty()) out += ' ';
      out += "x[" + std::to_string(i) + ',' + std::to_string(j) + ']';
      if (e != 1) out += '^' + std::to_string(e);
    }
  return out;
}

// ---------------------------------------------------------------- parsing

namespace {

class Cursor {
public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char ch) {
    if (peek() != ch) return false;
    ++pos_;
    return true;
  }
  void expect(char ch) {
    if (!accept(ch)) fail(std::string("expected '") + ch + "'");
  }
  std::int64_t integer() {
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    std::int64_t value = 0;
    std::size_t digits = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (value > (std::numeric_limits<std::int64_t>::max() - 9) / 10)
        throw ParseError(start, "integer out of range");
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
      ++digits;
    }
    if (digits == 0) throw ParseError(start, "expected an integer");
    return negative ? -value : value;
  }
  std::size_t position() const { return pos_; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(pos_, what);
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<std::vector<std::int64_t>> parse_matrix(Cursor& cur) {
  std::vector<std::vector<std::int64_t>> rows;
  cur.expect('[');
  do {
    const std::size_t row_pos = cur.position();
    cur.expect('[');
    std::vector<std::int64_t> row;
    if (!cur.accept(']')) {
      do row.push_back(cur.integer());
      while (cur.accept(','));
      cur.expect(']');
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError(row_pos, "matrix rows have different lengths");
    rows.push_back(std::move(row));
  } while (cur.accept(','));
  cur.expect(']');
  if (!cur.at_end()) cur.fail("trailing characters after matrix");
  return rows;
}

std::vector<std::vector<std::int64_t>> parse_monomial(Cursor& cur) {
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> factors;
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  bool first = true;
  while (!cur.at_end()) {
    if (!first) cur.accept('*');
    first = false;
    cur.skip_space();
    const std::size_t factor_pos = cur.position();
    if (!cur.accept('x')) cur.fail("expected a variable 'x[ROW,COL]'");
    cur.expect('[');
    const std::size_t row_pos = cur.position();
    const auto row = cur.integer();
    if (row < 1) throw ParseError(row_pos, "row index must be >= 1");
    cur.expect(',');
    const std::size_t col_pos = cur.position();
    const auto col = cur.integer();
    if (col < 1) throw ParseError(col_pos, "column index must be >= 1");
    cur.expect(']');
    std::int64_t exp = 1;
    if (cur.accept('^')) {
      const std::size_t exp_pos = cur.position();
      exp = cur.integer();
      if (exp < 0)
        throw Error(ErrorCode::negative_exponent,
                    "negative exponent at position " + std::to_string(exp_pos));
    }
    if (row > 4096 || col > 4096)
      throw ParseError(factor_pos, "variable index too large");
    factors[{row, col}] += exp;
    rows = std::max(rows, row);
    cols = std::max(cols, col);
  }
  if (factors.empty()) cur.fail("empty monomial");
  std::vector<std::vector<std::int64_t>> m(static_cast<std::size_t>(rows),
                                           std::vector<std::int64_t>(cols));
  for (const auto& [rc, e] : factors) m[rc.first - 1][rc.second - 1] = e;
  return m;
}

} // namespace

OrbitMonomial parse_orbit(std::string_view text) {
  Cursor cur(text);
  if (cur.at_end()) cur.fail("empty orbit specification");
  if (cur.peek() == '[') return OrbitMonomial(parse_matrix(cur));
  return OrbitMonomial(parse_monomial(cur));
}

// ---------------------------------------------------------------- ideals

MonomialIdealFinite MonomialIdealFinite::embed(std::uint32_t width) const {
  if (width < n)
    throw Error(ErrorCode::invalid_argument, "cannot embed into fewer columns");
  MonomialIdealFinite out{c, width, {}};
  out.generators.reserve(generators.size());
  for (const auto& g : generators) {
    Monomial m(static_cast<std::size_t>(c) * width);
    for (std::uint32_t i = 0; i < c; ++i)
      for (std::uint32_t j = 0; j < n; ++j) m[i * width + j] = g[i * n + j];
    out.generators.push_back(std::move(m));
  }
  return out;
}

std::string MonomialIdealFinite::generator_string(std::size_t k) const {
  const auto& g = generators.at(k);
  std::string out;
  for (std::uint32_t j = 0; j < n; ++j)
    for (std::uint32_t i = 0; i < c; ++i) {
      const auto e = g[i * n + j];
      if (e == 0) continue;
      if (!out.empty()) out += ' ';
      out += "x[" + std::to_string(i + 1) + ',' + std::to_string(j + 1) + ']';
      if (e != 1) out += '^' + std::to_string(e);
    }
  return out.empty() ? "1" : out;
}

std::vector<Monomial> minimalize(const std::vector<Monomial>& gens) {
  std::vector<Monomial> out;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    bool redundant = false;
    for (std::size_t l = 0; l < gens.size() && !redundant; ++l) {
      if (l == k || !divides(gens[l], gens[k])) continue;
      // Equal generators: keep the first occurrence only.
      redundant = gens[l] != gens[k] || l < k;
    }
    if (!redundant) out.push_back(gens[k]);
  }
  return out;
}

MonomialIdealFinite truncate(const OrbitMonomial& orb, std::uint32_t n) {
  MonomialIdealFinite ideal{orb.c(), n, {}};
  const std::uint32_t r = orb.r();
  const auto& mu = orb.mu();
  if (n < orb.width()) return ideal;

  // Placement columns j_1 < ... < j_r, enumerated lexicographically.
  std::vector<std::uint32_t> place(mu.begin(), mu.end());
  const std::size_t size = static_cast<std::size_t>(orb.c()) * n;
  while (true) {
    Monomial m(size);
    for (std::uint32_t k = 0; k < r; ++k)
      for (std::uint32_t i = 0; i < orb.c(); ++i)
        m[i * n + place[k] - 1] = orb.exponent(i + 1, mu[k]);
    ideal.generators.push_back(std::move(m));

    // Advance the rightmost slot that can move; reset everything after it to
    // its minimal admissible position.
    std::int64_t k = static_cast<std::int64_t>(r) - 1;
    for (; k >= 0; --k) {
      const std::uint32_t tail = mu.back() - mu[k];
      if (place[k] + 1 + tail <= n) break;
    }
    if (k < 0) break;
    ++place[k];
    for (std::uint32_t l = static_cast<std::uint32_t>(k) + 1; l < r; ++l)
      place[l] = place[l - 1] + (mu[l] - mu[l - 1]);
  }
  return ideal;
}

} // namespace eqhilb
