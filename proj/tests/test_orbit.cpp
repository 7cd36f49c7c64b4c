#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "eqhilb/orbit.hpp"
#include "support.hpp"

using namespace eqhilb;
using eqhilb::testing::error_of;

namespace {

using U = std::vector<std::uint32_t>;

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// exponent vector in K[X_n] with c = 1
Monomial row_monomial(std::uint32_t n, std::initializer_list<std::pair<int, std::uint32_t>> terms) {
  Monomial m(n, 0);
  for (auto [j, e] : terms) m[j - 1] = e;
  return m;
}

} // namespace

TEST_CASE("new_orbit column data") {
  const OrbitMonomial a = new_orbit({{0, 0, 2, 0, 4}});
  CHECK(a.c() == 1);
  CHECK(a.mu() == U{3, 5});
  CHECK(a.b() == U{2, 4});
  CHECK(a.width() == 5);
  CHECK(a.r() == 2);
  CHECK(a.delta_r() == 2);
  CHECK(a.total_degree() == 6);

  const OrbitMonomial x1 = new_orbit({{1}});
  CHECK(x1.mu() == U{1});
  CHECK(x1.b() == U{1});
  CHECK(x1.delta_r() == 0);

  const OrbitMonomial m = new_orbit({{2, 0}, {0, 1}});
  CHECK(m.c() == 2);
  CHECK(m.mu() == U{1, 2});
  CHECK(m.b() == U{2, 1});
  CHECK(m.exponent(2, 2) == 1);

  // trailing zero columns are dropped
  CHECK(new_orbit({{0, 3, 0, 0}}).width() == 2);
}

TEST_CASE("new_orbit rejects bad matrices") {
  CHECK(error_of([] { new_orbit({{0, 0}}); }) == ErrorCode::empty_monomial);
  CHECK(error_of([] { new_orbit({}); }) == ErrorCode::empty_monomial);
  CHECK(error_of([] { new_orbit({{1, -1}}); }) == ErrorCode::negative_exponent);
  CHECK(error_of([] { new_orbit({{1, 0}, {1}}); }) == ErrorCode::invalid_argument);
}

TEST_CASE("parse_orbit") {
  const OrbitMonomial expected = new_orbit({{0, 0, 2, 0, 4}});
  CHECK(parse_orbit("x[1,3]^2 x[1,5]^4") == expected);
  CHECK(parse_orbit("x[1,3]^2*x[1,5]^4") == expected);
  CHECK(parse_orbit("  x[1,5]^4 x[1,3] x[1,3] ") == expected);
  CHECK(parse_orbit("[[0,0,2,0,4]]") == expected);
  CHECK(parse_orbit("[[1],[1]]") == new_orbit({{1}, {1}}));
  CHECK(parse_orbit("x[1,1] x[2,1]") == new_orbit({{1}, {1}}));
  CHECK(parse_orbit("x[1,1] x[3,1]^0").c() == 3);
  CHECK(to_monomial_string(expected) == "x[1,3]^2 x[1,5]^4");
  CHECK(parse_orbit(to_monomial_string(new_orbit({{2, 0, 1}, {0, 0, 3}}))) ==
        new_orbit({{2, 0, 1}, {0, 0, 3}}));

  try {
    parse_orbit("x[1,3]^2 y[1,5]");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 9);
  }
  CHECK(error_of([] { parse_orbit("[[1,2],[3]]"); }).has_value());
  CHECK(error_of([] { parse_orbit("x[0,1]"); }) == ErrorCode::parse_error);
  CHECK(error_of([] { parse_orbit(""); }) == ErrorCode::parse_error);
  CHECK(error_of([] { parse_orbit("[[1,-2]]"); }) == ErrorCode::negative_exponent);
  CHECK(error_of([] { parse_orbit("x[1,1]^0"); }) == ErrorCode::empty_monomial);
}

TEST_CASE("truncate boundary of x3^2 x5^4 x8") {
  const OrbitMonomial orb = new_orbit({{0, 0, 2, 0, 4, 0, 0, 1}});
  for (std::uint32_t n = 0; n < 8; ++n) CHECK(truncate(orb, n).generators.empty());
  const auto i8 = truncate(orb, 8);
  REQUIRE(i8.generators.size() == 1);
  CHECK(i8.generators[0] == row_monomial(8, {{3, 2}, {5, 4}, {8, 1}}));
  const auto i9 = truncate(orb, 9);
  REQUIRE(i9.generators.size() == 4);
  CHECK(i9.generator_string(0) == "x[1,3]^2 x[1,5]^4 x[1,8]");
  CHECK(i9.generator_string(3) == "x[1,4]^2 x[1,6]^4 x[1,9]");
}

TEST_CASE("truncate x3^2 x5^4 at n = 6") {
  const auto ideal = truncate(new_orbit({{0, 0, 2, 0, 4}}), 6);
  CHECK(ideal.c == 1);
  CHECK(ideal.n == 6);
  CHECK(ideal.generators == std::vector<Monomial>{row_monomial(6, {{3, 2}, {5, 4}}),
                                                  row_monomial(6, {{3, 2}, {6, 4}}),
                                                  row_monomial(6, {{4, 2}, {6, 4}})});
}

TEST_CASE("truncation sizes and minimality on the corpus") {
  for (const OrbitMonomial& orb : testing::fuzz_corpus()) {
    CAPTURE(to_monomial_string(orb));
    for (std::uint32_t n = 0; n <= 8; ++n) {
      const auto ideal = truncate(orb, n);
      const std::uint64_t expected =
          n + 1 < orb.width() ? 0 : binomial(n - orb.width() + orb.r(), orb.r());
      CHECK(ideal.generators.size() == expected);
      CHECK(minimalize(ideal.generators) == ideal.generators);
      for (const Monomial& g : ideal.generators) {
        CHECK(g.size() == ideal.nvars());
        CHECK(total_degree(g) == orb.total_degree());
      }
    }
  }
}

TEST_CASE("truncation recursion at generator level") {
  // I_n = I_{n-1} + x_{., n}^{a_r} * J_{n - delta_r}, with J the parent orbit
  for (const OrbitMonomial& orb : testing::fuzz_corpus()) {
    if (orb.r() < 2) continue;
    CAPTURE(to_monomial_string(orb));
    const OrbitMonomial parent = parent_orbit(orb);
    for (std::uint32_t n = orb.delta_r(); n <= 8; ++n) {
      const auto lhs = truncate(orb, n);
      std::vector<Monomial> rhs = truncate(orb, n - 1).embed(n).generators;
      for (Monomial m : truncate(parent, n - orb.delta_r()).embed(n).generators) {
        for (std::uint32_t i = 1; i <= orb.c(); ++i)
          m[(i - 1) * n + (n - 1)] += orb.exponent(i, orb.width());
        rhs.push_back(m);
      }
      auto sorted = [](std::vector<Monomial> v) {
        std::sort(v.begin(), v.end());
        return v;
      };
      CHECK(sorted(minimalize(rhs)) == sorted(lhs.generators));
    }
  }
}

TEST_CASE("embed keeps variables in place") {
  MonomialIdealFinite ideal{2, 2, {Monomial{1, 0, 0, 3}}};
  const auto wide = ideal.embed(4);
  CHECK(wide.nvars() == 8);
  CHECK(wide.generators[0] == Monomial{1, 0, 0, 0, 0, 3, 0, 0});
  CHECK(ideal.generator_string(0) == "x[1,1] x[2,2]^3");
}

TEST_CASE("parent_orbit") {
  CHECK(parent_orbit(new_orbit({{0, 0, 2, 0, 4}})) == new_orbit({{0, 0, 2}}));
  CHECK(parent_orbit(new_orbit({{0, 0, 2, 0, 4, 0, 0, 1}})) == new_orbit({{0, 0, 2, 0, 4}}));
  CHECK(parent_orbit(new_orbit({{1, 2}, {0, 1}})).c() == 2);
  CHECK(error_of([] { parent_orbit(new_orbit({{1}})); }) == ErrorCode::no_parent);
}

TEST_CASE("minimalize") {
  CHECK(minimalize({{2, 0}, {2, 1}}) == std::vector<Monomial>{{2, 0}});
  CHECK(minimalize({{2, 1}, {2, 0}}) == std::vector<Monomial>{{2, 0}});
  CHECK(minimalize({}).empty());
  CHECK(minimalize({{1, 1}, {1, 1}, {0, 2}}) == std::vector<Monomial>{{1, 1}, {0, 2}});
  CHECK(lcm({1, 3}, {2, 0}) == Monomial{2, 3});
  CHECK(divides({1, 0}, {1, 2}));
  CHECK_FALSE(divides({1, 3}, {1, 2}));
}
