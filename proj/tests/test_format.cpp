#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "eqhilb/closed_form.hpp"
#include "eqhilb/format.hpp"
#include "support.hpp"

using namespace eqhilb;
using eqhilb::testing::error_of;

TEST_CASE("polynomial text") {
  CHECK(format_poly(IntPoly1::one_minus_t_pow(4)) == "1 - 4*t + 6*t^2 - 4*t^3 + t^4");
  CHECK(format_poly(IntPoly1()) == "0");
  CHECK(format_poly(IntPoly2(IntPoly1::one_minus_t_pow(1)) + IntPoly2::monomial(1, 1, 3)) ==
        "(1 - t) + s*(t^3)");
  CHECK(format_poly(IntPoly2::s()) == "s");
}

TEST_CASE("series text") {
  CHECK(format_series(equivariant_series(new_orbit({{1}}))) == "1 / (1 - s)");
  CHECK(format_series(equivariant_series(new_orbit({{2}}))) == "1 / (1 - s*(1 + t))");
  CHECK(format_series(equivariant_series(new_orbit({{1}, {1}}))) ==
        "1 / (1 - t)^(-1) * ((1 - t) - s*(1 + t))");
}

TEST_CASE("table text") {
  const SeriesTable table = expand(equivariant_series(new_orbit({{2}})), 2, 2);
  CHECK(format_table(table) == "n=0: 1 0 0\nn=1: 1 1 0\nn=2: 1 2 1\n");
}

TEST_CASE("json round trip") {
  for (const OrbitMonomial& orb : testing::fuzz_corpus(40)) {
    CAPTURE(to_monomial_string(orb));
    const FactoredRational2 h = equivariant_series(orb);
    SeriesDocument doc{orb, h, expand(h, 4, 5)};
    const SeriesDocument back = series_from_json(series_to_json(doc));
    CHECK(back.orbit == orb);
    CHECK(back.series == h);
    REQUIRE(back.expansion.has_value());
    CHECK(*back.expansion == *doc.expansion);

    const SeriesDocument bare = series_from_json(series_to_json({orb, h, std::nullopt}, -1));
    CHECK_FALSE(bare.expansion.has_value());
  }
}

TEST_CASE("json keeps big integers exact") {
  const OrbitMonomial orb = new_orbit({{1}, {0}, {0}});
  const FactoredRational2 h = equivariant_series(orb);
  SeriesDocument doc{orb, h, expand(h, 30, 40)};
  const std::string text = series_to_json(doc);
  CHECK(series_from_json(text).expansion == doc.expansion);
  CHECK(doc.expansion->at(30, 40) > Integer("18446744073709551616"));
}

TEST_CASE("json errors") {
  CHECK(error_of([] { series_from_json("{"); }) == ErrorCode::parse_error);
  CHECK(error_of([] { series_from_json("{\"orbit\": 3}"); }) == ErrorCode::parse_error);
  CHECK(error_of([] { series_from_json("[]"); }) == ErrorCode::parse_error);
}
