#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "eqhilb/verify.hpp"
#include "support.hpp"

using namespace eqhilb;
using eqhilb::testing::error_of;

namespace {

void require_all_pass(const VerificationReport& report) {
  for (const CheckResult& check : report.checks) {
    CAPTURE(check.name);
    CAPTURE(check.detail);
    CHECK(check.status != CheckStatus::failed);
  }
  CHECK(report.passed());
  CHECK(report.first_failure() == nullptr);
}

} // namespace

TEST_CASE("worked examples verify") {
  require_all_pass(verify_orbit(new_orbit({{0, 0, 2, 0, 4}}), {}));
  require_all_pass(verify_orbit(new_orbit({{0, 0, 2, 0, 4, 0, 0, 1}}), {10, 12}));
  require_all_pass(verify_orbit(new_orbit({{1}, {1}}), {}));
  require_all_pass(verify_orbit(new_orbit({{1}}), {}));
}

TEST_CASE("report layout") {
  const VerificationReport report = verify_orbit(new_orbit({{0, 0, 2, 0, 4}}), {6, 8});
  std::vector<std::string> names;
  for (const auto& c : report.checks) names.push_back(c.name);
  CHECK(names == std::vector<std::string>{
                     "gtilde-divisibility", "reducedness", "small-r-numerator",
                     "expand-vs-oracle", "degree-sequence", "dimension", "recursion-identity",
                     "taylor-vs-pivot", "degree-closed-form", "degree-recursion",
                     "denominator-factors", "degree-growth"});
}

TEST_CASE("skips what does not apply") {
  // r = 4 has no small-r formula; repeated b has no partial fractions
  const VerificationReport report = verify_orbit(new_orbit({{1, 1, 1, 1}}), {6, 6});
  CHECK(report.passed());
  for (const auto& c : report.checks)
    if (c.name == "small-r-numerator" || c.name == "degree-closed-form")
      CHECK(c.status == CheckStatus::skipped);
}

TEST_CASE("bad bounds") {
  CHECK(error_of([] { verify_orbit(new_orbit({{1}}), {-1, 3}); }) ==
        ErrorCode::invalid_truncation);
}

TEST_CASE("corpus verifies") {
  for (const OrbitMonomial& orb : testing::fuzz_corpus(40, 99)) {
    CAPTURE(to_monomial_string(orb));
    require_all_pass(verify_orbit(orb, {7, 8}));
  }
}
