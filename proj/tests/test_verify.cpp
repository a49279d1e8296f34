#include <catch2/catch_amalgamated.hpp>

#include "spherecurves/verify.hpp"

using namespace spherecurves;

namespace {

void expect_clean(Suite s, int n, long pairs = 300) {
  SuiteReport rep = run_suite(s, n, pairs);
  INFO(rep.suite << ": " << rep.failures.size() << " failures of "
                 << rep.instances);
  if (!rep.failures.empty()) {
    INFO("first: " << rep.failures[0].instance << " expected "
                   << rep.failures[0].expected << " got "
                   << rep.failures[0].got);
  }
  CHECK(rep.ok());
  CHECK(rep.instances > 0);
}

}  // namespace

TEST_CASE("main suite on the small corpus") { expect_clean(Suite::Main, 3); }
TEST_CASE("image suite on the small corpus") { expect_clean(Suite::Image, 3); }
TEST_CASE("fin suite on the small corpus") { expect_clean(Suite::Fin, 3); }
TEST_CASE("smoothing suite on the small corpus") {
  expect_clean(Suite::Smoothing, 3);
}
TEST_CASE("fig1b suite on the small corpus") { expect_clean(Suite::Fig1b, 3); }
TEST_CASE("symbols suite on the small corpus") {
  expect_clean(Suite::Symbols, 3);
}
TEST_CASE("order2 suite on the small corpus") {
  expect_clean(Suite::Order2, 2, 250);
}
TEST_CASE("relations suite") { expect_clean(Suite::Relations, 0); }

TEST_CASE("suite names round trip") {
  for (Suite s : {Suite::Main, Suite::Image, Suite::Fin, Suite::Symbols,
                  Suite::Order2, Suite::Smoothing, Suite::Fig1b,
                  Suite::Relations})
    CHECK(suite_from_name(to_string(s)) == s);
  CHECK_THROWS_AS(suite_from_name("bogus"), MalformedCode);
}
