#include "doctest.h"
#include "liftfb/selftest.hpp"

TEST_CASE("selftest suite is clean and deterministic") {
  const auto results = liftfb::run_selftest(17);
  CHECK(results.size() >= 12);
  for (const auto& r : results) {
    INFO(r.family, ": ", r.witness);
    CHECK(r.failures == 0);
    CHECK(r.cases > 0);
  }
  // deterministic for a fixed seed
  const auto again = liftfb::run_selftest(17);
  REQUIRE(again.size() == results.size());
  for (std::size_t i = 0; i < results.size(); ++i) {
    CHECK(again[i].family == results[i].family);
    CHECK(again[i].failures == results[i].failures);
    CHECK(again[i].cases == results[i].cases);
  }
}
