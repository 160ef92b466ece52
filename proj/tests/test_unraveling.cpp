#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "lemons/unraveling.hpp"

using namespace lemons;

TEST_SUITE("unraveling") {

TEST_CASE("one unraveling step divides the cutoff by 2 pi") {
  CHECK(std::abs(unravel_step(1.0, MarketParams::checked(0.75)) - 1.0 / 1.5) <= 1e-15);
  CHECK(std::abs(unravel_step(0.5, MarketParams::checked(0.75)) - 1.0 / 3.0) <= 1e-15);
  // pi = 1/2 is stationary
  CHECK(unravel_step(0.42, MarketParams::checked(0.5, true)) == 0.42);
  CHECK_THROWS_AS(unravel_step(1.0, MarketParams{0.45}), std::domain_error);
  CHECK_THROWS_AS(unravel_step(0.0, MarketParams::checked(0.75)),
                  std::invalid_argument);
  CHECK_THROWS_AS(unravel_step(1.5, MarketParams::checked(0.75)),
                  std::invalid_argument);
}

TEST_CASE("trace at pi=0.75 converges below 0.02 after ten rounds") {
  const auto trace = unravel_trace(MarketParams::checked(0.75), 0.02, 100);
  CHECK(trace.converged);
  CHECK(trace.rounds == 10);
  REQUIRE(trace.cutoffs.size() == 11);
  CHECK(trace.cutoffs.front() == 1.0);
  CHECK(std::abs(trace.cutoffs.back() - 0.017341529915832613) <= 1e-15);
  CHECK(trace.limit == 0.0);
  for (std::size_t n = 0; n < trace.cutoffs.size(); ++n) {
    CHECK(trace.buyer_offers[n] == trace.cutoffs[n] / 2.0);
  }
}

TEST_CASE("trace at pi=0.6 needs 38 rounds to pass 1e-3") {
  const auto trace = unravel_trace(MarketParams::checked(0.6), 1e-3, 100);
  CHECK(trace.converged);
  CHECK(trace.rounds == 38);
  CHECK(trace.cutoffs.back() < 1e-3);
  CHECK(trace.cutoffs[trace.cutoffs.size() - 2] >= 1e-3);
}

TEST_CASE("pi=1/2 is a stationary non-converging trace") {
  const auto trace = unravel_trace(MarketParams::checked(0.5, true), 0.5, 10);
  CHECK_FALSE(trace.converged);
  CHECK(trace.rounds == 10);
  REQUIRE(trace.cutoffs.size() == 11);
  for (double k : trace.cutoffs) CHECK(k == 1.0);
  CHECK(trace.limit == 1.0);
}

TEST_CASE("iterated cutoffs match the closed form 1/(2 pi)^n") {
  for (int tenths = 55; tenths <= 95; tenths += 5) {
    const double pi = tenths / 100.0;
    const auto trace = unravel_trace(MarketParams::checked(pi), 1e-300, 60);
    REQUIRE(trace.cutoffs.size() == 61);
    for (int n = 0; n <= 60; ++n) {
      CHECK(std::abs(trace.cutoffs[static_cast<std::size_t>(n)] -
                     std::pow(2.0 * pi, -n)) <= kTol);
    }
    // strictly decreasing for pi > 1/2
    for (std::size_t n = 1; n < trace.cutoffs.size(); ++n) {
      CHECK(trace.cutoffs[n] < trace.cutoffs[n - 1]);
    }
  }
}

TEST_CASE("free disclosure halves the nondisclosure pool each round") {
  const auto trace = free_disclosure_unravel(1e-3, 200);
  CHECK(trace.converged);
  CHECK(trace.rounds == 9);
  REQUIRE(trace.cutoffs.size() == 10);
  CHECK(trace.cutoffs[0] == 0.5);
  CHECK(trace.cutoffs[1] == 0.25);
  CHECK(trace.cutoffs[2] == 0.125);
  CHECK(trace.cutoffs.back() == std::pow(2.0, -10));
  CHECK(trace.limit == 0.0);
}

TEST_CASE("free disclosure with a loose tolerance stops after one step") {
  const auto trace = free_disclosure_unravel(0.5, 200);
  CHECK(trace.converged);
  CHECK(trace.rounds == 1);
  CHECK(trace.cutoffs.back() == 0.25);
}

TEST_CASE("iteration arguments are validated") {
  const auto params = MarketParams::checked(0.75);
  CHECK_THROWS_AS(unravel_trace(params, 0.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(unravel_trace(params, 1e-3, 0), std::invalid_argument);
  CHECK_THROWS_AS(free_disclosure_unravel(-1.0, 10), std::invalid_argument);
}

}  // TEST_SUITE
