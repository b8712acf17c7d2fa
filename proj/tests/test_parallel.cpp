#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

#include "pqknot/laurent.hpp"
#include "pqknot/parallel.hpp"
#include "pqknot/verify.hpp"

using namespace pqknot;

TEST_CASE("first_failure: parallel kernel matches the serial reference") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const long size = std::uniform_int_distribution<long>(0, 300)(rng);
    std::vector<char> ok(static_cast<std::size_t>(size) + 1, 1);
    const int bad = std::uniform_int_distribution<int>(0, 4)(rng);
    for (int b = 0; b < bad && size > 0; ++b) ok[std::uniform_int_distribution<long>(1, size)(rng)] = 0;
    auto check = [&](long i) { return ok[static_cast<std::size_t>(i)] != 0; };
    REQUIRE(first_failure_parallel(1, size, check) == first_failure_serial(1, size, check));
  }
}

TEST_CASE("first_failure: empty range and exceptions") {
  auto never = [](long) { return false; };
  CHECK_FALSE(first_failure(5, 4, never, Execution::parallel).has_value());
  CHECK_FALSE(first_failure(5, 4, never, Execution::serial).has_value());

  auto throws_at_7 = [](long i) {
    if (i == 7) throw std::runtime_error("boom");
    return i != 20;
  };
  CHECK_THROWS_AS(first_failure(1, 30, throws_at_7, Execution::parallel), std::runtime_error);
  CHECK_THROWS_AS(first_failure(1, 30, throws_at_7, Execution::serial), std::runtime_error);
  // A smaller plain failure hides a later throw.
  auto fails_at_3 = [](long i) {
    if (i == 7) throw std::runtime_error("boom");
    return i != 3;
  };
  CHECK(first_failure(1, 30, fails_at_3, Execution::parallel) == 3);
}

TEST_CASE("verify suites: serial and parallel reports agree") {
  for (const Suite s : {Suite::recurrence, Suite::delta_identity, Suite::homfly_factor, Suite::coeff_maps}) {
    const SuiteReport serial = run_suite(s, 40, Execution::serial);
    const SuiteReport parallel = run_suite(s, 40, Execution::parallel);
    REQUIRE(serial.checks.size() == parallel.checks.size());
    for (std::size_t i = 0; i < serial.checks.size(); ++i) {
      CHECK(serial.checks[i].name == parallel.checks[i].name);
      CHECK(serial.checks[i].cases == parallel.checks[i].cases);
      CHECK(serial.checks[i].passed == parallel.checks[i].passed);
    }
    CHECK(parallel.passed());
  }
}

TEST_CASE("suite names") {
  CHECK(suite_from_name("delta-identity") == Suite::delta_identity);
  CHECK(suite_name(Suite::coeff_maps) == "coeff-maps");
  CHECK_FALSE(suite_from_name("everything").has_value());
  CHECK_THROWS_AS(run_suite(Suite::all, 0), Error);
}

TEST_CASE("the all suite at the base case") {
  const SuiteReport r = run_suite(Suite::all, 1);
  CHECK(r.passed());
  CHECK(r.failures() == 0);
  CHECK(r.checks.size() == 32);
}
