#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <stdexcept>

#include "runspec/closedform.hpp"

using namespace runspec;

TEST_CASE("query validation") {
  CHECK_THROWS_AS(RunCountQuery(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(RunCountQuery(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(RunCountQuery(4, 5), std::invalid_argument);
  CHECK_NOTHROW(RunCountQuery(4, 4));
  CHECK_NOTHROW(RunCountQuery(1, 1));
}

TEST_CASE("closed form reproduces the small tables") {
  // n = 2 .. 4 aggregate columns.
  CHECK(run_count_closed(RunCountQuery(2, 1)) == 2);
  CHECK(run_count_closed(RunCountQuery(2, 2)) == 1);
  CHECK(run_count_closed(RunCountQuery(3, 1)) == 5);
  CHECK(run_count_closed(RunCountQuery(3, 2)) == 2);
  CHECK(run_count_closed(RunCountQuery(3, 3)) == 1);
  CHECK(run_count_closed(RunCountQuery(4, 1)) == 12);
  CHECK(run_count_closed(RunCountQuery(4, 2)) == 5);
  CHECK(run_count_closed(RunCountQuery(4, 3)) == 2);
  CHECK(run_count_closed(RunCountQuery(4, 4)) == 1);
}

TEST_CASE("boundary value r_n(n) = 1") {
  for (std::uint32_t n : {1u, 2u, 5u, 17u, 63u, 200u}) {
    CHECK(run_count_closed(RunCountQuery(n, n)) == 1);
  }
}

TEST_CASE("closed form stays exact for large n") {
  // (n-i+3) * 2^(n-i-2) at n=200, i=100.
  CHECK(run_count_closed(RunCountQuery(200, 100)) == 103 * pow2(98));
  CHECK(run_count_closed(RunCountQuery(64, 1)) == 66 * pow2(61));
}

TEST_CASE("all four routes agree up to n = 64") {
  for (std::uint32_t n = 1; n <= 64; ++n) {
    for (std::uint32_t i = 1; i <= n; ++i) {
      const RunCountQuery q(n, i);
      const BigCount closed = run_count_closed(q);
      CHECK(run_count_recursive(q) == closed);
      CHECK(run_count_recursive_alt(q) == closed);
      CHECK(run_count_combinatorial(q) == closed);
    }
  }
}

TEST_CASE("routes agree at spot checks past the exhaustive range") {
  for (std::uint32_t n : {100u, 256u, 511u}) {
    for (std::uint32_t i : {1u, 2u, n / 2, n - 1, n}) {
      const RunCountQuery q(n, i);
      const BigCount closed = run_count_closed(q);
      CHECK(run_count_recursive(q) == closed);
      CHECK(run_count_recursive_alt(q) == closed);
      CHECK(run_count_combinatorial(q) == closed);
    }
  }
}

TEST_CASE("unrolled recursion is split-point independent") {
  for (std::uint32_t n = 3; n <= 32; ++n) {
    for (std::uint32_t i = 1; i + 2 <= n; ++i) {
      const RunCountQuery q(n, i);
      const BigCount closed = run_count_closed(q);
      for (std::uint32_t k = 0; k + i + 1 <= n; ++k) {
        CHECK(run_count_unrolled(q, k) == closed);
      }
    }
  }
  CHECK_THROWS_AS(run_count_unrolled(RunCountQuery(4, 3), 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_count_unrolled(RunCountQuery(4, 4), 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_count_unrolled(RunCountQuery(6, 2), 4),
                  std::invalid_argument);
}

TEST_CASE("extended binomial convention") {
  CHECK(binomial_extended(-1, -1) == 1);
  CHECK(binomial_extended(0, -1) == 0);
  CHECK(binomial_extended(5, -1) == 0);
  CHECK(binomial_extended(0, 0) == 1);
  CHECK(binomial_extended(4, 2) == 6);
  CHECK(binomial_extended(5, 7) == 0);
  CHECK(binomial_extended(52, 26) == BigCount("495918532948104"));
  CHECK_THROWS_AS(binomial_extended(-2, 0), std::invalid_argument);
  CHECK_THROWS_AS(binomial_extended(3, -2), std::invalid_argument);
  CHECK_THROWS_AS(binomial_extended(-1, 0), std::invalid_argument);
}

TEST_CASE("totals match the known values") {
  CHECK(total_runs_closed(1) == 1);
  CHECK(total_runs_closed(2) == 3);
  CHECK(total_runs_closed(3) == 8);
  CHECK(total_runs_closed(4) == 20);
  CHECK(total_runs_closed(12) == 13312);
  CHECK(total_runs_closed(16) == 278528);
  CHECK(total_runs_closed(100) == 101 * pow2(98));
  CHECK_THROWS_AS(total_runs_closed(0), std::invalid_argument);
}

TEST_CASE("combinatorial totals agree with the closed product") {
  for (std::uint32_t n = 1; n <= 64; ++n) {
    CHECK(total_runs_combinatorial(n) == total_runs_closed(n));
  }
  CHECK(total_runs_combinatorial(300) == total_runs_closed(300));
  CHECK_THROWS_AS(total_runs_combinatorial(0), std::invalid_argument);
}

TEST_CASE("totals are the row sums of the counts") {
  for (std::uint32_t n = 1; n <= 48; ++n) {
    BigCount sum = 0;
    for (std::uint32_t i = 1; i <= n; ++i) {
      sum += run_count_closed(RunCountQuery(n, i));
    }
    CHECK(sum == total_runs_closed(n));
  }
}

TEST_CASE("fraction of length-2 runs is constant") {
  CHECK(run_length_fraction(RunCountQuery(4, 2)) == make_rational(1, 4));
  for (std::uint32_t n = 3; n <= 128; ++n) {
    CHECK(run_length_fraction(RunCountQuery(n, 2)) == make_rational(1, 4));
  }
  CHECK(run_length_fraction(RunCountQuery(4, 1)) == make_rational(3, 5));
  CHECK(run_length_fraction(RunCountQuery(1, 1)) == 1);
  // n = 2 sits below the plateau: f_2(2) = 1/3.
  CHECK(run_length_fraction(RunCountQuery(2, 2)) == make_rational(1, 3));
}
