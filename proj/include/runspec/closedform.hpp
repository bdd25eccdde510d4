#pragma once

#include <cstdint>

#include "runspec/bignum.hpp"

namespace runspec {

/// A (string length, run length) pair; construction enforces 1 <= i <= n.
class RunCountQuery {
 public:
  RunCountQuery(std::uint32_t n, std::uint32_t run_length);

  std::uint32_t n() const { return n_; }
  std::uint32_t run_length() const { return i_; }

 private:
  std::uint32_t n_;
  std::uint32_t i_;
};

// Total runs of ones of length i over all binary n-strings, by four mutually
// independent routes. All four must agree exactly; the enumeration module
// provides the brute-force ground truth.

/// Closed form (n-i+3)*2^(n-i-2) for i <= n-1, and 1 at i = n. The boundary
/// power is evaluated as (n-i+3)*2^(n-i)/4 to stay in integer arithmetic.
BigCount run_count_closed(const RunCountQuery& q);

/// Recursion on the string length: value(m) = 2*value(m-1) + 2^(m-i-2),
/// anchored at value(i+1) = 2. Iterative, so deep n is fine.
BigCount run_count_recursive(const RunCountQuery& q);

/// Recursion on the run length: value(i) = 2*value(i+1) + 2^(n-i-2),
/// anchored at value(n-1) = 2 (and value(n) = 1 directly).
BigCount run_count_recursive_alt(const RunCountQuery& q);

/// Partially unrolled recursion 2^k * r_{n-k}(i) + k*2^(n-i-2); the result is
/// independent of k. Requires 1 <= i < n-1 and 0 <= k < n-i.
BigCount run_count_unrolled(const RunCountQuery& q, std::uint32_t k);

/// Combinatorial sum over base-partition sizes p:
/// sum_{p=0}^{n-i} (p+1) * C(n-i-1, p-1). The p = 0 start makes the i = n
/// case come out of the same sum via C(-1,-1) = 1.
BigCount run_count_combinatorial(const RunCountQuery& q);

/// Binomial coefficient extended by C(-1,-1) = 1 and C(t,-1) = 0 for t >= 0.
/// Accepts a >= 0 with b >= -1, plus the (-1,-1) pair; anything else throws.
BigCount binomial_extended(std::int64_t a, std::int64_t b);

/// Total runs of every length over all binary n-strings: (n+1)*2^(n-2),
/// evaluated as (n+1)*2^n/4.
BigCount total_runs_closed(std::uint32_t n);

/// Same total via the partition count sum_{p=1}^{n} p * C(n-1, p-1).
BigCount total_runs_combinatorial(std::uint32_t n);

/// Fraction of all runs that have length i, as an exact reduced rational.
ExactRational run_length_fraction(const RunCountQuery& q);

}  // namespace runspec
