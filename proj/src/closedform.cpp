#include "runspec/closedform.hpp"

#include <stdexcept>

namespace runspec {

RunCountQuery::RunCountQuery(std::uint32_t n, std::uint32_t run_length)
    : n_(n), i_(run_length) {
  if (n < 1 || run_length < 1 || run_length > n) {
    throw std::invalid_argument("RunCountQuery: need 1 <= run length <= n");
  }
}

BigCount run_count_closed(const RunCountQuery& q) {
  const std::uint32_t n = q.n();
  const std::uint32_t i = q.run_length();
  if (i == n) {
    return 1;
  }
  BigCount value = pow2(n - i) * static_cast<unsigned long>(n - i + 3);
  value /= 4;  // exact: n-i = 1 gives 4*2, larger gaps carry the 2^2 factor
  return value;
}

BigCount run_count_recursive(const RunCountQuery& q) {
  const std::uint32_t n = q.n();
  const std::uint32_t i = q.run_length();
  if (i == n) {
    return 1;
  }
  BigCount value = 2;  // runs of length i over all (i+1)-strings
  BigCount power = 1;  // 2^(m-i-2), starting at m = i+2
  for (std::uint32_t m = i + 2; m <= n; ++m) {
    value = 2 * value + power;
    power <<= 1;
  }
  return value;
}

BigCount run_count_recursive_alt(const RunCountQuery& q) {
  const std::uint32_t n = q.n();
  const std::uint32_t i = q.run_length();
  if (i == n) {
    return 1;
  }
  BigCount value = 2;  // runs of length n-1
  if (i == n - 1) {
    return value;
  }
  BigCount power = 1;  // 2^(n-j-2), starting at j = n-2
  for (std::uint32_t j = n - 2;; --j) {
    value = 2 * value + power;
    if (j == i) {
      break;
    }
    power <<= 1;
  }
  return value;
}

BigCount run_count_unrolled(const RunCountQuery& q, std::uint32_t k) {
  const std::uint32_t n = q.n();
  const std::uint32_t i = q.run_length();
  if (i + 1 >= n) {
    throw std::invalid_argument("run_count_unrolled: requires i < n-1");
  }
  if (k >= n - i) {
    throw std::invalid_argument("run_count_unrolled: k out of range");
  }
  const BigCount residual = run_count_recursive(RunCountQuery(n - k, i));
  return pow2(k) * residual +
         pow2(n - i - 2) * static_cast<unsigned long>(k);
}

BigCount run_count_combinatorial(const RunCountQuery& q) {
  const std::int64_t gap = static_cast<std::int64_t>(q.n()) - q.run_length();
  BigCount sum = 0;
  for (std::int64_t p = 0; p <= gap; ++p) {
    sum += binomial_extended(gap - 1, p - 1) *
           static_cast<unsigned long>(p + 1);
  }
  return sum;
}

BigCount binomial_extended(std::int64_t a, std::int64_t b) {
  if (a < -1 || b < -1 || (a == -1 && b >= 0)) {
    throw std::invalid_argument("binomial_extended: unsupported arguments");
  }
  if (a == -1) {
    return 1;  // C(-1,-1)
  }
  if (b == -1 || b > a) {
    return 0;
  }
  BigCount result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return result;
}

BigCount total_runs_closed(std::uint32_t n) {
  if (n < 1) {
    throw std::invalid_argument("total_runs_closed: n must be >= 1");
  }
  BigCount value = pow2(n) * static_cast<unsigned long>(n + 1);
  value /= 4;
  return value;
}

BigCount total_runs_combinatorial(std::uint32_t n) {
  if (n < 1) {
    throw std::invalid_argument("total_runs_combinatorial: n must be >= 1");
  }
  BigCount sum = 0;
  for (std::uint32_t p = 1; p <= n; ++p) {
    sum += binomial_extended(static_cast<std::int64_t>(n) - 1, p - 1) *
           static_cast<unsigned long>(p);
  }
  return sum;
}

ExactRational run_length_fraction(const RunCountQuery& q) {
  return make_rational(run_count_closed(q), total_runs_closed(q.n()));
}

}  // namespace runspec
