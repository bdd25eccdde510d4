#include "runspec/sequences.hpp"

#include <stdexcept>

#include "runspec/closedform.hpp"

namespace runspec {

BigCount a045623(std::uint64_t j) {
  if (j == 0) return 1;
  // (j+3) * 2^(j-2), evaluated as (j+3) * 2^j / 4 so j = 1 stays integral.
  return BigCount(j + 3) * pow2(j) / 4;
}

BigCount a001792(std::uint64_t j) {
  return BigCount(j + 2) * pow2(j) / 2;
}

CrossCheckReport cross_check(std::uint64_t n_max) {
  if (n_max < 2) {
    throw std::invalid_argument("cross_check: n_max must be >= 2");
  }
  CrossCheckReport report;
  report.n_max = n_max;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const BigCount total = total_runs_closed(static_cast<std::uint32_t>(n));
    const BigCount b = a001792(n - 1);
    ++report.checks;
    if (total != b) {
      report.first_failure = "t(" + std::to_string(n) + ") = " +
                             to_decimal(total) + " but a001792(" +
                             std::to_string(n - 1) + ") = " + to_decimal(b);
      return report;
    }
    for (std::uint64_t i = 1; i + 1 <= n; ++i) {
      const BigCount r = run_count_closed(RunCountQuery(
          static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(i)));
      const BigCount a = a045623(n - i);
      ++report.checks;
      if (r != a) {
        report.first_failure = "r(" + std::to_string(n) + "," +
                               std::to_string(i) + ") = " + to_decimal(r) +
                               " but a045623(" + std::to_string(n - i) +
                               ") = " + to_decimal(a);
        return report;
      }
    }
  }
  report.ok = true;
  return report;
}

}  // namespace runspec
