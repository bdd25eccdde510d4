// Acceptance gate: ten end-to-end criteria, one line of output each.
// Usage: acceptance <path-to-runspectrum-cli>
// Exits 0 only if every criterion passes within its time budget.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "runspec/bijection.hpp"
#include "runspec/closedform.hpp"
#include "runspec/core.hpp"
#include "runspec/enumeration.hpp"
#include "runspec/sequences.hpp"
#include "runspec/stochastic.hpp"

using namespace runspec;

namespace {

std::string g_cli;

struct CliResult {
  std::string out;
  int status = -1;
};

CliResult run_cli(const std::string& args) {
  CliResult result;
  const std::string cmd = "\"" + g_cli + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return result;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
    result.out.append(buf, got);
  }
  const int rc = pclose(pipe);
  if (WIFEXITED(rc)) result.status = WEXITSTATUS(rc);
  return result;
}

// Pulls the count column out of the plain `table` rendering.
bool parse_table(const std::string& text, std::vector<long>& counts,
                 long& total) {
  counts.clear();
  total = -1;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    long i = 0, c = 0;
    if (std::sscanf(line.c_str(), "total %ld", &total) == 1) continue;
    if (std::sscanf(line.c_str(), "%ld %ld", &i, &c) == 2 &&
        i == static_cast<long>(counts.size()) + 1) {
      counts.push_back(c);
    }
  }
  return total >= 0;
}

bool criterion_cli_tables(std::string& why) {
  const std::vector<std::pair<std::vector<long>, long>> expected = {
      {{2, 1}, 3}, {{5, 2, 1}, 8}, {{12, 5, 2, 1}, 20}};
  for (std::size_t k = 0; k < expected.size(); ++k) {
    const std::string args = "table " + std::to_string(k + 2);
    const CliResult r = run_cli(args);
    std::vector<long> counts;
    long total = 0;
    if (r.status != 0 || !parse_table(r.out, counts, total)) {
      why = "`" + args + "` failed (exit " + std::to_string(r.status) + ")";
      return false;
    }
    if (counts != expected[k].first || total != expected[k].second) {
      why = "`" + args + "` printed unexpected counts";
      return false;
    }
  }
  return true;
}

bool criterion_oracle_equivalence(std::string& why) {
  for (std::uint32_t n = 1; n <= 16; ++n) {
    const SpectrumTable table = enumerate_spectrum_table(n);
    for (std::uint32_t i = 1; i <= n; ++i) {
      if (table.aggregate.count(i) != run_count_closed(RunCountQuery(n, i))) {
        why = "mismatch at n=" + std::to_string(n) + " i=" + std::to_string(i);
        return false;
      }
    }
  }
  return true;
}

bool criterion_four_routes(std::string& why) {
  for (std::uint32_t n = 1; n <= 256; ++n) {
    for (std::uint32_t i = 1; i <= n; ++i) {
      const RunCountQuery q(n, i);
      const BigCount closed = run_count_closed(q);
      if (run_count_recursive(q) != closed ||
          run_count_recursive_alt(q) != closed ||
          run_count_combinatorial(q) != closed) {
        why = "routes disagree at n=" + std::to_string(n) +
              " i=" + std::to_string(i);
        return false;
      }
    }
  }
  for (std::uint32_t n = 3; n <= 64; ++n) {
    for (std::uint32_t i = 1; i + 2 <= n; ++i) {
      const RunCountQuery q(n, i);
      const BigCount closed = run_count_closed(q);
      for (std::uint32_t k = 0; k + i + 1 <= n; ++k) {
        if (run_count_unrolled(q, k) != closed) {
          why = "split k=" + std::to_string(k) + " differs at n=" +
                std::to_string(n) + " i=" + std::to_string(i);
          return false;
        }
      }
    }
  }
  return true;
}

bool criterion_totals_identities(std::string& why) {
  for (std::uint32_t n = 1; n <= 24; ++n) {
    BigCount row_sum = 0;
    for (std::uint32_t i = 1; i <= n; ++i) {
      row_sum += run_count_closed(RunCountQuery(n, i));
    }
    const BigCount t = total_runs_closed(n);
    if (row_sum != t || total_runs_combinatorial(n) != t ||
        count_parts_in_compositions(n) != t) {
      why = "total routes disagree at n=" + std::to_string(n);
      return false;
    }
  }
  for (std::uint32_t n = 1; n <= 512; ++n) {
    if (a001792(n - 1) != total_runs_closed(n)) {
      why = "t(n) != b(n-1) at n=" + std::to_string(n);
      return false;
    }
    for (std::uint32_t i = 1; i < n; ++i) {
      if (a045623(n - i) != run_count_closed(RunCountQuery(n, i))) {
        why = "r(n,i) != a(n-i) at n=" + std::to_string(n) +
              " i=" + std::to_string(i);
        return false;
      }
    }
  }
  return true;
}

bool criterion_bijection_completeness(std::string& why) {
  for (std::uint32_t n = 1; n <= 12; ++n) {
    for (std::uint32_t i = 1; i <= n; ++i) {
      std::vector<std::pair<std::uint64_t, std::uint64_t>> built;
      for (const Placement& p : placements(n, i)) {
        built.emplace_back(p.string.to_index(), p.position);
      }
      std::sort(built.begin(), built.end());
      if (std::adjacent_find(built.begin(), built.end()) != built.end()) {
        why = "duplicate placement at n=" + std::to_string(n) +
              " i=" + std::to_string(i);
        return false;
      }
      std::vector<std::pair<std::uint64_t, std::uint64_t>> oracle;
      for (std::uint64_t index = 0; index < (std::uint64_t{1} << n);
           ++index) {
        const BitString s = BitString::from_index(n, index);
        for (std::uint64_t k : run_start_positions(s, i)) {
          oracle.emplace_back(index, k);
        }
      }
      std::sort(oracle.begin(), oracle.end());
      if (built != oracle) {
        why = "placement multiset differs at n=" + std::to_string(n) +
              " i=" + std::to_string(i);
        return false;
      }
    }
  }
  // The worked n=4 rows, in stream order.
  const std::vector<std::pair<std::string, std::uint64_t>> rows41 = {
      {"1000", 1}, {"0001", 4}, {"1011", 1}, {"0100", 2},
      {"1001", 4}, {"1001", 1}, {"0010", 3}, {"1101", 4},
      {"1010", 1}, {"0101", 2}, {"1010", 3}, {"0101", 4}};
  const std::vector<std::pair<std::string, std::uint64_t>> rows42 = {
      {"1100", 1}, {"0011", 3}, {"1101", 1}, {"0110", 2}, {"1011", 3}};
  for (std::uint32_t i : {1u, 2u}) {
    const auto& rows = i == 1 ? rows41 : rows42;
    std::size_t at = 0;
    for (const Placement& p : placements(4, i)) {
      if (at >= rows.size() || p.string.to_string() != rows[at].first ||
          p.position != rows[at].second) {
        why = "worked row " + std::to_string(at) + " differs for i=" +
              std::to_string(i);
        return false;
      }
      ++at;
    }
    if (at != rows.size()) {
      why = "row count differs for i=" + std::to_string(i);
      return false;
    }
  }
  return true;
}

bool criterion_probability_decomposition(std::string& why) {
  for (std::uint64_t n = 1; n <= 256; ++n) {
    const ExactRational scale(pow2(n));
    for (std::uint64_t i = 1; i <= n; ++i) {
      const ExactRational expect = expected_runs_of_length(n, i);
      ExactRational sum(0);
      for (std::uint64_t k = 1; k <= n; ++k) {
        sum += prob_run_of_length_at(n, k, i);
      }
      const BigCount count = run_count_closed(RunCountQuery(
          static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(i)));
      if (sum != expect ||
          ExactRational(expect * scale) != ExactRational(count)) {
        why = "decomposition fails at n=" + std::to_string(n) +
              " i=" + std::to_string(i);
        return false;
      }
    }
  }
  for (std::uint32_t n = 1; n <= 12; ++n) {
    std::vector<std::vector<std::uint64_t>> freq(
        n + 1, std::vector<std::uint64_t>(n + 1, 0));
    std::vector<std::uint64_t> starts(n + 1, 0);
    for (std::uint64_t index = 0; index < (std::uint64_t{1} << n); ++index) {
      auto on_run = [&](std::uint64_t start, std::uint64_t length) {
        ++freq[start][length];
        ++starts[start];
      };
      RunScanner scanner(on_run);
      scanner.feed(index << (64 - n), n);
      scanner.finish();
    }
    const BigCount denom = pow2(n);
    for (std::uint64_t k = 1; k <= n; ++k) {
      if (make_rational(starts[k], denom) != prob_run_starts_at(n, k)) {
        why = "start frequency differs at n=" + std::to_string(n) +
              " k=" + std::to_string(k);
        return false;
      }
      for (std::uint64_t i = 1; i <= n; ++i) {
        if (make_rational(freq[k][i], denom) !=
            prob_run_of_length_at(n, k, i)) {
          why = "frequency differs at n=" + std::to_string(n) +
                " k=" + std::to_string(k) + " i=" + std::to_string(i);
          return false;
        }
      }
    }
  }
  return true;
}

bool criterion_fraction_plateau(std::string& why) {
  const ExactRational quarter = make_rational(1, 4);
  for (std::uint32_t n = 3; n <= 128; ++n) {
    if (run_length_fraction(RunCountQuery(n, 2)) != quarter) {
      why = "f_n(2) != 1/4 at n=" + std::to_string(n);
      return false;
    }
  }
  return true;
}

bool criterion_monte_carlo(std::string& why) {
  const SampleReport report = monte_carlo(20, 3, 1000000, 42);
  if (report.exact_mean != make_rational(5, 8)) {
    why = "exact mean is not 5/8";
    return false;
  }
  if (!(report.rel_error < 0.01)) {
    why = "relative error " + std::to_string(report.rel_error) + " >= 0.01";
    return false;
  }
  return true;
}

bool criterion_large_n(std::string& why) {
  const BigCount closed = run_count_closed(RunCountQuery(1000, 17));
  const BigCount recursive = run_count_recursive(RunCountQuery(1000, 17));
  const BigCount term = a045623(983);
  if (closed != recursive || closed != term) {
    why = "values at n=1000, i=17 disagree";
    return false;
  }
  return true;
}

bool criterion_thread_determinism(std::string& why) {
  const CliResult one = run_cli("verify 12 --threads 1");
  const CliResult eight = run_cli("verify 12 --threads 8");
  if (one.status != 0 || eight.status != 0) {
    why = "verify 12 exited with " + std::to_string(one.status) + " / " +
          std::to_string(eight.status);
    return false;
  }
  if (one.out != eight.out) {
    why = "stdout differs between thread counts";
    return false;
  }
  if (one.out.find("all suites passed") == std::string::npos) {
    why = "verify 12 did not report success";
    return false;
  }
  return true;
}

struct Criterion {
  int number;
  const char* description;
  double budget_seconds;  // 0 = no stated budget
  std::function<bool(std::string&)> body;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <path-to-runspectrum-cli>\n");
    return 2;
  }
  g_cli = argv[1];

  const std::vector<Criterion> criteria = {
      {1, "table command reproduces the n=2,3,4 aggregates", 1.0,
       criterion_cli_tables},
      {2, "exhaustive enumeration equals the closed form for n <= 16", 60.0,
       criterion_oracle_equivalence},
      {3, "four count routes agree for n <= 256, splits for n <= 64", 30.0,
       criterion_four_routes},
      {4, "totals and sequence identities hold up to n = 512", 60.0,
       criterion_totals_identities},
      {5, "placement bijection is complete and duplicate-free for n <= 12",
       120.0, criterion_bijection_completeness},
      {6, "indicator probabilities decompose exactly for n <= 256", 0.0,
       criterion_probability_decomposition},
      {7, "fraction of length-2 runs is 1/4 for 3 <= n <= 128", 0.0,
       criterion_fraction_plateau},
      {8, "monte carlo n=20 i=3 samples=1e6 seed=42 within 1% of 5/8", 30.0,
       criterion_monte_carlo},
      {9, "closed, recursive and sequence values agree at n=1000, i=17", 1.0,
       criterion_large_n},
      {10, "verify 12 stdout is byte-identical for --threads 1 and 8", 0.0,
       criterion_thread_determinism},
  };

  int passed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string why;
    bool ok = false;
    try {
      ok = c.body(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (ok && c.budget_seconds > 0.0 && seconds >= c.budget_seconds) {
      ok = false;
      why = "time budget exceeded";
    }
    if (ok) {
      ++passed;
      if (c.budget_seconds > 0.0) {
        std::printf("[PASS] %2d %s (%.2f s, budget %.0f s)\n", c.number,
                    c.description, seconds, c.budget_seconds);
      } else {
        std::printf("[PASS] %2d %s (%.2f s)\n", c.number, c.description,
                    seconds);
      }
    } else {
      std::printf("[FAIL] %2d %s (%.2f s): %s\n", c.number, c.description,
                  seconds, why.c_str());
    }
  }
  std::printf("acceptance: %d/%zu criteria passed\n", passed, criteria.size());
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
