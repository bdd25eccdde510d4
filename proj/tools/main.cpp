// runspectrum: exact run-length statistics for binary strings.
//
// Subcommands: table, verify, bijection, sample, analyze, oeis.
// Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 I/O error.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "runspec/bijection.hpp"
#include "runspec/closedform.hpp"
#include "runspec/core.hpp"
#include "runspec/enumeration.hpp"
#include "runspec/sequences.hpp"
#include "runspec/stochastic.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace runspec;

constexpr const char* kSchema = "runspectrum/1";

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

void print_json(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

// ---------------------------------------------------------------- table ----

struct TableOptions {
  std::uint64_t n = 0;
  bool per_string = false;
  bool enumerate = false;
  std::string format = "plain";
  int threads = 0;
};

int run_table(const TableOptions& opt) {
  if (opt.n < 1) throw std::invalid_argument("table: n must be >= 1");
  if (opt.per_string && opt.n > kMaxRowRetentionBits) {
    throw std::invalid_argument("table: --per-string requires n <= 16");
  }
  const bool enumerate = opt.enumerate || opt.per_string;

  std::vector<BigCount> counts;
  BigCount total;
  SpectrumTable table;
  if (enumerate) {
    table = enumerate_spectrum_table(static_cast<std::uint32_t>(opt.n),
                                     opt.per_string, opt.threads);
    counts.reserve(opt.n);
    for (std::uint64_t i = 1; i <= opt.n; ++i) {
      counts.push_back(table.aggregate.count(i));
    }
    total = table.aggregate.total_runs();
  } else {
    counts.reserve(opt.n);
    for (std::uint64_t i = 1; i <= opt.n; ++i) {
      counts.push_back(run_count_closed(RunCountQuery(
          static_cast<std::uint32_t>(opt.n), static_cast<std::uint32_t>(i))));
    }
    total = total_runs_closed(static_cast<std::uint32_t>(opt.n));
  }
  const char* route = enumerate ? "enumeration" : "closed_form";

  if (opt.format == "json") {
    Json doc;
    doc["schema"] = kSchema;
    doc["command"] = "table";
    doc["n"] = opt.n;
    doc["route"] = route;
    Json rows = Json::array();
    for (std::uint64_t i = 1; i <= opt.n; ++i) {
      rows.push_back({{"i", i}, {"count", to_decimal(counts[i - 1])}});
    }
    doc["counts"] = std::move(rows);
    doc["total"] = to_decimal(total);
    if (opt.per_string) {
      Json per = Json::array();
      for (const auto& [index, spectrum] : table.per_string) {
        Json row;
        row["index"] = index;
        row["string"] =
            BitString::from_index(static_cast<std::uint32_t>(opt.n), index)
                .to_string();
        Json cs = Json::array();
        for (std::uint64_t i = 1; i <= opt.n; ++i) {
          cs.push_back(to_decimal(spectrum.count(i)));
        }
        row["counts"] = std::move(cs);
        per.push_back(std::move(row));
      }
      doc["per_string"] = std::move(per);
    }
    print_json(doc);
    return 0;
  }

  if (opt.format == "csv") {
    std::cout << "# schema: " << kSchema << "\n";
    if (opt.per_string) {
      std::cout << "index,string";
      for (std::uint64_t i = 1; i <= opt.n; ++i) std::cout << ",r" << i;
      std::cout << "\n";
      for (const auto& [index, spectrum] : table.per_string) {
        std::cout << index << ','
                  << BitString::from_index(static_cast<std::uint32_t>(opt.n),
                                           index)
                         .to_string();
        for (std::uint64_t i = 1; i <= opt.n; ++i) {
          std::cout << ',' << to_decimal(spectrum.count(i));
        }
        std::cout << "\n";
      }
    } else {
      std::cout << "i,count\n";
      for (std::uint64_t i = 1; i <= opt.n; ++i) {
        std::cout << i << ',' << to_decimal(counts[i - 1]) << "\n";
      }
      std::cout << "total," << to_decimal(total) << "\n";
    }
    return 0;
  }

  std::cout << "run counts for n=" << opt.n << " (" << route << ")\n";
  for (std::uint64_t i = 1; i <= opt.n; ++i) {
    std::cout << i << ' ' << to_decimal(counts[i - 1]) << "\n";
  }
  std::cout << "total " << to_decimal(total) << "\n";
  if (opt.per_string) {
    std::cout << "\nper-string spectra (i = 1.." << opt.n << ")\n";
    for (const auto& [index, spectrum] : table.per_string) {
      std::cout << BitString::from_index(static_cast<std::uint32_t>(opt.n),
                                         index)
                       .to_string();
      for (std::uint64_t i = 1; i <= opt.n; ++i) {
        std::cout << ' ' << to_decimal(spectrum.count(i));
      }
      std::cout << "\n";
    }
  }
  return 0;
}

// --------------------------------------------------------------- verify ----

struct SuiteResult {
  std::string name;
  std::uint64_t checks = 0;
  bool ok = true;
  std::vector<std::string> detail;   // extra per-item lines (plain only)
  std::string failure;               // first counterexample
};

struct VerifyContext {
  std::uint64_t n_max;
  int threads;
  std::vector<SuiteResult> suites;
  bool failed = false;

  // Runs `body` as a named suite unless an earlier suite already failed.
  template <typename Body>
  void suite(std::string name, Body&& body) {
    if (failed) return;
    SuiteResult r;
    r.name = std::move(name);
    body(r);
    if (!r.ok) failed = true;
    suites.push_back(std::move(r));
  }
};

// Runs every identity suite; fills ctx.suites in order and stops after the
// first failing suite.
void run_verify_suites(VerifyContext& ctx) {
  const std::uint64_t n_max = ctx.n_max;
  const std::uint64_t enum_cap = std::min<std::uint64_t>(n_max, 16);
  const std::uint64_t unroll_cap = std::min<std::uint64_t>(n_max, 64);
  const std::uint64_t small_cap = std::min<std::uint64_t>(n_max, 12);
  const std::uint64_t parts_cap = std::min<std::uint64_t>(n_max, 24);
  const std::uint64_t parts_equal_cap = std::min<std::uint64_t>(n_max, 16);

  ctx.suite("enumeration vs closed form, n <= " + std::to_string(enum_cap),
            [&](SuiteResult& r) {
    for (std::uint64_t n = 1; n <= enum_cap; ++n) {
      const auto table =
          enumerate_spectrum_table(static_cast<std::uint32_t>(n), false,
                                   ctx.threads);
      std::string line = "n=" + std::to_string(n) + ":";
      for (std::uint64_t i = 1; i <= n; ++i) {
        const BigCount expected = run_count_closed(RunCountQuery(
            static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(i)));
        const BigCount& got = table.aggregate.count(i);
        ++r.checks;
        if (got != expected) {
          r.ok = false;
          r.failure = "enumerated r_" + std::to_string(n) + "(" +
                      std::to_string(i) + ") = " + to_decimal(got) +
                      ", closed form gives " + to_decimal(expected);
          return;
        }
        line += " " + to_decimal(got);
      }
      line += " OK";
      r.detail.push_back(std::move(line));
    }
  });

  ctx.suite("four-route agreement, n <= " + std::to_string(n_max),
            [&](SuiteResult& r) {
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      for (std::uint64_t i = 1; i <= n; ++i) {
        const RunCountQuery q(static_cast<std::uint32_t>(n),
                              static_cast<std::uint32_t>(i));
        const BigCount closed = run_count_closed(q);
        const BigCount recursive = run_count_recursive(q);
        const BigCount alt = run_count_recursive_alt(q);
        const BigCount comb = run_count_combinatorial(q);
        ++r.checks;
        if (recursive != closed || alt != closed || comb != closed) {
          r.ok = false;
          r.failure = "routes disagree at n=" + std::to_string(n) +
                      " i=" + std::to_string(i) + ": closed=" +
                      to_decimal(closed) + " recursive=" + to_decimal(recursive) +
                      " alt=" + to_decimal(alt) + " combinatorial=" +
                      to_decimal(comb);
          return;
        }
      }
    }
  });

  ctx.suite("unrolled recursion, n <= " + std::to_string(unroll_cap),
            [&](SuiteResult& r) {
    for (std::uint64_t n = 3; n <= unroll_cap; ++n) {
      for (std::uint64_t i = 1; i + 2 <= n; ++i) {
        const RunCountQuery q(static_cast<std::uint32_t>(n),
                              static_cast<std::uint32_t>(i));
        const BigCount closed = run_count_closed(q);
        for (std::uint64_t k = 1; k + i + 1 <= n; ++k) {
          ++r.checks;
          const BigCount split =
              run_count_unrolled(q, static_cast<std::uint32_t>(k));
          if (split != closed) {
            r.ok = false;
            r.failure = "unrolled split k=" + std::to_string(k) +
                        " at n=" + std::to_string(n) + " i=" +
                        std::to_string(i) + " gives " + to_decimal(split) +
                        ", closed form gives " + to_decimal(closed);
            return;
          }
        }
      }
    }
  });

  ctx.suite("totals and expectations, n <= " + std::to_string(n_max),
            [&](SuiteResult& r) {
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      const std::uint32_t un = static_cast<std::uint32_t>(n);
      const BigCount t_closed = total_runs_closed(un);
      const BigCount t_comb = total_runs_combinatorial(un);
      BigCount row_sum = 0;
      for (std::uint64_t i = 1; i <= n; ++i) {
        row_sum += run_count_closed(RunCountQuery(
            un, static_cast<std::uint32_t>(i)));
      }
      ++r.checks;
      if (t_comb != t_closed || row_sum != t_closed) {
        r.ok = false;
        r.failure = "totals disagree at n=" + std::to_string(n) +
                    ": closed=" + to_decimal(t_closed) + " combinatorial=" +
                    to_decimal(t_comb) + " row sum=" + to_decimal(row_sum);
        return;
      }
      const ExactRational scale(pow2(n));
      ExactRational start_sum(0);
      for (std::uint64_t k = 1; k <= n; ++k) {
        start_sum += prob_run_starts_at(n, k);
      }
      ++r.checks;
      if (ExactRational(expected_total(n) * scale) != ExactRational(t_closed) ||
          start_sum != expected_total(n)) {
        r.ok = false;
        r.failure = "E(T) normalization fails at n=" + std::to_string(n);
        return;
      }
      for (std::uint64_t i = 1; i <= n; ++i) {
        const BigCount r_i = run_count_closed(RunCountQuery(
            un, static_cast<std::uint32_t>(i)));
        const ExactRational expect = expected_runs_of_length(n, i);
        ExactRational prob_sum(0);
        for (std::uint64_t k = 1; k <= n; ++k) {
          prob_sum += prob_run_of_length_at(n, k, i);
        }
        ++r.checks;
        if (ExactRational(expect * scale) != ExactRational(r_i) ||
            prob_sum != expect) {
          r.ok = false;
          r.failure = "E(T^(i)) decomposition fails at n=" + std::to_string(n) +
                      " i=" + std::to_string(i);
          return;
        }
      }
    }
  });

  ctx.suite("run-length fractions, n <= " + std::to_string(n_max),
            [&](SuiteResult& r) {
    const ExactRational quarter = pow2_inv(2);
    for (std::uint64_t n = 3; n <= n_max; ++n) {
      ++r.checks;
      const ExactRational f2 = run_length_fraction(
          RunCountQuery(static_cast<std::uint32_t>(n), 2));
      if (f2 != quarter) {
        r.ok = false;
        r.failure = "f_" + std::to_string(n) + "(2) = " +
                    to_fraction_string(f2) + ", expected 1/4";
        return;
      }
    }
    for (std::uint64_t n = 1; n <= std::min<std::uint64_t>(n_max, 64); ++n) {
      ExactRational sum(0);
      for (std::uint64_t i = 1; i <= n; ++i) {
        sum += run_length_fraction(RunCountQuery(
            static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(i)));
      }
      ++r.checks;
      if (sum != ExactRational(1)) {
        r.ok = false;
        r.failure = "fractions at n=" + std::to_string(n) + " sum to " +
                    to_fraction_string(sum);
        return;
      }
    }
  });

  ctx.suite("positional probabilities vs enumeration, n <= " +
            std::to_string(small_cap), [&](SuiteResult& r) {
    for (std::uint64_t n = 1; n <= small_cap; ++n) {
      // freq[k][i] = strings with a maximal length-i run starting at k.
      std::vector<std::vector<std::uint64_t>> freq(
          n + 1, std::vector<std::uint64_t>(n + 1, 0));
      std::vector<std::uint64_t> start_freq(n + 1, 0);
      const std::uint64_t limit = std::uint64_t{1} << n;
      for (std::uint64_t index = 0; index < limit; ++index) {
        auto on_run = [&](std::uint64_t start, std::uint64_t length) {
          ++freq[start][length];
          ++start_freq[start];
        };
        RunScanner scanner(on_run);
        scanner.feed(index << (64 - n), static_cast<unsigned>(n));
        scanner.finish();
      }
      const BigCount denom = pow2(n);
      for (std::uint64_t k = 1; k <= n; ++k) {
        ++r.checks;
        if (make_rational(start_freq[k], denom) != prob_run_starts_at(n, k)) {
          r.ok = false;
          r.failure = "start frequency at n=" + std::to_string(n) +
                      " k=" + std::to_string(k) + " is " +
                      std::to_string(start_freq[k]) + "/" + to_decimal(denom);
          return;
        }
        for (std::uint64_t i = 1; i <= n; ++i) {
          ++r.checks;
          if (make_rational(freq[k][i], denom) !=
              prob_run_of_length_at(n, k, i)) {
            r.ok = false;
            r.failure = "positional frequency at n=" + std::to_string(n) +
                        " k=" + std::to_string(k) + " i=" + std::to_string(i) +
                        " is " + std::to_string(freq[k][i]) + "/" +
                        to_decimal(denom);
            return;
          }
        }
      }
    }
  });

  ctx.suite("placement bijection, n <= " + std::to_string(small_cap),
            [&](SuiteResult& r) {
    for (std::uint64_t n = 1; n <= small_cap; ++n) {
      const std::uint32_t un = static_cast<std::uint32_t>(n);
      for (std::uint64_t i = 1; i <= n; ++i) {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> built;
        for (const Placement& p : placements(un, static_cast<std::uint32_t>(i))) {
          built.emplace_back(p.string.to_index(), p.position);
        }
        std::sort(built.begin(), built.end());
        ++r.checks;
        if (std::adjacent_find(built.begin(), built.end()) != built.end()) {
          r.ok = false;
          r.failure = "duplicate placement at n=" + std::to_string(n) +
                      " i=" + std::to_string(i);
          return;
        }
        std::vector<std::pair<std::uint64_t, std::uint64_t>> oracle;
        const std::uint64_t limit = std::uint64_t{1} << n;
        for (std::uint64_t index = 0; index < limit; ++index) {
          const BitString s = BitString::from_index(un, index);
          for (std::uint64_t k : run_start_positions(s, i)) {
            oracle.emplace_back(index, k);
          }
        }
        std::sort(oracle.begin(), oracle.end());
        ++r.checks;
        if (built != oracle) {
          r.ok = false;
          r.failure = "placement multiset mismatch at n=" + std::to_string(n) +
                      " i=" + std::to_string(i) + ": " +
                      std::to_string(built.size()) + " built vs " +
                      std::to_string(oracle.size()) + " enumerated";
          return;
        }
      }
    }
    // Alternating-pair soundness over all compositions.
    for (std::uint64_t n = 1; n <= small_cap; ++n) {
      for (const Composition& c : compositions(static_cast<std::uint32_t>(n))) {
        const auto [ones_first, zeros_first] =
            composition_to_alternating_pair(c);
        ++r.checks;
        bool sound = ones_first.length() == n && zeros_first.length() == n;
        for (std::uint64_t k = 1; sound && k <= n; ++k) {
          sound = ones_first.bit(k) != zeros_first.bit(k);
        }
        // Block lengths of ones_first must equal the parts in order.
        std::vector<std::uint32_t> blocks;
        for (std::uint64_t k = 1; k <= n;) {
          std::uint64_t j = k + 1;
          while (j <= n && ones_first.bit(j) == ones_first.bit(k)) ++j;
          blocks.push_back(static_cast<std::uint32_t>(j - k));
          k = j;
        }
        sound = sound && blocks == c.parts() && ones_first.bit(1);
        const BigCount runs = extract_runs(ones_first).total_runs() +
                              extract_runs(zeros_first).total_runs();
        sound = sound && runs == c.part_count();
        if (!sound) {
          r.ok = false;
          r.failure = "alternating pair unsound for composition " +
                      c.to_string() + " of " + std::to_string(n);
          return;
        }
      }
    }
  });

  ctx.suite("composition part counts, n <= " + std::to_string(parts_cap),
            [&](SuiteResult& r) {
    for (std::uint64_t n = 1; n <= parts_cap; ++n) {
      ++r.checks;
      const BigCount counted =
          count_parts_in_compositions(static_cast<std::uint32_t>(n));
      const BigCount expected = total_runs_closed(static_cast<std::uint32_t>(n));
      if (counted != expected) {
        r.ok = false;
        r.failure = "parts in compositions of " + std::to_string(n) + " = " +
                    to_decimal(counted) + ", t(" + std::to_string(n) +
                    ") = " + to_decimal(expected);
        return;
      }
    }
    for (std::uint64_t n = 1; n <= parts_equal_cap; ++n) {
      for (std::uint64_t v = 1; v <= n; ++v) {
        ++r.checks;
        const BigCount counted = count_parts_equal(
            static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(v));
        const BigCount expected = run_count_closed(RunCountQuery(
            static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(v)));
        if (counted != expected) {
          r.ok = false;
          r.failure = "parts equal to " + std::to_string(v) +
                      " in compositions of " + std::to_string(n) + " = " +
                      to_decimal(counted) + ", r = " + to_decimal(expected);
          return;
        }
      }
    }
  });

  ctx.suite("sequence identities, n <= " + std::to_string(n_max),
            [&](SuiteResult& r) {
    for (std::size_t j = 0; j < kA045623Fixture.size(); ++j) {
      ++r.checks;
      if (a045623(j) != BigCount(kA045623Fixture[j])) {
        r.ok = false;
        r.failure = "a045623(" + std::to_string(j) + ") fixture mismatch";
        return;
      }
    }
    for (std::size_t j = 0; j < kA001792Fixture.size(); ++j) {
      ++r.checks;
      if (a001792(j) != BigCount(kA001792Fixture[j])) {
        r.ok = false;
        r.failure = "a001792(" + std::to_string(j) + ") fixture mismatch";
        return;
      }
    }
    const CrossCheckReport report = cross_check(ctx.n_max);
    r.checks += report.checks;
    if (!report.ok) {
      r.ok = false;
      r.failure = report.first_failure;
    }
  });
}

struct VerifyOptions {
  std::uint64_t n_max = 0;
  std::string format = "plain";
  int threads = 0;
};

int run_verify(const VerifyOptions& opt) {
  if (opt.n_max < 2) throw std::invalid_argument("verify: n_max must be >= 2");
  VerifyContext ctx{opt.n_max, opt.threads, {}, false};
  run_verify_suites(ctx);

  if (opt.format == "json") {
    Json doc;
    doc["schema"] = kSchema;
    doc["command"] = "verify";
    doc["n_max"] = opt.n_max;
    Json suites = Json::array();
    for (const auto& s : ctx.suites) {
      Json e;
      e["name"] = s.name;
      e["checks"] = s.checks;
      e["ok"] = s.ok;
      if (!s.detail.empty()) e["detail"] = s.detail;
      if (!s.ok) e["counterexample"] = s.failure;
      suites.push_back(std::move(e));
    }
    doc["suites"] = std::move(suites);
    doc["ok"] = !ctx.failed;
    print_json(doc);
  } else if (opt.format == "csv") {
    std::cout << "# schema: " << kSchema << "\n";
    std::cout << "suite,checks,ok\n";
    for (const auto& s : ctx.suites) {
      std::cout << s.name << ',' << s.checks << ','
                << (s.ok ? "true" : "false") << "\n";
    }
    if (ctx.failed) {
      std::cerr << "FAIL: " << ctx.suites.back().failure << "\n";
    }
  } else {
    std::cout << "verify n_max=" << opt.n_max << "\n";
    for (const auto& s : ctx.suites) {
      if (s.ok) {
        std::cout << s.name << ": OK (" << s.checks << " checks)\n";
      } else {
        std::cout << s.name << ": FAIL after " << s.checks << " checks\n";
      }
      for (const auto& line : s.detail) std::cout << "  " << line << "\n";
    }
    if (ctx.failed) {
      std::cout << "FAIL: " << ctx.suites.back().failure << "\n";
    } else {
      std::cout << "all suites passed\n";
    }
  }
  return ctx.failed ? 1 : 0;
}

// ------------------------------------------------------------- bijection ----

struct BijectionOptions {
  std::uint64_t n = 0;
  std::uint64_t i = 0;
  std::string format = "plain";
};

int run_bijection(const BijectionOptions& opt) {
  if (opt.n < 1 || opt.n > 12 || opt.i < 1 || opt.i > opt.n) {
    throw std::invalid_argument("bijection: need 1 <= i <= n <= 12");
  }
  // Group rows by part count p, keeping stream order inside each group.
  std::map<std::uint32_t, std::vector<Placement>> groups;
  std::uint64_t count = 0;
  for (const Placement& p : placements(static_cast<std::uint32_t>(opt.n),
                                       static_cast<std::uint32_t>(opt.i))) {
    groups[static_cast<std::uint32_t>(p.base_parts.size())].push_back(p);
    ++count;
  }

  auto base_string = [](const std::vector<std::uint32_t>& parts) {
    return Composition(parts).to_string();
  };

  if (opt.format == "json") {
    Json doc;
    doc["schema"] = kSchema;
    doc["command"] = "bijection";
    doc["n"] = opt.n;
    doc["i"] = opt.i;
    doc["count"] = count;
    Json rows = Json::array();
    for (const auto& [p, group] : groups) {
      for (const Placement& item : group) {
        rows.push_back({{"p", p},
                        {"base", item.base_parts},
                        {"slot", item.slot},
                        {"string", item.string.to_string()},
                        {"position", item.position}});
      }
    }
    doc["placements"] = std::move(rows);
    print_json(doc);
    return 0;
  }

  if (opt.format == "csv") {
    std::cout << "# schema: " << kSchema << "\n";
    std::cout << "p,base,slot,string,position\n";
    for (const auto& [p, group] : groups) {
      for (const Placement& item : group) {
        std::cout << p << ",\"" << base_string(item.base_parts) << "\","
                  << item.slot << ',' << item.string.to_string() << ','
                  << item.position << "\n";
      }
    }
    return 0;
  }

  std::cout << "placements n=" << opt.n << " i=" << opt.i << " count=" << count
            << "\n";
  for (const auto& [p, group] : groups) {
    std::cout << "p=" << p << "\n";
    for (const Placement& item : group) {
      std::cout << "base=" << base_string(item.base_parts)
                << " slot=" << item.slot << " -> " << item.string.to_string()
                << " pos=" << item.position << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------- sample ----

struct SampleOptions {
  std::uint64_t n = 0;
  std::optional<std::uint64_t> run_length;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  std::string format = "plain";
  int threads = 0;
};

int run_sample(const SampleOptions& opt) {
  const SampleReport report =
      monte_carlo(opt.n, opt.run_length, opt.samples, opt.seed, opt.threads);
  const std::string run_length_text =
      report.run_length ? std::to_string(*report.run_length) : std::string();

  if (opt.format == "json") {
    Json doc;
    doc["schema"] = kSchema;
    doc["command"] = "sample";
    doc["n"] = report.n;
    if (report.run_length) {
      doc["i"] = *report.run_length;
    } else {
      doc["i"] = nullptr;
    }
    doc["samples"] = to_decimal(BigCount(report.samples));
    doc["seed"] = to_decimal(BigCount(report.seed));
    doc["observed"] = to_decimal(report.observed);
    doc["empirical_mean"] = report.empirical_mean;
    doc["exact_mean"] = to_fraction_string(report.exact_mean);
    doc["exact_mean_decimal"] = report.exact_mean.get_d();
    doc["abs_error"] = report.abs_error;
    doc["rel_error"] = report.rel_error;
    print_json(doc);
    return 0;
  }

  if (opt.format == "csv") {
    std::cout << "# schema: " << kSchema << "\n";
    std::cout << "n,i,samples,seed,observed,empirical_mean,exact_mean,"
                 "abs_error,rel_error\n";
    std::cout << report.n << ',' << run_length_text << ',' << report.samples
              << ',' << report.seed << ',' << to_decimal(report.observed) << ','
              << fmt_double(report.empirical_mean) << ','
              << to_fraction_string(report.exact_mean) << ','
              << fmt_double(report.abs_error) << ','
              << fmt_double(report.rel_error) << "\n";
    return 0;
  }

  std::cout << "n " << report.n << "\n";
  std::cout << "i " << (run_length_text.empty() ? "all" : run_length_text)
            << "\n";
  std::cout << "samples " << report.samples << "\n";
  std::cout << "seed " << report.seed << "\n";
  std::cout << "observed " << to_decimal(report.observed) << "\n";
  std::cout << "empirical_mean " << fmt_double(report.empirical_mean) << "\n";
  std::cout << "exact_mean " << to_fraction_string(report.exact_mean) << " ("
            << fmt_double(report.exact_mean.get_d()) << ")\n";
  std::cout << "abs_error " << fmt_double(report.abs_error) << "\n";
  std::cout << "rel_error " << fmt_double(report.rel_error) << "\n";
  return 0;
}

// --------------------------------------------------------------- analyze ----

struct AnalyzeOptions {
  std::string path;
  std::string bit_order = "msb";
  std::string format = "plain";
};

int run_analyze(const AnalyzeOptions& opt) {
  const BitOrder order =
      opt.bit_order == "lsb" ? BitOrder::lsb_first : BitOrder::msb_first;
  RunSpectrum spectrum;
  if (opt.path == "-") {
    spectrum = analyze_stream(std::cin, order);
  } else {
    std::ifstream in(opt.path, std::ios::binary);
    if (!in) {
      std::cerr << "analyze: cannot open " << opt.path << "\n";
      return 3;
    }
    spectrum = analyze_stream(in, order);
  }

  const BigCount runs = spectrum.total_runs();
  const std::uint64_t max_len = spectrum.max_run_length();
  struct Row {
    std::uint64_t length;
    BigCount count;
    double fraction;
    double reference;
  };
  std::vector<Row> rows;
  for (std::uint64_t i = 1; i <= max_len; ++i) {
    const BigCount& c = spectrum.count(i);
    if (c == 0) continue;
    rows.push_back(Row{i, c, make_rational(c, runs).get_d(),
                       pow2_inv(i).get_d()});
  }

  if (opt.format == "json") {
    Json doc;
    doc["schema"] = kSchema;
    doc["command"] = "analyze";
    doc["bit_order"] = opt.bit_order;
    doc["bits"] = to_decimal(BigCount(spectrum.length()));
    doc["runs"] = to_decimal(runs);
    Json out = Json::array();
    for (const Row& row : rows) {
      out.push_back({{"length", row.length},
                     {"count", to_decimal(row.count)},
                     {"fraction", row.fraction},
                     {"reference", row.reference}});
    }
    doc["lengths"] = std::move(out);
    print_json(doc);
    return 0;
  }

  if (opt.format == "csv") {
    std::cout << "# schema: " << kSchema << "\n";
    std::cout << "# bits: " << spectrum.length() << "\n";
    std::cout << "# runs: " << to_decimal(runs) << "\n";
    std::cout << "length,count,fraction,reference\n";
    for (const Row& row : rows) {
      std::cout << row.length << ',' << to_decimal(row.count) << ','
                << fmt_double(row.fraction) << ',' << fmt_double(row.reference)
                << "\n";
    }
    return 0;
  }

  std::cout << "bits " << spectrum.length() << "\n";
  std::cout << "runs " << to_decimal(runs) << "\n";
  if (!rows.empty()) {
    std::cout << "length count fraction reference\n";
    for (const Row& row : rows) {
      std::cout << row.length << ' ' << to_decimal(row.count) << ' '
                << fmt_double(row.fraction) << ' ' << fmt_double(row.reference)
                << "\n";
    }
  }
  return 0;
}

// ------------------------------------------------------------------ oeis ----

struct OeisOptions {
  std::string name;
  std::uint64_t terms = 20;
  bool check = false;
  std::uint64_t check_n_max = 64;
  std::string format = "plain";
};

int run_oeis(const OeisOptions& opt) {
  const bool is_a045623 = opt.name == "A045623";
  auto term = [&](std::uint64_t j) {
    return is_a045623 ? a045623(j) : a001792(j);
  };

  if (opt.check) {
    const auto& fixture_values = is_a045623
        ? kA045623Fixture
        : kA001792Fixture;
    bool fixture_ok = true;
    std::string failure;
    for (std::size_t j = 0; j < fixture_values.size(); ++j) {
      if (term(j) != BigCount(fixture_values[j])) {
        fixture_ok = false;
        failure = opt.name + "(" + std::to_string(j) + ") = " +
                  to_decimal(term(j)) + ", fixture has " +
                  std::to_string(fixture_values[j]);
        break;
      }
    }
    // Identity against the run-count closed forms: a(j) = r_{j+1}(1)
    // (boundary j = 0 included via r_n(n) = 1), b(j) = t(j+1).
    bool identity_ok = true;
    std::uint64_t identity_checks = 0;
    if (fixture_ok) {
      for (std::uint64_t j = 0; j < opt.check_n_max; ++j) {
        const std::uint32_t n = static_cast<std::uint32_t>(j + 1);
        const BigCount lhs = term(j);
        const BigCount rhs = is_a045623
            ? run_count_closed(RunCountQuery(n, 1))
            : total_runs_closed(n);
        ++identity_checks;
        if (lhs != rhs) {
          identity_ok = false;
          failure = opt.name + "(" + std::to_string(j) + ") = " +
                    to_decimal(lhs) + ", run-count identity gives " +
                    to_decimal(rhs);
          break;
        }
      }
    }
    const bool ok = fixture_ok && identity_ok;

    if (opt.format == "json") {
      Json doc;
      doc["schema"] = kSchema;
      doc["command"] = "oeis";
      doc["sequence"] = opt.name;
      doc["fixture_terms"] = fixture_values.size();
      doc["fixture_ok"] = fixture_ok;
      doc["identity_n_max"] = opt.check_n_max;
      doc["identity_ok"] = identity_ok;
      doc["ok"] = ok;
      if (!ok) doc["counterexample"] = failure;
      print_json(doc);
    } else if (opt.format == "csv") {
      std::cout << "# schema: " << kSchema << "\n";
      std::cout << "check,ok\n";
      std::cout << "fixture," << (fixture_ok ? "true" : "false") << "\n";
      std::cout << "identities," << (identity_ok ? "true" : "false") << "\n";
      if (!ok) std::cerr << "FAIL: " << failure << "\n";
    } else {
      std::cout << opt.name << " check\n";
      std::cout << "fixture " << (fixture_ok ? "OK" : "FAIL") << " ("
                << fixture_values.size() << " terms)\n";
      std::cout << "identities " << (identity_ok ? "OK" : "FAIL")
                << " (n_max=" << opt.check_n_max << ")\n";
      if (!ok) std::cout << "FAIL: " << failure << "\n";
    }
    return ok ? 0 : 1;
  }

  if (opt.format == "json") {
    Json doc;
    doc["schema"] = kSchema;
    doc["command"] = "oeis";
    doc["sequence"] = opt.name;
    Json terms = Json::array();
    for (std::uint64_t j = 0; j < opt.terms; ++j) {
      terms.push_back({{"j", j}, {"value", to_decimal(term(j))}});
    }
    doc["terms"] = std::move(terms);
    print_json(doc);
    return 0;
  }
  if (opt.format == "csv") {
    std::cout << "# schema: " << kSchema << "\n";
    std::cout << "j,value\n";
    for (std::uint64_t j = 0; j < opt.terms; ++j) {
      std::cout << j << ',' << to_decimal(term(j)) << "\n";
    }
    return 0;
  }
  std::cout << opt.name << "\n";
  for (std::uint64_t j = 0; j < opt.terms; ++j) {
    std::cout << j << ' ' << to_decimal(term(j)) << "\n";
  }
  return 0;
}

void add_format_flag(CLI::App* cmd, std::string& target) {
  cmd->add_option("--format", target, "Output format")
      ->check(CLI::IsMember({"plain", "csv", "json"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact statistics of runs of ones in binary strings"};
  app.require_subcommand(1);

  TableOptions table_opt;
  auto* table_cmd =
      app.add_subcommand("table", "Run counts r_n(i) and total t(n)");
  table_cmd->add_option("n", table_opt.n, "String length")->required();
  table_cmd->add_flag("--per-string", table_opt.per_string,
                      "List every string's spectrum (n <= 16)");
  table_cmd->add_flag("--enumerate", table_opt.enumerate,
                      "Aggregate by exhaustive enumeration (n <= 63)");
  table_cmd->add_option("--threads", table_opt.threads,
                        "Worker cap for enumeration (0 = default)");
  add_format_flag(table_cmd, table_opt.format);

  VerifyOptions verify_opt;
  auto* verify_cmd =
      app.add_subcommand("verify", "Cross-route identity suites");
  verify_cmd->add_option("n_max", verify_opt.n_max, "Largest n to verify")
      ->required();
  verify_cmd->add_option("--threads", verify_opt.threads,
                         "Worker cap for enumeration (0 = default)");
  add_format_flag(verify_cmd, verify_opt.format);

  BijectionOptions bijection_opt;
  auto* bijection_cmd = app.add_subcommand(
      "bijection", "Placement listing for runs of length i (n <= 12)");
  bijection_cmd->add_option("n", bijection_opt.n, "String length")->required();
  bijection_cmd->add_option("i", bijection_opt.i, "Run length")->required();
  add_format_flag(bijection_cmd, bijection_opt.format);

  SampleOptions sample_opt;
  std::uint64_t sample_i = 0;
  auto* sample_cmd =
      app.add_subcommand("sample", "Monte Carlo estimate vs exact expectation");
  sample_cmd->add_option("n", sample_opt.n, "Bits per sample (<= 2^20)")
      ->required();
  auto* i_opt = sample_cmd->add_option(
      "--i", sample_i, "Count only runs of this exact length");
  sample_cmd->add_option("--samples", sample_opt.samples, "Number of samples")
      ->capture_default_str();
  sample_cmd->add_option("--seed", sample_opt.seed, "Generator seed")
      ->capture_default_str();
  sample_cmd->add_option("--threads", sample_opt.threads,
                         "Worker cap (0 = default)");
  add_format_flag(sample_cmd, sample_opt.format);

  AnalyzeOptions analyze_opt;
  auto* analyze_cmd = app.add_subcommand(
      "analyze", "Run spectrum of a byte stream (file or - for stdin)");
  analyze_cmd->add_option("path", analyze_opt.path, "Input file or -")
      ->required();
  analyze_cmd->add_option("--bit-order", analyze_opt.bit_order,
                          "Bit order within each byte")
      ->check(CLI::IsMember({"msb", "lsb"}))
      ->capture_default_str();
  add_format_flag(analyze_cmd, analyze_opt.format);

  OeisOptions oeis_opt;
  auto* oeis_cmd =
      app.add_subcommand("oeis", "Embedded sequence terms and identity checks");
  oeis_cmd->add_option("name", oeis_opt.name, "A045623 or A001792")
      ->required()
      ->check(CLI::IsMember({"A045623", "A001792"}));
  oeis_cmd->add_option("--terms", oeis_opt.terms, "Terms to print")
      ->capture_default_str();
  oeis_cmd->add_flag("--check", oeis_opt.check,
                     "Check fixtures and closed-form identities");
  oeis_cmd->add_option("--n-max", oeis_opt.check_n_max,
                       "Identity check range for --check")
      ->capture_default_str();
  add_format_flag(oeis_cmd, oeis_opt.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (table_cmd->parsed()) return run_table(table_opt);
    if (verify_cmd->parsed()) return run_verify(verify_opt);
    if (bijection_cmd->parsed()) return run_bijection(bijection_opt);
    if (sample_cmd->parsed()) {
      if (i_opt->count() > 0) sample_opt.run_length = sample_i;
      return run_sample(sample_opt);
    }
    if (analyze_cmd->parsed()) return run_analyze(analyze_opt);
    if (oeis_cmd->parsed()) return run_oeis(oeis_opt);
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
