#include "runspec/stochastic.hpp"

#include <omp.h>

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "runspec/core.hpp"
#include "runspec/rng.hpp"

namespace runspec {

namespace {

// Counter flush threshold. A sample contributes at most (n+1)/2 < 2^20 runs,
// so flushing above 2^60 can never overflow the local accumulator.
constexpr std::uint64_t kFlushThreshold = std::uint64_t{1} << 60;

void validate_sample_args(std::uint64_t n,
                          const std::optional<std::uint64_t>& run_length,
                          std::uint64_t samples) {
  if (n < 1 || n > kMaxSampleBits) {
    throw std::invalid_argument("monte_carlo: need 1 <= n <= 2^20");
  }
  if (run_length && (*run_length < 1 || *run_length > n)) {
    throw std::invalid_argument("monte_carlo: need 1 <= run length <= n");
  }
  if (samples < 1) {
    throw std::invalid_argument("monte_carlo: need samples >= 1");
  }
}

SampleReport assemble_report(std::uint64_t n,
                             std::optional<std::uint64_t> run_length,
                             std::uint64_t samples, std::uint64_t seed,
                             BigCount observed) {
  SampleReport report;
  report.n = n;
  report.run_length = run_length;
  report.samples = samples;
  report.seed = seed;
  report.exact_mean =
      run_length ? expected_runs_of_length(n, *run_length) : expected_total(n);
  report.empirical_mean = make_rational(observed, BigCount(samples)).get_d();
  report.observed = std::move(observed);
  const double exact = report.exact_mean.get_d();
  report.abs_error = std::fabs(report.empirical_mean - exact);
  report.rel_error = exact != 0.0 ? report.abs_error / std::fabs(exact)
                                  : (report.empirical_mean == 0.0 ? 0.0 : HUGE_VAL);
  return report;
}

}  // namespace

ExactRational prob_run_starts_at(std::uint64_t n, std::uint64_t k) {
  if (k < 1 || k > n) {
    throw std::invalid_argument("prob_run_starts_at: need 1 <= k <= n");
  }
  return k == 1 ? pow2_inv(1) : pow2_inv(2);
}

ExactRational prob_run_of_length_at(std::uint64_t n, std::uint64_t k,
                                    std::uint64_t i) {
  if (k < 1 || k > n) {
    throw std::invalid_argument("prob_run_of_length_at: need 1 <= k <= n");
  }
  if (i < 1 || i > n) {
    throw std::invalid_argument("prob_run_of_length_at: need 1 <= i <= n");
  }
  if (k + i > n + 1) return ExactRational(0);
  const ExactRational conditional =
      k + i <= n ? pow2_inv(i) : pow2_inv(i - 1);
  return conditional * prob_run_starts_at(n, k);
}

ExactRational expected_total(std::uint64_t n) {
  if (n < 1) {
    throw std::invalid_argument("expected_total: n must be >= 1");
  }
  return make_rational(BigCount(n + 1), BigCount(4));
}

ExactRational expected_runs_of_length(std::uint64_t n, std::uint64_t i) {
  if (n < 1 || i < 1 || i > n) {
    throw std::invalid_argument(
        "expected_runs_of_length: need 1 <= i <= n");
  }
  if (i == n) return pow2_inv(n);
  return ExactRational(n - i + 3) * pow2_inv(i + 2);
}

ExactRational asymptotic_fraction(std::uint64_t i) {
  if (i < 1) {
    throw std::invalid_argument("asymptotic_fraction: i must be >= 1");
  }
  return pow2_inv(i);
}

SampleReport monte_carlo(std::uint64_t n,
                         std::optional<std::uint64_t> run_length,
                         std::uint64_t samples, std::uint64_t seed,
                         int threads) {
  validate_sample_args(n, run_length, samples);
  const std::uint64_t words_per_sample = (n + 63) / 64;
  const unsigned tail_bits = static_cast<unsigned>(n - 64 * (words_per_sample - 1));
  const bool exact_length = run_length.has_value();
  const std::uint64_t wanted = exact_length ? *run_length : 0;

  const int workers = threads > 0 ? threads : omp_get_max_threads();
  BigCount observed = 0;

#pragma omp parallel num_threads(workers)
  {
    std::uint64_t local = 0;
    BigCount partial = 0;
#pragma omp for schedule(static) nowait
    for (unsigned long long j = 0; j < samples; ++j) {
      SplitMix64 gen = SplitMix64::at_word(seed, j * words_per_sample);
      std::uint64_t hits = 0;
      auto on_run = [&](std::uint64_t, std::uint64_t length) {
        if (!exact_length || length == wanted) ++hits;
      };
      RunScanner scanner(on_run);
      for (std::uint64_t w = 0; w + 1 < words_per_sample; ++w) {
        scanner.feed(gen.next(), 64);
      }
      scanner.feed(gen.next(), tail_bits);
      scanner.finish();
      local += hits;
      if (local > kFlushThreshold) {
        partial += BigCount(local);
        local = 0;
      }
    }
    if (local > 0) partial += BigCount(local);
#pragma omp critical(runspec_stochastic_merge)
    observed += partial;
  }

  return assemble_report(n, run_length, samples, seed, std::move(observed));
}

SampleReport monte_carlo_serial(std::uint64_t n,
                                std::optional<std::uint64_t> run_length,
                                std::uint64_t samples, std::uint64_t seed) {
  validate_sample_args(n, run_length, samples);
  const std::uint64_t words_per_sample = (n + 63) / 64;
  BigCount observed = 0;
  std::vector<std::uint64_t> words(words_per_sample);
  for (std::uint64_t j = 0; j < samples; ++j) {
    SplitMix64 gen = SplitMix64::at_word(seed, j * words_per_sample);
    for (auto& w : words) w = gen.next();
    const BitString sample = BitString::from_words(words, n);
    const RunSpectrum spectrum = extract_runs(sample);
    observed += run_length ? spectrum.count(*run_length) : spectrum.total_runs();
  }
  return assemble_report(n, run_length, samples, seed, std::move(observed));
}

}  // namespace runspec
