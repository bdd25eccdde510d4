#pragma once

#include <cstdint>
#include <optional>

#include "runspec/bignum.hpp"

namespace runspec {

inline constexpr std::uint64_t kMaxSampleBits = std::uint64_t{1} << 20;

/// Probability that a maximal run of ones starts at position k of a uniform
/// n-string: 1/2 for k = 1, otherwise 1/4.
ExactRational prob_run_starts_at(std::uint64_t n, std::uint64_t k);

/// Probability that a maximal run of ones of exact length i starts at
/// position k of a uniform n-string. The conditional factor given a start at
/// k is geometric: 2^-i while a terminating zero fits (k <= n-i), 2^-(i-1)
/// when the run may end at the string boundary (k = n-i+1), zero beyond.
ExactRational prob_run_of_length_at(std::uint64_t n, std::uint64_t k,
                                    std::uint64_t i);

/// Expected total number of runs of ones in a uniform n-string, (n+1)/4.
ExactRational expected_total(std::uint64_t n);

/// Expected number of maximal runs of exact length i, (n-i+3) * 2^(-i-2) for
/// i <= n-1 and 2^-n for i = n.
ExactRational expected_runs_of_length(std::uint64_t n, std::uint64_t i);

/// Large-n limit of the fraction of runs having length i: 2^-i.
ExactRational asymptotic_fraction(std::uint64_t i);

struct SampleReport {
  std::uint64_t n = 0;
  std::optional<std::uint64_t> run_length;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  BigCount observed;           // total matching runs over all samples
  double empirical_mean = 0.0;
  ExactRational exact_mean;
  double abs_error = 0.0;
  double rel_error = 0.0;

  friend bool operator==(const SampleReport&, const SampleReport&) = default;
};

/// Draws `samples` uniform n-strings and counts maximal runs of ones (of
/// exact length run_length when given, otherwise all lengths), reporting the
/// empirical mean against the exact expectation.
///
/// Sample j reads words [j*W, (j+1)*W) of the single splitmix64 stream
/// defined by `seed`, where W is the per-sample word count. Each sample owns
/// a fixed stretch of one stream, so the report is bit-identical for any
/// worker count and any schedule. threads = 0 uses the runtime default.
SampleReport monte_carlo(std::uint64_t n, std::optional<std::uint64_t> run_length,
                         std::uint64_t samples, std::uint64_t seed,
                         int threads = 0);

/// Single-threaded reference that realizes every sample as a BitString and
/// counts with extract_runs. Must agree with monte_carlo bit for bit.
SampleReport monte_carlo_serial(std::uint64_t n,
                                std::optional<std::uint64_t> run_length,
                                std::uint64_t samples, std::uint64_t seed);

}  // namespace runspec
