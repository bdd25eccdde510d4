#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "runspec/core.hpp"

namespace runspec {

// Per-string rows are only kept for small n; above this they would just be a
// memory sink.
inline constexpr std::uint32_t kMaxRowRetentionBits = 16;

/// Aggregate run spectrum over all 2^n binary n-strings, with optional
/// per-string rows in string-index order.
struct SpectrumTable {
  std::uint32_t n = 0;
  RunSpectrum aggregate;
  std::vector<std::pair<std::uint64_t, RunSpectrum>> per_string;
};

/// Brute-force aggregation over every binary n-string (1 <= n <= 63). The
/// inner kernel extracts runs word-parallel from the string index; the index
/// range is split into contiguous chunks processed by OpenMP workers, and
/// partial spectra merge by component-wise addition, so the result is
/// identical for every worker count. threads = 0 uses the OpenMP default.
/// keep_rows requires n <= kMaxRowRetentionBits.
SpectrumTable enumerate_spectrum_table(std::uint32_t n, bool keep_rows = false,
                                       std::uint32_t threads = 0);

/// Serial reference: walks every index through BitString::from_index and
/// extract_runs. Slower than the kernel above; kept as its correctness
/// baseline and benchmark counterpart.
SpectrumTable enumerate_spectrum_table_serial(std::uint32_t n,
                                              bool keep_rows = false);

/// Sum of the aggregate spectrum over all binary n-strings.
BigCount enumerated_total_runs(std::uint32_t n, std::uint32_t threads = 0);

enum class BitOrder { msb_first, lsb_first };

/// Incremental run-spectrum analyzer over a byte stream. Bytes arrive in
/// arbitrary chunks; a run crossing a chunk boundary is counted once at its
/// full length. msb_first reads each byte's most significant bit first.
class StreamAnalyzer {
 public:
  explicit StreamAnalyzer(BitOrder order = BitOrder::msb_first);

  void feed(std::span<const std::uint8_t> chunk);

  /// Flushes the trailing run and returns the spectrum (length = total bits
  /// consumed). No further feeding is allowed afterwards.
  RunSpectrum finish();

  std::uint64_t bits_consumed() const { return bits_; }

 private:
  void close_run();

  BitOrder order_;
  std::uint64_t bits_ = 0;
  std::uint64_t open_run_ = 0;
  std::vector<std::uint64_t> counts_;
  bool finished_ = false;
};

/// Run spectrum of the byte stream `in`, read to end-of-input in fixed-size
/// chunks (constant memory). Propagates stream I/O failures.
RunSpectrum analyze_stream(std::istream& in,
                           BitOrder order = BitOrder::msb_first);

/// Convenience one-shot form of the analyzer.
RunSpectrum analyze_bytes(std::span<const std::uint8_t> data,
                          BitOrder order = BitOrder::msb_first);

}  // namespace runspec
