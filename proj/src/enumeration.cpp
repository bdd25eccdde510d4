#include "runspec/enumeration.hpp"

#include <omp.h>

#include <array>
#include <bit>
#include <istream>
#include <stdexcept>

namespace runspec {

namespace {

// Flush local uint64 histograms into arbitrary-precision partials at least
// this often; keeps the fixed-width buckets far from overflow for any n.
constexpr std::uint64_t kFlushInterval = std::uint64_t{1} << 30;

// Tallies the runs of ones of the n-bit value `bits` into counts[length].
// Peels one maximal run per iteration: adding the lowest set bit carries
// through the whole lowest run and stops at the zero above it.
inline void tally_index_runs(std::uint64_t bits, std::uint64_t* counts) {
  while (bits != 0) {
    const std::uint64_t lowest = bits & (0 - bits);
    const std::uint64_t carried = bits + lowest;
    counts[std::popcount(bits & ~carried)] += 1;
    bits &= carried;
  }
}

void flush_histogram(std::array<std::uint64_t, 64>& local, std::uint32_t n,
                     RunSpectrum& partial) {
  for (std::uint32_t i = 1; i <= n; ++i) {
    if (local[i] != 0) {
      partial.add_runs(i, local[i]);
      local[i] = 0;
    }
  }
}

void validate_enumeration_args(std::uint32_t n, bool keep_rows) {
  if (n < 1 || n > kMaxIndexBits) {
    throw std::invalid_argument("enumerate_spectrum_table: need 1 <= n <= 63");
  }
  if (keep_rows && n > kMaxRowRetentionBits) {
    throw std::invalid_argument(
        "enumerate_spectrum_table: per-string rows only kept for n <= 16");
  }
}

RunSpectrum row_from_histogram(const std::array<std::uint64_t, 64>& counts,
                               std::uint32_t n) {
  RunSpectrum row(n);
  for (std::uint32_t i = 1; i <= n; ++i) {
    if (counts[i] != 0) {
      row.add_runs(i, counts[i]);
    }
  }
  return row;
}

}  // namespace

SpectrumTable enumerate_spectrum_table(std::uint32_t n, bool keep_rows,
                                       std::uint32_t threads) {
  validate_enumeration_args(n, keep_rows);
  const std::uint64_t total = std::uint64_t{1} << n;

  SpectrumTable table;
  table.n = n;
  table.aggregate = RunSpectrum(n);
  if (keep_rows) {
    table.per_string.resize(total);
  }

  const int workers = threads == 0 ? omp_get_max_threads()
                                   : static_cast<int>(threads);

#pragma omp parallel num_threads(workers)
  {
    std::array<std::uint64_t, 64> local{};
    RunSpectrum partial(n);
    std::uint64_t pending = 0;

#pragma omp for schedule(static) nowait
    for (unsigned long long index = 0; index < total; ++index) {
      if (keep_rows) {
        std::array<std::uint64_t, 64> one{};
        tally_index_runs(index, one.data());
        table.per_string[index] = {index, row_from_histogram(one, n)};
        for (std::uint32_t i = 1; i <= n; ++i) {
          local[i] += one[i];
        }
      } else {
        tally_index_runs(index, local.data());
      }
      if (++pending == kFlushInterval) {
        flush_histogram(local, n, partial);
        pending = 0;
      }
    }
    flush_histogram(local, n, partial);

#pragma omp critical(runspec_enumeration_merge)
    table.aggregate.add(partial);
  }

  return table;
}

SpectrumTable enumerate_spectrum_table_serial(std::uint32_t n, bool keep_rows) {
  validate_enumeration_args(n, keep_rows);
  const std::uint64_t total = std::uint64_t{1} << n;

  SpectrumTable table;
  table.n = n;
  table.aggregate = RunSpectrum(n);
  if (keep_rows) {
    table.per_string.reserve(total);
  }

  for (std::uint64_t index = 0; index < total; ++index) {
    RunSpectrum spectrum = extract_runs(BitString::from_index(n, index));
    table.aggregate.add(spectrum);
    if (keep_rows) {
      table.per_string.emplace_back(index, std::move(spectrum));
    }
  }
  return table;
}

BigCount enumerated_total_runs(std::uint32_t n, std::uint32_t threads) {
  return enumerate_spectrum_table(n, false, threads).aggregate.total_runs();
}

StreamAnalyzer::StreamAnalyzer(BitOrder order) : order_(order) {}

void StreamAnalyzer::close_run() {
  if (open_run_ > 0) {
    if (open_run_ >= counts_.size()) {
      counts_.resize(open_run_ + 1, 0);
    }
    counts_[open_run_] += 1;
    open_run_ = 0;
  }
}

void StreamAnalyzer::feed(std::span<const std::uint8_t> chunk) {
  if (finished_) {
    throw std::logic_error("StreamAnalyzer::feed: already finished");
  }
  for (std::uint8_t raw : chunk) {
    std::uint8_t byte = raw;
    if (order_ == BitOrder::lsb_first) {
      // reverse the bit order within the byte
      byte = static_cast<std::uint8_t>(((byte & 0xF0) >> 4) | ((byte & 0x0F) << 4));
      byte = static_cast<std::uint8_t>(((byte & 0xCC) >> 2) | ((byte & 0x33) << 2));
      byte = static_cast<std::uint8_t>(((byte & 0xAA) >> 1) | ((byte & 0x55) << 1));
    }
    if (byte == 0xFF) {
      open_run_ += 8;
    } else if (byte == 0x00) {
      close_run();
    } else {
      for (int shift = 7; shift >= 0; --shift) {
        if ((byte >> shift) & 1) {
          ++open_run_;
        } else {
          close_run();
        }
      }
    }
  }
  bits_ += 8 * chunk.size();
}

RunSpectrum StreamAnalyzer::finish() {
  if (finished_) {
    throw std::logic_error("StreamAnalyzer::finish: already finished");
  }
  finished_ = true;
  close_run();
  RunSpectrum spectrum(bits_);
  for (std::size_t i = 1; i < counts_.size(); ++i) {
    if (counts_[i] != 0) {
      spectrum.add_runs(i, counts_[i]);
    }
  }
  return spectrum;
}

RunSpectrum analyze_stream(std::istream& in, BitOrder order) {
  StreamAnalyzer analyzer(order);
  std::array<char, 65536> buffer;
  while (in) {
    in.read(buffer.data(), buffer.size());
    const std::streamsize got = in.gcount();
    if (got > 0) {
      analyzer.feed(std::span<const std::uint8_t>(
          reinterpret_cast<const std::uint8_t*>(buffer.data()),
          static_cast<std::size_t>(got)));
    }
  }
  if (in.bad()) {
    throw std::ios_base::failure("analyze_stream: read error");
  }
  return analyzer.finish();
}

RunSpectrum analyze_bytes(std::span<const std::uint8_t> data, BitOrder order) {
  StreamAnalyzer analyzer(order);
  analyzer.feed(data);
  return analyzer.finish();
}

}  // namespace runspec
