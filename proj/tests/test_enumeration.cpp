#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "runspec/closedform.hpp"
#include "runspec/core.hpp"
#include "runspec/enumeration.hpp"
#include "runspec/rng.hpp"

using namespace runspec;

TEST_CASE("aggregates equal the closed form for every small n") {
  for (std::uint32_t n = 1; n <= 14; ++n) {
    const SpectrumTable table = enumerate_spectrum_table(n);
    CHECK(table.n == n);
    CHECK(table.per_string.empty());
    for (std::uint32_t i = 1; i <= n; ++i) {
      CHECK(table.aggregate.count(i) == run_count_closed(RunCountQuery(n, i)));
    }
    CHECK(table.aggregate.total_runs() == total_runs_closed(n));
  }
}

TEST_CASE("serial reference and parallel kernel agree exactly") {
  for (std::uint32_t n : {1u, 5u, 10u, 13u}) {
    const SpectrumTable serial = enumerate_spectrum_table_serial(n, n <= 10);
    for (std::uint32_t threads : {1u, 2u, 3u, 8u}) {
      const SpectrumTable parallel =
          enumerate_spectrum_table(n, n <= 10, threads);
      CHECK(parallel.aggregate == serial.aggregate);
      CHECK(parallel.per_string == serial.per_string);
    }
  }
}

TEST_CASE("per-string rows match the known small-n tables") {
  const SpectrumTable t3 = enumerate_spectrum_table(3, true);
  REQUIRE(t3.per_string.size() == 8);
  const std::uint64_t ones_3[] = {0, 1, 1, 0, 1, 2, 0, 0};
  for (std::uint64_t index = 0; index < 8; ++index) {
    CHECK(t3.per_string[index].first == index);
    CHECK(t3.per_string[index].second.count(1) == ones_3[index]);
  }

  const SpectrumTable t4 = enumerate_spectrum_table(4, true);
  REQUIRE(t4.per_string.size() == 16);
  const std::uint64_t ones_4[] = {0, 1, 1, 0, 1, 2, 0, 0,
                                  1, 2, 2, 1, 0, 1, 0, 0};
  for (std::uint64_t index = 0; index < 16; ++index) {
    CHECK(t4.per_string[index].second.count(1) == ones_4[index]);
  }
  // Column 0110 (index 6) holds exactly one run, of length 2.
  CHECK(t4.per_string[6].second.count(2) == 1);
  CHECK(t4.per_string[6].second.total_runs() == 1);
}

TEST_CASE("per-string rows match extract_runs string by string") {
  const SpectrumTable table = enumerate_spectrum_table(9, true);
  for (const auto& [index, spectrum] : table.per_string) {
    CHECK(spectrum == extract_runs(BitString::from_index(9, index)));
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(enumerate_spectrum_table(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_spectrum_table(64), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_spectrum_table(17, true), std::invalid_argument);
  CHECK_NOTHROW(enumerate_spectrum_table(16, true));
}

TEST_CASE("enumerated totals match the closed total") {
  for (std::uint32_t n = 1; n <= 14; ++n) {
    CHECK(enumerated_total_runs(n) == total_runs_closed(n));
  }
  CHECK(enumerated_total_runs(20, 3) == total_runs_closed(20));
}

TEST_CASE("stream analyzer handles byte examples") {
  const std::uint8_t ff[] = {0xFF};
  const RunSpectrum a = analyze_bytes(ff);
  CHECK(a.length() == 8);
  CHECK(a.count(8) == 1);
  CHECK(a.total_runs() == 1);

  const RunSpectrum b = analyze_bytes({});
  CHECK(b.length() == 0);
  CHECK(b.total_runs() == 0);

  // 0x01 0x80 joins across the byte boundary MSB-first, splits LSB-first.
  const std::uint8_t pair[] = {0x01, 0x80};
  const RunSpectrum msb = analyze_bytes(pair, BitOrder::msb_first);
  CHECK(msb.count(2) == 1);
  CHECK(msb.total_runs() == 1);
  const RunSpectrum lsb = analyze_bytes(pair, BitOrder::lsb_first);
  CHECK(lsb.count(1) == 2);
  CHECK(lsb.total_runs() == 2);
}

TEST_CASE("chunk boundaries never split runs") {
  SplitMix64 gen{101};
  std::vector<std::uint8_t> data(4096);
  for (auto& byte : data) byte = static_cast<std::uint8_t>(gen.next());
  const RunSpectrum whole = analyze_bytes(data);

  for (std::size_t chunk : {1u, 3u, 7u, 64u, 1000u}) {
    StreamAnalyzer analyzer;
    for (std::size_t at = 0; at < data.size(); at += chunk) {
      const std::size_t len = std::min(chunk, data.size() - at);
      analyzer.feed({data.data() + at, len});
    }
    CHECK(analyzer.finish() == whole);
  }
}

TEST_CASE("stream analyzer agrees with extract_runs on packed data") {
  SplitMix64 gen{202};
  for (int round = 0; round < 20; ++round) {
    std::vector<std::uint8_t> data(1 + gen.next() % 500);
    for (auto& byte : data) byte = static_cast<std::uint8_t>(gen.next());
    BitString s(data.size() * 8);
    for (std::size_t b = 0; b < data.size(); ++b) {
      for (int bit = 0; bit < 8; ++bit) {
        s.set_bit(8 * b + bit + 1, (data[b] >> (7 - bit)) & 1);
      }
    }
    CHECK(analyze_bytes(data) == extract_runs(s));

    BitString r(data.size() * 8);
    for (std::size_t b = 0; b < data.size(); ++b) {
      for (int bit = 0; bit < 8; ++bit) {
        r.set_bit(8 * b + bit + 1, (data[b] >> bit) & 1);
      }
    }
    CHECK(analyze_bytes(data, BitOrder::lsb_first) == extract_runs(r));
  }
}

TEST_CASE("uniform byte fast paths") {
  std::vector<std::uint8_t> ones(1000, 0xFF);
  const RunSpectrum a = analyze_bytes(ones);
  CHECK(a.count(8000) == 1);
  CHECK(a.total_runs() == 1);

  std::vector<std::uint8_t> zeros(1000, 0x00);
  const RunSpectrum b = analyze_bytes(zeros);
  CHECK(b.length() == 8000);
  CHECK(b.total_runs() == 0);

  // Alternating 0xFF / 0x00 bytes: 500 runs of 8.
  std::vector<std::uint8_t> alternating;
  for (int k = 0; k < 500; ++k) {
    alternating.push_back(0xFF);
    alternating.push_back(0x00);
  }
  const RunSpectrum c = analyze_bytes(alternating);
  CHECK(c.count(8) == 500);
  CHECK(c.total_runs() == 500);
}

TEST_CASE("analyzer rejects use after finish") {
  StreamAnalyzer analyzer;
  const std::uint8_t byte[] = {0xAA};
  analyzer.feed(byte);
  CHECK(analyzer.bits_consumed() == 8);
  (void)analyzer.finish();
  CHECK_THROWS_AS(analyzer.feed(byte), std::logic_error);
  CHECK_THROWS_AS(analyzer.finish(), std::logic_error);
}

TEST_CASE("analyze_stream consumes istreams chunk-safely") {
  SplitMix64 gen{303};
  std::string data(100000, '\0');
  for (auto& ch : data) ch = static_cast<char>(gen.next());
  std::istringstream in(data, std::ios::binary);
  const RunSpectrum from_stream = analyze_stream(in);
  const RunSpectrum from_bytes = analyze_bytes(
      {reinterpret_cast<const std::uint8_t*>(data.data()), data.size()});
  CHECK(from_stream == from_bytes);
  CHECK(from_stream.length() == 800000);

  std::istringstream empty("", std::ios::binary);
  CHECK(analyze_stream(empty).length() == 0);
}
