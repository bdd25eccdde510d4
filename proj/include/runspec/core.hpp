#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "runspec/bignum.hpp"

namespace runspec {

// Largest n for which the 2^n string space is addressed by a single machine
// word. Larger lengths are still representable as BitStrings; only the
// index<->string mapping is capped.
inline constexpr std::uint32_t kMaxIndexBits = 63;

/// A finite binary string. Bits are packed into 64-bit words with position 1
/// (the leftmost bit) at the most significant bit of word 0; padding bits of
/// the last word are always zero.
class BitString {
 public:
  BitString() = default;

  /// All-zero string of the given length.
  explicit BitString(std::uint64_t length)
      : length_(length), words_((length + 63) / 64, 0) {}

  /// The n-bit binary expansion of `index`, most significant bit first, so
  /// index 0 is the all-zero string and index 2^n - 1 is all ones.
  /// Requires n <= kMaxIndexBits and index < 2^n.
  static BitString from_index(std::uint32_t n, std::uint64_t index);

  /// Takes raw packed words; masks any padding bits in the last word to zero.
  static BitString from_words(std::vector<std::uint64_t> words,
                              std::uint64_t length);

  /// Builds from a text like "0110". Throws on any other character.
  static BitString parse(std::string_view text);

  /// Inverse of from_index. Requires length() <= kMaxIndexBits.
  std::uint64_t to_index() const;

  std::uint64_t length() const { return length_; }
  bool empty() const { return length_ == 0; }

  /// Bit at 1-based position (1 = leftmost).
  bool bit(std::uint64_t position) const;
  void set_bit(std::uint64_t position, bool value);

  BitString reversed() const;

  /// Number of one-bits.
  std::uint64_t popcount() const;

  std::span<const std::uint64_t> words() const { return words_; }

  std::string to_string() const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::uint64_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Counts of maximal runs of ones by exact length, for a single string or
/// aggregated over many strings. Storage grows only up to the longest run
/// actually recorded, so spectra of long bit streams stay small; counts
/// outside the stored range read as zero.
class RunSpectrum {
 public:
  RunSpectrum() = default;
  explicit RunSpectrum(std::uint64_t length) : length_(length) {}

  /// String length n the spectrum refers to (total bits for stream spectra).
  std::uint64_t length() const { return length_; }

  /// Count of runs of exactly `run_length`; zero outside 1..length().
  const BigCount& count(std::uint64_t run_length) const;

  /// Records `n` runs of the given length. Requires 1 <= run_length <= length().
  void add_runs(std::uint64_t run_length, std::uint64_t n = 1);
  void add_runs(std::uint64_t run_length, const BigCount& n);

  /// Component-wise addition of a spectrum with the same length.
  void add(const RunSpectrum& other);

  /// Sum of all counts.
  BigCount total_runs() const;

  /// Sum of run_length * count(run_length); equals the number of one-bits
  /// when the spectrum came from a single string.
  BigCount weighted_total() const;

  /// Largest run length with a nonzero count (0 if none).
  std::uint64_t max_run_length() const;

  friend bool operator==(const RunSpectrum& a, const RunSpectrum& b);

 private:
  std::uint64_t length_ = 0;
  std::vector<BigCount> counts_;  // counts_[i] = runs of length i; slot 0 unused
};

// Streams packed words (MSB-first bit order) and reports every maximal run of
// ones as (1-based start position, length). A block of ones counts as one run
// exactly when it is bounded by a zero or by the start/end of the data, so
// runs crossing word boundaries are reported once at full length.
template <typename OnRun>
class RunScanner {
 public:
  explicit RunScanner(OnRun on_run) : on_run_(std::move(on_run)) {}

  /// Consumes the top `bit_count` bits of `word` (1..64). Lower-order bits
  /// beyond bit_count are ignored.
  void feed(std::uint64_t word, unsigned bit_count) {
    unsigned offset = 0;
    while (offset < bit_count) {
      const std::uint64_t rest = word << offset;
      if (rest >> 63) {
        const unsigned ones = std::min<unsigned>(
            static_cast<unsigned>(std::countl_one(rest)), bit_count - offset);
        run_length_ += ones;
        offset += ones;
      } else {
        if (run_length_ > 0) {
          on_run_(consumed_ + offset - run_length_ + 1, run_length_);
          run_length_ = 0;
        }
        const unsigned zeros = std::min<unsigned>(
            static_cast<unsigned>(std::countl_zero(rest)), bit_count - offset);
        offset += zeros;
      }
    }
    consumed_ += bit_count;
  }

  /// Flushes a trailing run (the end of the data closes it).
  void finish() {
    if (run_length_ > 0) {
      on_run_(consumed_ - run_length_ + 1, run_length_);
      run_length_ = 0;
    }
  }

 private:
  OnRun on_run_;
  std::uint64_t consumed_ = 0;
  std::uint64_t run_length_ = 0;
};

/// Spectrum of maximal runs of ones in `s`. The empty string yields an empty
/// spectrum.
RunSpectrum extract_runs(const BitString& s);

/// Sorted 1-based start positions of maximal runs of exactly `run_length`
/// ones. Requires 1 <= run_length <= s.length().
std::vector<std::uint64_t> run_start_positions(const BitString& s,
                                               std::uint64_t run_length);

}  // namespace runspec
