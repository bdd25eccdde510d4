#include "runspec/core.hpp"

#include <stdexcept>

namespace runspec {

BitString BitString::from_index(std::uint32_t n, std::uint64_t index) {
  if (n > kMaxIndexBits) {
    throw std::invalid_argument("BitString::from_index: n exceeds index limit");
  }
  if (n < 64 && (index >> n) != 0) {
    throw std::out_of_range("BitString::from_index: index out of range");
  }
  BitString s(n);
  if (n > 0) {
    s.words_[0] = index << (64 - n);
  }
  return s;
}

BitString BitString::from_words(std::vector<std::uint64_t> words,
                                std::uint64_t length) {
  const std::uint64_t needed = (length + 63) / 64;
  if (words.size() != needed) {
    throw std::invalid_argument("BitString::from_words: word count mismatch");
  }
  BitString s;
  s.length_ = length;
  s.words_ = std::move(words);
  const unsigned tail = length % 64;
  if (tail != 0) {
    s.words_.back() &= ~std::uint64_t{0} << (64 - tail);
  }
  return s;
}

BitString BitString::parse(std::string_view text) {
  BitString s(text.size());
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    if (text[pos] == '1') {
      s.set_bit(pos + 1, true);
    } else if (text[pos] != '0') {
      throw std::invalid_argument("BitString::parse: expected only 0/1");
    }
  }
  return s;
}

std::uint64_t BitString::to_index() const {
  if (length_ > kMaxIndexBits) {
    throw std::invalid_argument("BitString::to_index: string too long");
  }
  if (length_ == 0) {
    return 0;
  }
  return words_[0] >> (64 - length_);
}

bool BitString::bit(std::uint64_t position) const {
  if (position < 1 || position > length_) {
    throw std::out_of_range("BitString::bit: position out of range");
  }
  const std::uint64_t word = words_[(position - 1) >> 6];
  return (word >> (63 - ((position - 1) & 63))) & 1;
}

void BitString::set_bit(std::uint64_t position, bool value) {
  if (position < 1 || position > length_) {
    throw std::out_of_range("BitString::set_bit: position out of range");
  }
  const std::uint64_t mask = std::uint64_t{1} << (63 - ((position - 1) & 63));
  if (value) {
    words_[(position - 1) >> 6] |= mask;
  } else {
    words_[(position - 1) >> 6] &= ~mask;
  }
}

BitString BitString::reversed() const {
  BitString r(length_);
  for (std::uint64_t pos = 1; pos <= length_; ++pos) {
    if (bit(length_ - pos + 1)) {
      r.set_bit(pos, true);
    }
  }
  return r;
}

std::uint64_t BitString::popcount() const {
  std::uint64_t total = 0;
  for (std::uint64_t w : words_) {
    total += static_cast<std::uint64_t>(std::popcount(w));
  }
  return total;
}

std::string BitString::to_string() const {
  std::string out;
  out.reserve(length_);
  for (std::uint64_t pos = 1; pos <= length_; ++pos) {
    out.push_back(bit(pos) ? '1' : '0');
  }
  return out;
}

namespace {
const BigCount kZeroCount = 0;
}

const BigCount& RunSpectrum::count(std::uint64_t run_length) const {
  if (run_length == 0 || run_length > length_ ||
      run_length >= counts_.size()) {
    return kZeroCount;
  }
  return counts_[run_length];
}

void RunSpectrum::add_runs(std::uint64_t run_length, std::uint64_t n) {
  if (run_length < 1 || run_length > length_) {
    throw std::invalid_argument("RunSpectrum::add_runs: run length out of range");
  }
  if (run_length >= counts_.size()) {
    counts_.resize(run_length + 1);
  }
  counts_[run_length] += n;
}

void RunSpectrum::add_runs(std::uint64_t run_length, const BigCount& n) {
  if (run_length < 1 || run_length > length_) {
    throw std::invalid_argument("RunSpectrum::add_runs: run length out of range");
  }
  if (run_length >= counts_.size()) {
    counts_.resize(run_length + 1);
  }
  counts_[run_length] += n;
}

void RunSpectrum::add(const RunSpectrum& other) {
  if (other.length_ != length_) {
    throw std::invalid_argument("RunSpectrum::add: length mismatch");
  }
  if (other.counts_.size() > counts_.size()) {
    counts_.resize(other.counts_.size());
  }
  for (std::size_t i = 1; i < other.counts_.size(); ++i) {
    counts_[i] += other.counts_[i];
  }
}

BigCount RunSpectrum::total_runs() const {
  BigCount total = 0;
  for (std::size_t i = 1; i < counts_.size(); ++i) {
    total += counts_[i];
  }
  return total;
}

BigCount RunSpectrum::weighted_total() const {
  BigCount total = 0;
  for (std::size_t i = 1; i < counts_.size(); ++i) {
    total += counts_[i] * static_cast<unsigned long>(i);
  }
  return total;
}

std::uint64_t RunSpectrum::max_run_length() const {
  for (std::size_t i = counts_.size(); i-- > 1;) {
    if (counts_[i] != 0) {
      return i;
    }
  }
  return 0;
}

bool operator==(const RunSpectrum& a, const RunSpectrum& b) {
  if (a.length_ != b.length_) {
    return false;
  }
  const std::size_t widest = std::max(a.counts_.size(), b.counts_.size());
  for (std::size_t i = 1; i < widest; ++i) {
    if (a.count(i) != b.count(i)) {
      return false;
    }
  }
  return true;
}

RunSpectrum extract_runs(const BitString& s) {
  RunSpectrum spectrum(s.length());
  RunScanner scanner([&spectrum](std::uint64_t, std::uint64_t length) {
    spectrum.add_runs(length);
  });
  std::uint64_t remaining = s.length();
  for (std::uint64_t word : s.words()) {
    scanner.feed(word, static_cast<unsigned>(std::min<std::uint64_t>(remaining, 64)));
    remaining -= std::min<std::uint64_t>(remaining, 64);
  }
  scanner.finish();
  return spectrum;
}

std::vector<std::uint64_t> run_start_positions(const BitString& s,
                                               std::uint64_t run_length) {
  if (run_length < 1 || run_length > s.length()) {
    throw std::invalid_argument("run_start_positions: run length out of range");
  }
  std::vector<std::uint64_t> starts;
  RunScanner scanner([&](std::uint64_t start, std::uint64_t length) {
    if (length == run_length) {
      starts.push_back(start);
    }
  });
  std::uint64_t remaining = s.length();
  for (std::uint64_t word : s.words()) {
    scanner.feed(word, static_cast<unsigned>(std::min<std::uint64_t>(remaining, 64)));
    remaining -= std::min<std::uint64_t>(remaining, 64);
  }
  scanner.finish();
  return starts;
}

}  // namespace runspec
