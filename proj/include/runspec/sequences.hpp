#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "runspec/bignum.hpp"

namespace runspec {

/// OEIS A045623: a(0) = 1, a(j) = (j+3) * 2^(j-2) for j >= 1. Counts the
/// ones over all compositions of j+1; equals the length-i run count r_n(i)
/// at j = n - i.
BigCount a045623(std::uint64_t j);

/// OEIS A001792: b(j) = (j+2) * 2^(j-1). Counts the parts over all
/// compositions of j+1; equals the total run count t(n) at j = n - 1.
BigCount a001792(std::uint64_t j);

/// First terms of each sequence, transcribed by hand as hermetic fixtures;
/// nothing is fetched at test or run time.
inline constexpr std::array<std::uint64_t, 20> kA045623Fixture = {
    1,     2,     5,      12,     28,     64,     144,     320,     704,
    1536,  3328,  7168,   15360,  32768,  69632,  147456,  311296,  655360,
    1376256, 2883584};
inline constexpr std::array<std::uint64_t, 20> kA001792Fixture = {
    1,     3,     8,      20,     48,     112,    256,     576,     1280,
    2816,  6144,  13312,  28672,  61440,  131072, 278528,  589824,  1245184,
    2621440, 5505024};

struct CrossCheckReport {
  std::uint64_t n_max = 0;
  std::uint64_t checks = 0;   // identity instances tested
  bool ok = false;
  std::string first_failure;  // empty when ok
};

/// Verifies r(n, i) = a045623(n - i) for 1 <= i <= n-1 <= n_max - 1 and
/// t(n) = a001792(n - 1) for 1 <= n <= n_max, in exact arithmetic.
/// Requires n_max >= 2.
CrossCheckReport cross_check(std::uint64_t n_max);

}  // namespace runspec
