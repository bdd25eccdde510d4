#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

#include "runspec/core.hpp"

namespace runspec {

// Composition streams walk a (n-1)-bit bar mask, so totals are capped well
// below the word width; counting operations cap harder because the stream
// has 2^(n-1) items.
inline constexpr std::uint32_t kMaxCompositionTotal = 63;
inline constexpr std::uint32_t kMaxCompositionCountBits = 24;
inline constexpr std::uint32_t kMaxPlacementBits = 24;

/// An ordered sequence of positive parts with a fixed total.
class Composition {
 public:
  explicit Composition(std::vector<std::uint32_t> parts);

  std::uint64_t total() const { return total_; }
  const std::vector<std::uint32_t>& parts() const { return parts_; }
  std::uint32_t part_count() const {
    return static_cast<std::uint32_t>(parts_.size());
  }

  /// "(1,2)" style rendering.
  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<std::uint32_t> parts_;
  std::uint64_t total_ = 0;
};

/// All compositions of n in canonical order: ascending over the (n-1)-bit bar
/// mask whose bit j means "a part boundary after position j+1". Mask 0 is the
/// single-part composition (n); the all-ones mask is (1,1,...,1).
class CompositionRange {
 public:
  explicit CompositionRange(std::uint32_t n);

  class iterator {
   public:
    using value_type = Composition;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    iterator(std::uint32_t n, std::uint64_t mask) : n_(n), mask_(mask) {}

    Composition operator*() const;
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    void operator++(int) { ++mask_; }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.mask_ == b.mask_;
    }

    std::uint64_t bar_mask() const { return mask_; }

   private:
    std::uint32_t n_ = 0;
    std::uint64_t mask_ = 0;
  };

  iterator begin() const { return iterator(n_, 0); }
  iterator end() const { return iterator(n_, std::uint64_t{1} << (n_ - 1)); }

  /// Number of compositions, 2^(n-1).
  std::uint64_t size() const { return std::uint64_t{1} << (n_ - 1); }

 private:
  std::uint32_t n_;
};

/// Lazy stream of all compositions of n (n >= 1). Single-consumer.
CompositionRange compositions(std::uint32_t n);

/// The two strings of length c.total() whose maximal blocks of alternating
/// symbol have exactly c's part lengths in order; the first starts with a
/// block of ones, the second with a block of zeros. Between them the parts
/// of c map one-to-one onto runs of ones.
std::pair<BitString, BitString> composition_to_alternating_pair(
    const Composition& c);

/// A run of ones of a given length inserted into one of the part_count()+1
/// slots of a base composition (slot 0 = before the first part).
class RunPlacement {
 public:
  RunPlacement(Composition base, std::uint32_t slot, std::uint32_t run_length);

  const Composition& base() const { return base_; }
  std::uint32_t slot() const { return slot_; }
  std::uint32_t run_length() const { return run_length_; }

 private:
  Composition base_;
  std::uint32_t slot_;
  std::uint32_t run_length_;
};

struct PlacedRun {
  BitString string;
  std::uint64_t position;  // 1-based start of the distinguished run
};

/// Realizes a placement as the unique n-string in which the inserted run of
/// ones is a maximal run: the parts adjacent to the inserted run become runs
/// of zeros, and moving outward from it the remaining parts alternate
/// ones/zeros. Requires base total + run length = n.
PlacedRun placement_to_string(const RunPlacement& placement, std::uint64_t n);

/// One element of the placement stream. base_parts is empty only for the
/// run-fills-everything case i = n.
struct Placement {
  BitString string;
  std::uint64_t position;
  std::vector<std::uint32_t> base_parts;
  std::uint32_t slot = 0;
};

/// All (string, run position) pairs with a distinguished maximal run of ones
/// of length i in an n-string: every composition of n-i in canonical order,
/// each with slots 0..p. For i = n the stream holds the single all-ones
/// string at position 1. Lazy; the stream has r_n(i) elements.
class PlacementRange {
 public:
  PlacementRange(std::uint32_t n, std::uint32_t run_length);

  class iterator {
   public:
    using value_type = Placement;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    iterator(std::uint32_t n, std::uint32_t run_length, bool at_end);

    Placement operator*() const;
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.done_ == b.done_ && (a.done_ || (a.mask_ == b.mask_ && a.slot_ == b.slot_));
    }

   private:
    void load_parts();

    std::uint32_t n_ = 0;
    std::uint32_t i_ = 0;
    std::uint64_t mask_ = 0;
    std::uint64_t mask_end_ = 0;
    std::uint32_t slot_ = 0;
    std::vector<std::uint32_t> parts_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_, i_, false); }
  iterator end() const { return iterator(n_, i_, true); }

 private:
  std::uint32_t n_;
  std::uint32_t i_;
};

PlacementRange placements(std::uint32_t n, std::uint32_t run_length);

/// Total number of parts across all compositions of n (n <= 24); counted from
/// the composition stream, independently of any closed form.
BigCount count_parts_in_compositions(std::uint32_t n);

/// Number of parts equal to v across all compositions of n (n <= 24).
BigCount count_parts_equal(std::uint32_t n, std::uint32_t v);

}  // namespace runspec
