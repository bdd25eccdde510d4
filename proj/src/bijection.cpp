#include "runspec/bijection.hpp"

#include <bit>
#include <stdexcept>

namespace runspec {

namespace {

// Decodes a bar mask into parts. A sentinel bar after position n makes every
// part, including the last, end at a set bit.
std::vector<std::uint32_t> parts_from_mask(std::uint32_t n, std::uint64_t mask) {
  std::vector<std::uint32_t> parts;
  parts.reserve(static_cast<std::size_t>(std::popcount(mask)) + 1);
  std::uint64_t bars = mask | (std::uint64_t{1} << (n - 1));
  std::uint32_t prev = 0;
  while (bars != 0) {
    std::uint32_t boundary = static_cast<std::uint32_t>(std::countr_zero(bars)) + 1;
    parts.push_back(boundary - prev);
    prev = boundary;
    bars &= bars - 1;
  }
  return parts;
}

void require_countable(const char* what, std::uint32_t n) {
  if (n < 1 || n > kMaxCompositionCountBits) {
    throw std::invalid_argument(std::string(what) + ": need 1 <= n <= 24");
  }
}

}  // namespace

Composition::Composition(std::vector<std::uint32_t> parts)
    : parts_(std::move(parts)) {
  for (std::uint32_t p : parts_) {
    if (p == 0) {
      throw std::invalid_argument("Composition: parts must be positive");
    }
    total_ += p;
  }
  if (total_ > kMaxCompositionTotal) {
    throw std::invalid_argument("Composition: total exceeds limit");
  }
}

std::string Composition::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k != 0) out += ',';
    out += std::to_string(parts_[k]);
  }
  out += ')';
  return out;
}

CompositionRange::CompositionRange(std::uint32_t n) : n_(n) {
  if (n < 1 || n > kMaxCompositionTotal) {
    throw std::invalid_argument("compositions: need 1 <= n <= 63");
  }
}

Composition CompositionRange::iterator::operator*() const {
  return Composition(parts_from_mask(n_, mask_));
}

CompositionRange compositions(std::uint32_t n) { return CompositionRange(n); }

std::pair<BitString, BitString> composition_to_alternating_pair(
    const Composition& c) {
  if (c.part_count() == 0) {
    throw std::invalid_argument(
        "composition_to_alternating_pair: empty composition");
  }
  BitString ones_first(c.total());
  BitString zeros_first(c.total());
  std::uint64_t cursor = 1;
  bool ones = true;
  for (std::uint32_t part : c.parts()) {
    for (std::uint32_t k = 0; k < part; ++k, ++cursor) {
      ones_first.set_bit(cursor, ones);
      zeros_first.set_bit(cursor, !ones);
    }
    ones = !ones;
  }
  return {ones_first, zeros_first};
}

RunPlacement::RunPlacement(Composition base, std::uint32_t slot,
                           std::uint32_t run_length)
    : base_(std::move(base)), slot_(slot), run_length_(run_length) {
  if (run_length_ == 0) {
    throw std::invalid_argument("RunPlacement: run length must be positive");
  }
  if (slot_ > base_.part_count()) {
    throw std::invalid_argument("RunPlacement: slot out of range");
  }
}

PlacedRun placement_to_string(const RunPlacement& placement, std::uint64_t n) {
  if (placement.base().total() + placement.run_length() != n) {
    throw std::invalid_argument(
        "placement_to_string: base total plus run length must equal n");
  }
  const auto& parts = placement.base().parts();
  const std::uint32_t slot = placement.slot();
  BitString s(n);
  std::uint64_t cursor = 1;
  auto emit = [&](std::uint32_t length, bool ones) {
    for (std::uint32_t k = 0; k < length; ++k, ++cursor) {
      if (ones) s.set_bit(cursor, true);
    }
  };
  // Parts left of the slot: the nearest one (distance 1) turns into zeros so
  // the inserted run stays maximal; symbols alternate moving outward.
  for (std::uint32_t j = 0; j < slot; ++j) {
    std::uint32_t distance = slot - j;
    emit(parts[j], distance % 2 == 0);
  }
  std::uint64_t position = cursor;
  emit(placement.run_length(), true);
  for (std::uint32_t j = slot; j < parts.size(); ++j) {
    std::uint32_t distance = j - slot + 1;
    emit(parts[j], distance % 2 == 0);
  }
  return PlacedRun{std::move(s), position};
}

PlacementRange::PlacementRange(std::uint32_t n, std::uint32_t run_length)
    : n_(n), i_(run_length) {
  if (n < 1 || n > kMaxPlacementBits) {
    throw std::invalid_argument("placements: need 1 <= n <= 24");
  }
  if (run_length < 1 || run_length > n) {
    throw std::invalid_argument("placements: need 1 <= run length <= n");
  }
}

PlacementRange::iterator::iterator(std::uint32_t n, std::uint32_t run_length,
                                   bool at_end)
    : n_(n), i_(run_length), done_(at_end) {
  if (done_) return;
  if (i_ == n_) {
    // Single element: the all-ones string, empty base.
    mask_end_ = 0;
    return;
  }
  mask_end_ = std::uint64_t{1} << (n_ - i_ - 1);
  load_parts();
}

void PlacementRange::iterator::load_parts() {
  parts_ = parts_from_mask(n_ - i_, mask_);
}

Placement PlacementRange::iterator::operator*() const {
  PlacedRun placed = placement_to_string(
      RunPlacement(Composition(parts_), slot_, i_), n_);
  return Placement{std::move(placed.string), placed.position, parts_, slot_};
}

PlacementRange::iterator& PlacementRange::iterator::operator++() {
  if (done_) return *this;
  if (i_ == n_) {
    done_ = true;
    return *this;
  }
  if (slot_ < parts_.size()) {
    ++slot_;
    return *this;
  }
  slot_ = 0;
  ++mask_;
  if (mask_ == mask_end_) {
    done_ = true;
  } else {
    load_parts();
  }
  return *this;
}

PlacementRange placements(std::uint32_t n, std::uint32_t run_length) {
  return PlacementRange(n, run_length);
}

BigCount count_parts_in_compositions(std::uint32_t n) {
  require_countable("count_parts_in_compositions", n);
  std::uint64_t total = 0;
  std::uint64_t masks = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    total += static_cast<std::uint64_t>(std::popcount(mask)) + 1;
  }
  return BigCount(static_cast<unsigned long>(total));
}

BigCount count_parts_equal(std::uint32_t n, std::uint32_t v) {
  require_countable("count_parts_equal", n);
  if (v < 1 || v > n) {
    throw std::invalid_argument("count_parts_equal: need 1 <= v <= n");
  }
  std::uint64_t total = 0;
  std::uint64_t masks = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    std::uint64_t bars = mask | (std::uint64_t{1} << (n - 1));
    std::uint32_t prev = 0;
    while (bars != 0) {
      std::uint32_t boundary =
          static_cast<std::uint32_t>(std::countr_zero(bars)) + 1;
      if (boundary - prev == v) ++total;
      prev = boundary;
      bars &= bars - 1;
    }
  }
  return BigCount(static_cast<unsigned long>(total));
}

}  // namespace runspec
