#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "zsum/exact.hpp"

namespace zsum {

// Element values are capped so that negation and the counting engines'
// partial-sum arithmetic stay inside int64.
inline constexpr std::int64_t kMaxAbsValue = 1'000'000'000'000'000;

struct SupportEntry {
  std::int64_t value = 0;
  std::int64_t mult = 0;
  friend auto operator<=>(const SupportEntry&, const SupportEntry&) = default;
};

// Multiset of nonzero integers as (value, multiplicity) pairs with strictly
// increasing values. Downstream counters treat the n copies as labeled
// positions: a multiset stands for an n-set of distinct reals sharing these
// images under a core homomorphism, so subsets are counted with
// multiplicity and totals come out to C(n,r).
class IntegerMultiset {
 public:
  IntegerMultiset() = default;

  // Rejects zeros (message names the 1-based position) and values beyond
  // kMaxAbsValue; the multiset must be nonempty.
  static IntegerMultiset from_elements(std::span<const std::int64_t> elements);

  // Sorts and merges duplicate values; every multiplicity must be positive.
  static IntegerMultiset from_support(std::vector<SupportEntry> support);

  const std::vector<SupportEntry>& support() const { return support_; }
  std::int64_t size() const { return n_; }
  std::vector<std::int64_t> elements() const;  // expanded, ascending
  std::int64_t min_value() const { return support_.front().value; }
  std::int64_t max_value() const { return support_.back().value; }
  Int sum() const;

  friend bool operator==(const IntegerMultiset&, const IntegerMultiset&) = default;
  friend auto operator<=>(const IntegerMultiset& a, const IntegerMultiset& b) {
    return a.support_ <=> b.support_;
  }

 private:
  std::vector<SupportEntry> support_;
  std::int64_t n_ = 0;
};

// Ordered sequence of nonzero integers; position order is meaningful.
class IntSequence {
 public:
  IntSequence() = default;
  explicit IntSequence(std::vector<std::int64_t> values);  // rejects zeros

  const std::vector<std::int64_t>& values() const { return values_; }
  std::int64_t size() const { return static_cast<std::int64_t>(values_.size()); }

  friend bool operator==(const IntSequence&, const IntSequence&) = default;

 private:
  std::vector<std::int64_t> values_;
};

// (#positive) - (#negative); the grading of the subset poset.
std::int64_t signed_size(std::span<const std::int64_t> subset);

}  // namespace zsum
