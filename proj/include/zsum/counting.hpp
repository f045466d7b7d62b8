#pragma once

#include <cstdint>
#include <map>

#include "zsum/exact.hpp"
#include "zsum/multiset.hpp"

namespace zsum {

// Counts of labeled r-subsets keyed by their element sum. Holds exactly the
// targets with a nonzero count; the counts add up to C(n,r).
struct SumSpectrum {
  std::int64_t r = 0;
  std::map<std::int64_t, Count> entries;

  Count at(std::int64_t target) const;  // 0 when absent
  Count total() const;
};

// Exhaustive combination walk; the oracle for the DP. n <= 25 (SizeLimit).
Count count_bruteforce(const IntegerMultiset& m, std::int64_t r, std::int64_t target);

// Labeled r-subsets of m with the given sum, by dynamic programming over the
// support with transition weights C(mult, c). Exact for any n: a dense
// uint64 table is used when every intermediate count provably fits (n <= 62)
// and the sum range is small, with an unbounded-integer path otherwise.
Count count_dp(const IntegerMultiset& m, std::int64_t r, std::int64_t target);

SumSpectrum spectrum(const IntegerMultiset& m, std::int64_t r);

// Labeled subsets of every size with sum zero; the empty subset counts
// unless include_empty is false.
Count count_all_sizes_zero(const IntegerMultiset& m, bool include_empty);

// Nonempty index runs values[i..j] with zero sum, via prefix sums (a zero
// run is a pair of equal prefix sums).
Count count_intervals_zero(const IntSequence& s);

// For every start s, among the running sums values[s] + ... + values[k]
// at most floor(len/2) may vanish, len = n-s+1: a zero sum cannot follow a
// zero sum immediately and the first term never vanishes. Returns false
// only on a counterexample to that bound.
bool sum_chain_bound_check(const IntSequence& s);

struct ChainReport {
  std::uint64_t trials = 0;
  Count violations = 0;
  std::int64_t chain_length = 0;  // subsets per maximal chain; n+1 by construction
};

// Samples random maximal chains through the signed-size poset: start from
// the set of all negative elements, then walk a uniformly random permutation
// of the n labeled elements, adding each positive and removing each negative
// one. Verifies that the running sum strictly increases and that at most one
// chain member sums to zero.
ChainReport sample_chain_check(const IntegerMultiset& m, std::uint64_t trials, std::uint64_t seed);

// All n! chains; n <= 8 (SizeLimit).
ChainReport exhaustive_chain_check(const IntegerMultiset& m);

}  // namespace zsum
