#include "zsum/counting.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "zsum/errors.hpp"

namespace zsum {

namespace {

// Every count in the size/sum DP is a partial subset count, hence bounded by
// C(n, floor(n/2)) <= 2^n. With n <= 62 all intermediate sums and products
// stay below 2^63, so plain uint64 arithmetic is exact.
constexpr std::int64_t kFastCountMaxN = 62;
constexpr std::int64_t kDenseCellCap = 1LL << 25;

void check_r(const IntegerMultiset& m, std::int64_t r) {
  if (r < 0 || r > m.size())
    throw BadArgs("subset size " + std::to_string(r) + " outside [0, " + std::to_string(m.size()) + "]");
}

// Sum range of all subsets of size <= r; zero is always included (empty
// subset). Throws when it does not fit the int64 spectrum keys.
struct SumRange {
  std::int64_t lo = 0, hi = 0;
  std::int64_t width() const { return hi - lo + 1; }
};

SumRange subset_sum_range(const IntegerMultiset& m, std::int64_t r) {
  __int128 lo = 0, hi = 0;
  std::int64_t remaining_neg = r, remaining_pos = r;
  for (const auto& e : m.support()) {
    if (e.value < 0) {
      const std::int64_t take = std::min(e.mult, remaining_neg);
      lo += static_cast<__int128>(e.value) * take;
      remaining_neg -= take;
    }
  }
  for (auto it = m.support().rbegin(); it != m.support().rend(); ++it) {
    if (it->value > 0) {
      const std::int64_t take = std::min(it->mult, remaining_pos);
      hi += static_cast<__int128>(it->value) * take;
      remaining_pos -= take;
    }
  }
  constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max() / 2;
  if (lo < -kMax || hi > kMax) throw SizeLimit("subset sums exceed the 64-bit target range");
  return {static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)};
}

std::vector<std::uint64_t> pascal_row_u64(std::int64_t m) {
  std::vector<std::uint64_t> row(static_cast<std::size_t>(m) + 1, 0);
  row[0] = 1;
  for (std::int64_t i = 1; i <= m; ++i)
    for (std::int64_t c = i; c >= 1; --c) row[c] += row[c - 1];
  return row;
}

// ways[j][s - lo] = number of labeled j-subsets of the processed support
// prefix with element sum s.
std::vector<std::vector<std::uint64_t>> dense_layers(const IntegerMultiset& m, std::int64_t r,
                                                     const SumRange& range) {
  const std::int64_t width = range.width();
  std::vector<std::vector<std::uint64_t>> ways(
      static_cast<std::size_t>(r) + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(width), 0));
  ways[0][static_cast<std::size_t>(-range.lo)] = 1;
  std::int64_t processed = 0;
  for (const auto& e : m.support()) {
    const auto binom = pascal_row_u64(std::min(e.mult, r));
    const std::int64_t top = std::min(processed, r);
    for (std::int64_t j = top; j >= 0; --j) {
      const auto& src = ways[static_cast<std::size_t>(j)];
      const std::int64_t cmax = std::min(e.mult, r - j);
      for (std::int64_t s = 0; s < width; ++s) {
        const std::uint64_t w = src[static_cast<std::size_t>(s)];
        if (w == 0) continue;
        for (std::int64_t c = 1; c <= cmax; ++c)
          ways[static_cast<std::size_t>(j + c)][static_cast<std::size_t>(s + c * e.value)] +=
              w * binom[static_cast<std::size_t>(c)];
      }
    }
    processed += e.mult;
  }
  return ways;
}

std::vector<std::map<std::int64_t, Count>> map_layers(const IntegerMultiset& m, std::int64_t r) {
  std::vector<std::map<std::int64_t, Count>> ways(static_cast<std::size_t>(r) + 1);
  ways[0][0] = 1;
  std::int64_t processed = 0;
  for (const auto& e : m.support()) {
    std::vector<Count> binom(static_cast<std::size_t>(std::min(e.mult, r)) + 1);
    for (std::size_t c = 0; c < binom.size(); ++c)
      binom[c] = binomial(static_cast<unsigned long>(e.mult), static_cast<long>(c));
    const std::int64_t top = std::min(processed, r);
    for (std::int64_t j = top; j >= 0; --j) {
      const std::int64_t cmax = std::min(e.mult, r - j);
      for (const auto& [s, w] : ways[static_cast<std::size_t>(j)])
        for (std::int64_t c = 1; c <= cmax; ++c)
          ways[static_cast<std::size_t>(j + c)][s + c * e.value] += w * binom[static_cast<std::size_t>(c)];
    }
    processed += e.mult;
  }
  return ways;
}

bool dense_feasible(const IntegerMultiset& m, std::int64_t r, const SumRange& range) {
  if (m.size() > kFastCountMaxN) return false;
  return (static_cast<__int128>(r) + 1) * range.width() <= kDenseCellCap;
}

}  // namespace

Count SumSpectrum::at(std::int64_t target) const {
  const auto it = entries.find(target);
  return it == entries.end() ? Count(0) : it->second;
}

Count SumSpectrum::total() const {
  Count t = 0;
  for (const auto& [s, c] : entries) t += c;
  return t;
}

SumSpectrum spectrum(const IntegerMultiset& m, std::int64_t r) {
  check_r(m, r);
  SumSpectrum out;
  out.r = r;
  const SumRange range = subset_sum_range(m, r);
  if (dense_feasible(m, r, range)) {
    const auto ways = dense_layers(m, r, range);
    const auto& last = ways[static_cast<std::size_t>(r)];
    for (std::int64_t s = 0; s < range.width(); ++s)
      if (last[static_cast<std::size_t>(s)] != 0)
        out.entries.emplace(range.lo + s, Count(static_cast<unsigned long>(last[static_cast<std::size_t>(s)])));
  } else {
    auto ways = map_layers(m, r);
    out.entries = std::move(ways[static_cast<std::size_t>(r)]);
  }
  return out;
}

Count count_dp(const IntegerMultiset& m, std::int64_t r, std::int64_t target) {
  return spectrum(m, r).at(target);
}

Count count_bruteforce(const IntegerMultiset& m, std::int64_t r, std::int64_t target) {
  check_r(m, r);
  if (m.size() > 25) throw SizeLimit("brute-force counting requires n <= 25");
  const auto elems = m.elements();
  const std::int64_t n = m.size();
  Count hits = 0;
  // Walk all C(n,r) index combinations with an incremental sum.
  std::vector<std::int64_t> idx(static_cast<std::size_t>(r));
  std::iota(idx.begin(), idx.end(), 0);
  auto sum_of = [&]() {
    std::int64_t s = 0;
    for (std::int64_t i : idx) s += elems[static_cast<std::size_t>(i)];
    return s;
  };
  if (r == 0) return target == 0 ? Count(1) : Count(0);
  while (true) {
    if (sum_of() == target) ++hits;
    std::int64_t k = r - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == n - r + k) --k;
    if (k < 0) break;
    ++idx[static_cast<std::size_t>(k)];
    for (std::int64_t i = k + 1; i < r; ++i)
      idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
  return hits;
}

Count count_all_sizes_zero(const IntegerMultiset& m, bool include_empty) {
  // One-dimensional subset-sum DP over all sizes at once.
  __int128 lo128 = 0, hi128 = 0;
  for (const auto& e : m.support()) {
    if (e.value < 0)
      lo128 += static_cast<__int128>(e.value) * e.mult;
    else
      hi128 += static_cast<__int128>(e.value) * e.mult;
  }
  constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max() / 2;
  if (lo128 < -kMax || hi128 > kMax) throw SizeLimit("subset sums exceed the 64-bit target range");
  const std::int64_t lo = static_cast<std::int64_t>(lo128);
  const std::int64_t width = static_cast<std::int64_t>(hi128) - lo + 1;

  Count zero_count = 0;
  if (m.size() <= kFastCountMaxN && width <= kDenseCellCap) {
    std::vector<std::uint64_t> ways(static_cast<std::size_t>(width), 0);
    ways[static_cast<std::size_t>(-lo)] = 1;
    for (const auto& e : m.support()) {
      const auto binom = pascal_row_u64(e.mult);
      // c >= 1 shifts by c*value; iterate against the shift direction so a
      // cell is read before it is written.
      if (e.value > 0) {
        for (std::int64_t s = width - 1; s >= 0; --s) {
          const std::uint64_t w = ways[static_cast<std::size_t>(s)];
          if (w == 0) continue;
          for (std::int64_t c = 1; c <= e.mult; ++c)
            ways[static_cast<std::size_t>(s + c * e.value)] += w * binom[static_cast<std::size_t>(c)];
        }
      } else {
        for (std::int64_t s = 0; s < width; ++s) {
          const std::uint64_t w = ways[static_cast<std::size_t>(s)];
          if (w == 0) continue;
          for (std::int64_t c = 1; c <= e.mult; ++c)
            ways[static_cast<std::size_t>(s + c * e.value)] += w * binom[static_cast<std::size_t>(c)];
        }
      }
    }
    zero_count = Count(static_cast<unsigned long>(ways[static_cast<std::size_t>(-lo)]));
  } else {
    std::map<std::int64_t, Count> ways;
    ways[0] = 1;
    for (const auto& e : m.support()) {
      std::vector<Count> binom(static_cast<std::size_t>(e.mult) + 1);
      for (std::size_t c = 0; c < binom.size(); ++c)
        binom[c] = binomial(static_cast<unsigned long>(e.mult), static_cast<long>(c));
      std::map<std::int64_t, Count> next = ways;
      for (const auto& [s, w] : ways)
        for (std::int64_t c = 1; c <= e.mult; ++c) next[s + c * e.value] += w * binom[static_cast<std::size_t>(c)];
      ways = std::move(next);
    }
    zero_count = ways[0];
  }
  if (!include_empty) zero_count -= 1;  // the empty subset always sums to zero
  return zero_count;
}

Count count_intervals_zero(const IntSequence& s) {
  std::map<std::int64_t, std::int64_t> seen;  // prefix sum -> occurrences
  std::int64_t prefix = 0;
  seen[0] = 1;
  for (std::int64_t v : s.values()) {
    if (__builtin_add_overflow(prefix, v, &prefix)) throw SizeLimit("prefix sums exceed int64");
    ++seen[prefix];
  }
  Count runs = 0;
  for (const auto& [p, c] : seen) runs += Count(c) * (c - 1) / 2;
  return runs;
}

bool sum_chain_bound_check(const IntSequence& s) {
  const auto& v = s.values();
  const std::int64_t n = s.size();
  for (std::int64_t start = 0; start < n; ++start) {
    std::int64_t sum = 0, zeros = 0;
    for (std::int64_t k = start; k < n; ++k) {
      if (__builtin_add_overflow(sum, v[static_cast<std::size_t>(k)], &sum))
        throw SizeLimit("prefix sums exceed int64");
      if (sum == 0) ++zeros;
    }
    if (zeros > (n - start) / 2) return false;
  }
  return true;
}

namespace {

// Walks one maximal chain given a permutation of the labeled elements and
// checks strict monotonicity plus the at-most-one-zero-member property.
bool chain_ok(const std::vector<std::int64_t>& elems, const std::vector<std::int32_t>& perm,
              const Int& negative_sum, std::int64_t* length_out) {
  Int sum = negative_sum;
  std::int64_t zeros = (sum == 0) ? 1 : 0;
  std::int64_t members = 1;
  for (std::int32_t idx : perm) {
    const std::int64_t v = elems[static_cast<std::size_t>(idx)];
    // Adding a positive element raises the sum by v; dropping a negative one
    // raises it by -v.
    const Int next = sum + (v > 0 ? v : -v);
    if (!(next > sum)) return false;
    sum = next;
    if (sum == 0) ++zeros;
    ++members;
  }
  if (length_out) *length_out = members;
  return zeros <= 1;
}

Int negative_part_sum(const std::vector<std::int64_t>& elems) {
  Int s = 0;
  for (std::int64_t v : elems)
    if (v < 0) s += v;
  return s;
}

}  // namespace

ChainReport sample_chain_check(const IntegerMultiset& m, std::uint64_t trials, std::uint64_t seed) {
  const auto elems = m.elements();
  const Int neg = negative_part_sum(elems);
  std::mt19937_64 rng(seed);
  std::vector<std::int32_t> perm(elems.size());
  std::iota(perm.begin(), perm.end(), 0);
  ChainReport report;
  report.trials = trials;
  report.chain_length = m.size() + 1;
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::shuffle(perm.begin(), perm.end(), rng);
    std::int64_t len = 0;
    if (!chain_ok(elems, perm, neg, &len) || len != m.size() + 1) report.violations += 1;
  }
  return report;
}

ChainReport exhaustive_chain_check(const IntegerMultiset& m) {
  if (m.size() > 8) throw SizeLimit("exhaustive chain verification requires n <= 8");
  const auto elems = m.elements();
  const Int neg = negative_part_sum(elems);
  std::vector<std::int32_t> perm(elems.size());
  std::iota(perm.begin(), perm.end(), 0);
  ChainReport report;
  report.chain_length = m.size() + 1;
  do {
    ++report.trials;
    std::int64_t len = 0;
    if (!chain_ok(elems, perm, neg, &len) || len != m.size() + 1) report.violations += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return report;
}

}  // namespace zsum
