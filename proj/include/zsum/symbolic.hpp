#pragma once

#include <cstdint>
#include <vector>

#include "zsum/exact.hpp"
#include "zsum/multiset.hpp"

namespace zsum {

// A real number as rational coordinates (q0, q1, ..., qd) over the formal
// basis {1, a1, ..., ad} of Q-linearly independent irrationals: the value is
// q0 + sum qi*ai. Rationality is exactly "qi = 0 for all i >= 1".
class SymbolicReal {
 public:
  explicit SymbolicReal(std::vector<Rational> coords);  // needs at least q0

  std::int64_t basis_dim() const { return static_cast<std::int64_t>(coords_.size()) - 1; }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& coord(std::int64_t i) const { return coords_[static_cast<std::size_t>(i)]; }

  friend bool operator==(const SymbolicReal& a, const SymbolicReal& b) { return a.coords_ == b.coords_; }
  friend SymbolicReal operator+(const SymbolicReal& a, const SymbolicReal& b);  // same basis_dim

 private:
  std::vector<Rational> coords_;
};

bool is_rational(const SymbolicReal& x);

// The non-constant coordinates (q1, ..., qd); zero exactly on rationals and
// Q-linear in its argument.
std::vector<Rational> core_phi(const SymbolicReal& x);

// A set of n pairwise distinct irrational numbers over one basis.
class SymbolicSet {
 public:
  SymbolicSet(std::int64_t basis_dim, std::vector<SymbolicReal> elements);

  std::int64_t basis_dim() const { return dim_; }
  std::int64_t size() const { return static_cast<std::int64_t>(elements_.size()); }
  const std::vector<SymbolicReal>& elements() const { return elements_; }

  friend bool operator==(const SymbolicSet&, const SymbolicSet&) = default;

 private:
  std::int64_t dim_ = 0;
  std::vector<SymbolicReal> elements_;
};

// Substitutes basis element a_dst := lambda * a_src, dropping coordinate dst:
// each element's q_src becomes q_src + lambda*q_dst; basis_dim decreases by
// one. Rational sums are preserved, so zero-sum counts never decrease.
// Throws BadLambda when an image element would be rational or two images
// would coincide (both happen for only finitely many lambda).
SymbolicSet psi_lambda(const SymbolicSet& s, const Rational& lambda, std::int64_t src, std::int64_t dst);

struct ReductionResult {
  std::vector<std::int64_t> values;  // one nonzero integer per input element, input order
  Rational scale;                    // values[i] * scale = the a1-coordinate of image i
  std::vector<Rational> lambdas;     // substitution constants, in application order
};

// Repeatedly merges the last basis coordinate into the first (lambda scan
// 1, -1, 2, -2, ... taking the first that is not BadLambda) until the set is
// one-dimensional, then clears denominators by their lcm. For every r, the
// number of zero-sum r-subsets of the output is >= the number of
// rational-sum r-subsets of the input.
ReductionResult reduce_to_multiset(const SymbolicSet& s);

// Exact number of r-subsets whose sum is rational, by exhaustive
// enumeration. n <= 25 (SizeLimit).
Count rational_sum_count(const SymbolicSet& s, std::int64_t r);

}  // namespace zsum
