#include "zsum/multiset.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "zsum/errors.hpp"

namespace zsum {

namespace {

void check_value(std::int64_t v, const std::string& where) {
  if (v == 0) throw BadArgs(where + " is zero");
  if (v > kMaxAbsValue || v < -kMaxAbsValue) throw BadArgs(where + " exceeds the supported magnitude");
}

}  // namespace

IntegerMultiset IntegerMultiset::from_elements(std::span<const std::int64_t> elements) {
  if (elements.empty()) throw BadArgs("multiset is empty");
  std::vector<std::int64_t> sorted(elements.begin(), elements.end());
  for (std::size_t i = 0; i < elements.size(); ++i)
    check_value(elements[i], "element " + std::to_string(i + 1));
  std::sort(sorted.begin(), sorted.end());
  IntegerMultiset m;
  for (std::int64_t v : sorted) {
    if (!m.support_.empty() && m.support_.back().value == v)
      ++m.support_.back().mult;
    else
      m.support_.push_back({v, 1});
  }
  m.n_ = static_cast<std::int64_t>(elements.size());
  return m;
}

IntegerMultiset IntegerMultiset::from_support(std::vector<SupportEntry> support) {
  if (support.empty()) throw BadArgs("multiset is empty");
  std::sort(support.begin(), support.end());
  IntegerMultiset m;
  for (std::size_t i = 0; i < support.size(); ++i) {
    check_value(support[i].value, "support entry " + std::to_string(i + 1));
    if (support[i].mult <= 0)
      throw BadArgs("support entry " + std::to_string(i + 1) + " has nonpositive multiplicity");
    if (!m.support_.empty() && m.support_.back().value == support[i].value)
      m.support_.back().mult += support[i].mult;
    else
      m.support_.push_back(support[i]);
    m.n_ += support[i].mult;
  }
  return m;
}

std::vector<std::int64_t> IntegerMultiset::elements() const {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(n_));
  for (const auto& e : support_)
    out.insert(out.end(), static_cast<std::size_t>(e.mult), e.value);
  return out;
}

Int IntegerMultiset::sum() const {
  Int s = 0;
  for (const auto& e : support_) s += Int(e.value) * e.mult;
  return s;
}

IntSequence::IntSequence(std::vector<std::int64_t> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i)
    check_value(values_[i], "element " + std::to_string(i + 1));
}

std::int64_t signed_size(std::span<const std::int64_t> subset) {
  std::int64_t s = 0;
  for (std::int64_t v : subset) {
    if (v == 0) throw BadArgs("signed size of a subset containing zero");
    s += (v > 0) ? 1 : -1;
  }
  return s;
}

}  // namespace zsum
