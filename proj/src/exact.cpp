#include "zsum/exact.hpp"

#include <cctype>
#include <utility>

#include "zsum/errors.hpp"

namespace zsum {

Count binomial(unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return Count(0);
  Count out;
  mpz_bin_uiui(out.get_mpz_t(), n, static_cast<unsigned long>(k));
  return out;
}

Rational make_rational(Int num, Int den) {
  if (den == 0) throw BadArgs("rational with zero denominator");
  Rational q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

namespace {

Int parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw BadArgs("empty integer literal");
  try {
    return Int(s);
  } catch (const std::invalid_argument&) {
    throw BadArgs("not an integer: \"" + s + "\"");
  }
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return make_rational(parse_integer(text), 1);
  return make_rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::string to_decimal(const Int& v) { return v.get_str(); }

std::string to_decimal(const Rational& q) { return q.get_str(); }

}  // namespace zsum
