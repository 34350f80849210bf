#include "core/rational.hpp"

#include <cctype>

#include "core/errors.hpp"

namespace esskel {

std::string to_fraction(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_signed_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw Error(ErrorCode::parse,
                "malformed rational \"" + std::string(whole) +
                    "\": expected \"p/q\" or an integer");
  }
  BigInt v{std::string(s)};
  return negative ? BigInt(-v) : v;
}

}  // namespace

Rational parse_fraction(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_signed_integer(text, text));
  }
  BigInt num = parse_signed_integer(text.substr(0, slash), text);
  std::string_view den_part = text.substr(slash + 1);
  if (!all_digits(den_part)) {
    throw Error(ErrorCode::parse,
                "malformed rational \"" + std::string(text) +
                    "\": denominator must be a positive integer");
  }
  BigInt den((std::string(den_part)));
  if (den == 0) {
    throw Error(ErrorCode::parse,
                "malformed rational \"" + std::string(text) + "\": zero denominator");
  }
  return Rational(num, den);
}

}  // namespace esskel
