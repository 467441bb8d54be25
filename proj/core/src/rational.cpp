#include "slackcomm/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace slackcomm {

std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    i = 1;
  }
  if (i == text.size()) {
    throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  }
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
  }
  std::string digits(text);
  if (digits[0] == '+') {
    digits.erase(0, 1);
  }
  return Integer(digits);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  const Integer num = parse_integer(text.substr(0, slash), text);
  const Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::size_t ceil_log2(std::size_t k) {
  std::size_t bits = 0;
  std::size_t reach = 1;
  while (reach < k) {
    reach <<= 1;
    ++bits;
  }
  return bits;
}

}  // namespace slackcomm
