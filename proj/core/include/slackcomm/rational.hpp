#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace slackcomm {

/// Exact rational scalar used for every matrix entry, probability and leaf value.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Canonical text form: "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator. The result is always canonical.
Rational parse_rational(std::string_view text);

/// ceil(log2(k)) for k >= 1; 0 for k <= 1.
std::size_t ceil_log2(std::size_t k);

}  // namespace slackcomm
