#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace selberg {

/// Exact rational backed by GMP. Always kept canonical (mpq_class does this
/// after every arithmetic operation; parse() canonicalizes explicitly).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q". Throws Error{parse} on malformed input or q == 0.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is one, "p/q" otherwise.
std::string to_string(const Rational& value);

/// num / den in canonical form; throws Error{singular} when den == 0.
Rational ratio(const Integer& num, const Integer& den);
Rational ratio(long num, long den);

double to_double(const Rational& value);

/// Exact square root of a nonnegative rational if it is a perfect square.
bool exact_sqrt(const Rational& value, Rational& root);

}  // namespace selberg
