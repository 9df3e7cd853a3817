#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace relpoly {

using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "p/q" and finite decimals such as "-1.25". The result is
// canonicalized.
Rational parse_rational(std::string_view text);

// Canonical "p" or "p/q".
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);
Integer floor(const Rational& q);
Integer ceil(const Rational& q);

// Throws InvalidArgument if the value does not fit.
std::int64_t to_int64(const Integer& z);
std::int64_t to_int64_exact(const Rational& q);

}  // namespace relpoly
