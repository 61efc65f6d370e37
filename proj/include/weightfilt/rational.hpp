#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

#include "weightfilt/errors.hpp"

namespace wfl {

// Exact arithmetic everywhere: all coefficients live in Q. GMP keeps values
// reduced (gcd(|num|, den) = 1, den > 0) through every operation.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Serialized form is "a/b", or just "a" when b = 1.
std::string rational_to_string(const Rational& q);

// Parses "a/b" or "a". The pair constructor canonicalizes, so "4/6" comes
// back as 2/3. Rejects zero denominators and garbage.
Rational rational_from_string(const std::string& s);

}  // namespace wfl
