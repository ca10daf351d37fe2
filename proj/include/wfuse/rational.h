#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace wfuse {

// Exact rational backed by GMP. mpq_class keeps values canonical as long as
// every construction from a numerator/denominator pair goes through ratio().
using Rational = mpq_class;
using BigInt = mpz_class;

Rational ratio(std::int64_t num, std::int64_t den);
Rational ratio(const BigInt& num, const BigInt& den);

// 2^e for any signed exponent.
Rational pow2(std::int64_t e);

std::string to_string(const Rational& q);   // "num/den", or "num" when den == 1
std::string numerator_string(const Rational& q);
std::string denominator_string(const Rational& q);

// Nearest double (ties to even); mpq_get_d truncates, which is not what a
// display column should show.
double to_double(const Rational& q);

}  // namespace wfuse
