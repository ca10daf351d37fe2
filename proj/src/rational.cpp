#include "wfuse/rational.h"

#include <cmath>
#include <stdexcept>

namespace wfuse {

Rational ratio(std::int64_t num, std::int64_t den) {
  return ratio(BigInt(std::to_string(num)), BigInt(std::to_string(den)));
}

Rational ratio(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational pow2(std::int64_t e) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? ratio(BigInt(1), p) : Rational(p);
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string numerator_string(const Rational& q) { return q.get_num().get_str(); }

std::string denominator_string(const Rational& q) { return q.get_den().get_str(); }

double to_double(const Rational& q) {
  if (q == 0) {
    return 0.0;
  }
  // Scale so the integer quotient carries 64 significant bits plus a sticky
  // bit, then let the BigInt -> double conversion round once.
  const BigInt& num = q.get_num();
  const BigInt& den = q.get_den();
  const long shift =
      64 - static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) +
      static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  BigInt scaled = abs(num);
  if (shift > 0) {
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<unsigned long>(shift));
  }
  BigInt scaled_den = den;
  if (shift < 0) {
    mpz_mul_2exp(scaled_den.get_mpz_t(), scaled_den.get_mpz_t(),
                 static_cast<unsigned long>(-shift));
  }
  BigInt quot, rem;
  mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(), scaled_den.get_mpz_t());
  // quot has 64 or 65 bits; fold the remainder into a sticky low bit so the
  // final rounding to 53 bits is correct.
  quot <<= 1;
  if (rem != 0) {
    quot += 1;
  }
  // quot now has at most 66 bits; convert exactly by splitting into halves.
  BigInt hi = quot >> 33;
  BigInt lo = quot - (hi << 33);
  // hi * 2^33 + lo with lo < 2^33: round-to-nearest happens in the single
  // addition below because hi*2^33 is exact (hi < 2^33).
  const double value = std::ldexp(std::ldexp(hi.get_d(), 33) + lo.get_d(), -(shift + 1));
  return q < 0 ? -value : value;
}

}  // namespace wfuse
