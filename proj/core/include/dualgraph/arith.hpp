#pragma once

#include <cstdint>

#include <gmpxx.h>

#include "dualgraph/errors.hpp"

namespace dualgraph {

// Coefficients are checked 64-bit integers; computations that can genuinely
// grow (elimination, canonical cycles, search bounds) run on GMP rationals.
using Coeff = std::int64_t;
using Rational = mpq_class;
using BigInt = mpz_class;

inline Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("64-bit overflow in addition");
  return r;
}

inline Coeff checked_sub(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("64-bit overflow in subtraction");
  return r;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("64-bit overflow in multiplication");
  return r;
}

inline Coeff checked_neg(Coeff a) { return checked_sub(0, a); }

// a += b * c without intermediate overflow going unnoticed.
inline void checked_add_mul(Coeff& a, Coeff b, Coeff c) { a = checked_add(a, checked_mul(b, c)); }

inline bool is_integral(const Rational& q) { return mpz_cmp_ui(q.get_den().get_mpz_t(), 1) == 0; }

inline Coeff to_coeff(const BigInt& z) {
  if (!z.fits_slong_p()) throw OverflowError("value does not fit in 64 bits");
  return static_cast<Coeff>(z.get_si());
}

// floor(p/q) for exact rationals.
inline BigInt rational_floor(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

inline BigInt rational_ceil(const Rational& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

}  // namespace dualgraph
