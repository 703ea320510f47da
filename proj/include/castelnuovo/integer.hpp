#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace castelnuovo {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

inline Integer binomial(long top, unsigned long bottom) {
  Integer r;
  if (top < 0) {
    // Only nonnegative tops occur in Ehrhart evaluations; treat the rest as 0.
    return Integer(0);
  }
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top), bottom);
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline bool fits_int64(const Integer& v) { return mpz_fits_slong_p(v.get_mpz_t()) != 0; }

inline std::size_t hash_integer(const Integer& v) {
  const auto low = static_cast<std::size_t>(mpz_getlimbn(v.get_mpz_t(), 0));
  return low ^ (static_cast<std::size_t>(mpz_sgn(v.get_mpz_t()) + 1) * 0x9e3779b97f4a7c15ULL) ^
         static_cast<std::size_t>(mpz_size(v.get_mpz_t()));
}

using RationalVector = std::vector<Rational>;

}  // namespace castelnuovo
