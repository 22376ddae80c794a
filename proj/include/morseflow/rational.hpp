#pragma once

// Exact rational arithmetic. GMP's mpq_class already maintains the canonical
// form we need (gcd(num,den)=1, den>0), so Rational is an alias and the helpers
// below add the domain bits: safe construction, string parsing for the JSON
// interfaces, powers, and an overflow-proof natural log for h computations.

#include <gmpxx.h>

#include <cmath>
#include <string>

#include "morseflow/errors.hpp"

namespace morseflow {

using Rational = mpq_class;

inline Rational make_rational(long num, long den) {
  if (den == 0) throw InputError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses decimal integer strings, as used by the polynomial/census JSON dumps.
inline Rational rational_from_strings(const std::string& num, const std::string& den) {
  mpz_class n, d;
  if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0)
    throw InputError("malformed rational string '" + num + "/" + den + "'");
  return make_rational(n, d);
}

inline Rational rational_pow(const Rational& base, unsigned long e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
  // base was canonical, so num^e / den^e already is.
  return r;
}

// ln(q) for q > 0, exact to double precision even when num/den overflow double.
// Splits each integer as m*2^e with m in [0.5, 1): ln(q) = ln(mn/md) + (en-ed)*ln 2.
inline double rational_log(const Rational& q) {
  if (sgn(q) <= 0) throw InputError("log of a non-positive rational");
  signed long en = 0, ed = 0;
  double mn = mpz_get_d_2exp(&en, q.get_num().get_mpz_t());
  double md = mpz_get_d_2exp(&ed, q.get_den().get_mpz_t());
  return std::log(mn) - std::log(md) +
         (static_cast<double>(en) - static_cast<double>(ed)) * std::log(2.0);
}

inline double rational_to_double(const Rational& q) { return q.get_d(); }

// "3/4", or "3" for integers (mpq_class prints den-1 values without the slash).
inline std::string rational_str(const Rational& q) { return q.get_str(); }

}  // namespace morseflow
