#pragma once

#include <gmpxx.h>

#include <string>

#include "padichg/errors.hpp"

namespace padichg {

// Exact rationals are GMP mpq_class throughout; mpq_class keeps fractions
// canonical (reduced, positive denominator), which is exactly the PRational
// contract.  p-integrality (denominator coprime to p) is checked at the
// operations that require it, not baked into the type.
using Rational = mpq_class;

Rational parse_rational(const std::string& text);
std::string rational_str(const Rational& q);

// mpq_class(num, den) does not canonicalize on its own; route literal
// fractions through this helper
inline Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

mpz_class pow_p(long p, long e);  // p^e as an exact integer, e >= 0

// p-adic valuation of a nonzero integer / rational
long valuation_z(const mpz_class& z, long p);
long valuation_q(const Rational& q, long p);

inline bool is_p_integral(const Rational& q, long p) {
  return !mpz_divisible_ui_p(q.get_den().get_mpz_t(), static_cast<unsigned long>(p));
}

// inverse of z modulo m (m > 1, gcd(z, m) = 1)
mpz_class mod_inverse(const mpz_class& z, const mpz_class& m);

// least non-negative residue of a p-integral rational modulo p^k
mpz_class rational_mod_pk(const Rational& q, long p, long k);

bool is_prime(long n);
long mult_order(long p, long modulus);  // multiplicative order of p mod `modulus`, gcd(p,modulus)=1

}  // namespace padichg
