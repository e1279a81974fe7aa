#pragma once

#include <vector>

#include "padichg/padic.hpp"

namespace padichg {

// ---- digits and the Dwork prime map ---------------------------------------
//
// Digits follow the convention  a = -[a]_0 - [a]_1 p - [a]_2 p^2 - ...  with
// [a]_n in {0..p-1}; the Dwork prime a' = (a + l)/p where l in {0..p-1} is
// the unique lift with a + l == 0 mod p.  Then [a']_n = [a]_{n+1}, so orbits
// of the prime map enumerate the digit string.

struct DworkOrbit {
  std::vector<Rational> values;  // values[0] = a, values[i] = a^(i)
  long preperiod = 0;
  long period = 0;
  // values.size() == preperiod + period; values[preperiod + period] would
  // equal values[preperiod] again
};

// reduce a rational with p-coprime denominator: val >= 0 always
PAdic reduce_rational(const Rational& q, long p, int prec);

long padic_digit(const Rational& a, long p, unsigned long n);
Rational dwork_prime(const Rational& a, long p);
DworkOrbit dwork_orbit(const Rational& a, long p, long max_steps = -1);
long dwork_orbit_default_budget(const Rational& a, long p);

// ---- Pochhammer symbols ----------------------------------------------------

// (a)_n = a (a+1) ... (a+n-1), exact and p-adic forms
Rational pochhammer_exact(const Rational& a, unsigned long n);
PAdic pochhammer(const Rational& a, unsigned long n, long p, int prec);

// {a}_n: the same product with the p-divisible factors skipped (always a unit)
Rational braces_pochhammer_exact(const Rational& a, unsigned long n, long p);
PAdic braces_pochhammer(const Rational& a, unsigned long n, long p, int prec);

// ---- digamma-type constant and the one-unit logarithm ----------------------

// psi~_p(z): the p-adic limit of sum_{1<=k<n, p !| k} 1/k as n -> z.
// Returned as the least non-negative residue mod p^m.  For odd p the residue
// is good to all m digits; for p = 2 one digit is lost (documented contract).
mpz_class psi_tilde(const Rational& z, long p, int m);

// Iwasawa logarithm of a 1-unit c (v_p(c-1) >= 1), residue mod p^m
mpz_class iwasawa_log_oneunit(const Rational& c, long p, int m);

}  // namespace padichg
