#pragma once

#include <cstdint>
#include <vector>

#include "padichg/rational.hpp"

namespace padichg {

// Fixed-modulus arithmetic mod p^w.  Two interchangeable engines drive the
// coefficient streams: a u64 fast path (used whenever p^w and the parameter
// numerators fit comfortably) and an mpz fallback for large p/precision.
// `elt` is a reduced residue; `raw` is a plain integer used for the linearly
// growing Pochhammer factor numerators.

struct OpsU64 {
  using elt = std::uint64_t;
  using raw = std::int64_t;

  long p_long;
  std::uint64_t p;
  int w;
  std::uint64_t mod;
  std::vector<std::uint64_t> ppow;  // p^0..p^w

  OpsU64(long p_, int w_);
  static bool modulus_fits(long p, int w);

  elt add(elt a, elt b) const {
    elt s = a + b;
    return s >= mod ? s - mod : s;
  }
  elt sub(elt a, elt b) const { return a >= b ? a - b : a + mod - b; }
  elt mul(elt a, elt b) const {
    return static_cast<elt>((static_cast<unsigned __int128>(a) * b) % mod);
  }
  elt inv(elt a) const;
  elt from_mpz(const mpz_class& z) const;
  mpz_class to_mpz(elt a) const { return mpz_class(static_cast<unsigned long>(a)); }
  elt from_rational(const Rational& q) const;

  elt reduce_raw(raw x) const {
    std::int64_t r = x % static_cast<std::int64_t>(mod);
    if (r < 0) r += static_cast<std::int64_t>(mod);
    return static_cast<elt>(r);
  }
  int strip_raw(raw& x) const {  // remove all p factors from x != 0
    int k = 0;
    while (x % static_cast<raw>(p) == 0) {
      x /= static_cast<raw>(p);
      ++k;
    }
    return k;
  }
  bool divisible_pk(elt x, int k) const { return x % ppow[k] == 0; }
  elt div_pk(elt x, int k) const { return x / ppow[k]; }
  int val_of(elt x) const {  // valuation of a nonzero residue (< w meaningful)
    int k = 0;
    while (x % p == 0) {
      x /= p;
      ++k;
    }
    return k;
  }
};

struct OpsMpz {
  using elt = mpz_class;
  using raw = mpz_class;

  long p_long;
  mpz_class p;
  int w;
  mpz_class mod;
  std::vector<mpz_class> ppow;

  OpsMpz(long p_, int w_);

  elt add(const elt& a, const elt& b) const {
    elt s = a + b;
    if (s >= mod) s -= mod;
    return s;
  }
  elt sub(const elt& a, const elt& b) const {
    elt s = a - b;
    if (s < 0) s += mod;
    return s;
  }
  elt mul(const elt& a, const elt& b) const { return (a * b) % mod; }
  elt inv(const elt& a) const { return mod_inverse(a, mod); }
  elt from_mpz(const mpz_class& z) const {
    elt r = z % mod;
    if (r < 0) r += mod;
    return r;
  }
  mpz_class to_mpz(const elt& a) const { return a; }
  elt from_rational(const Rational& q) const;

  elt reduce_raw(const raw& x) const { return from_mpz(x); }
  int strip_raw(raw& x) const {
    return static_cast<int>(mpz_remove(x.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
  }
  bool divisible_pk(const elt& x, int k) const {
    return mpz_divisible_p(x.get_mpz_t(), ppow[k].get_mpz_t());
  }
  elt div_pk(const elt& x, int k) const { return x / ppow[k]; }
  int val_of(elt x) const {
    int k = 0;
    while (mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t())) {
      x /= p;
      ++k;
    }
    return k;
  }
};

}  // namespace padichg
