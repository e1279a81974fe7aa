#include "padichg/padic.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace padichg {

// ---- rational helpers ------------------------------------------------------

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpz_class pow_p(long p, long e) {
  if (e < 0) throw std::invalid_argument("pow_p: negative exponent");
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return r;
}

long valuation_z(const mpz_class& z, long p) {
  if (z == 0) throw std::invalid_argument("valuation of zero");
  mpz_class q;
  return static_cast<long>(
      mpz_remove(q.get_mpz_t(), z.get_mpz_t(), mpz_class(p).get_mpz_t()));
}

long valuation_q(const Rational& q, long p) {
  if (q == 0) throw std::invalid_argument("valuation of zero");
  return valuation_z(q.get_num(), p) - valuation_z(q.get_den(), p);
}

mpz_class mod_inverse(const mpz_class& z, const mpz_class& m) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), z.get_mpz_t(), m.get_mpz_t()) == 0)
    throw nonunit_error("mod_inverse: not invertible mod " + m.get_str());
  return r;
}

mpz_class rational_mod_pk(const Rational& q, long p, long k) {
  mpz_class pk = pow_p(p, k);
  if (!is_p_integral(q, p))
    throw nonunit_error("rational_mod_pk: denominator divisible by " + std::to_string(p));
  mpz_class r = q.get_num() % pk;
  if (r < 0) r += pk;
  if (q.get_den() != 1) r = (r * mod_inverse(q.get_den() % pk, pk)) % pk;
  return r;
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, b, m);
    b = mulmod_u64(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(long n) {
  if (n < 2) return false;
  for (long q : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
    if (n % q == 0) return n == q;
  }
  // deterministic Miller-Rabin for 64-bit inputs
  std::uint64_t d = static_cast<std::uint64_t>(n - 1);
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod_u64(a % n, d, static_cast<std::uint64_t>(n));
    if (x == 1 || x == static_cast<std::uint64_t>(n - 1)) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, static_cast<std::uint64_t>(n));
      if (x == static_cast<std::uint64_t>(n - 1)) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

long mult_order(long p, long modulus) {
  if (modulus <= 0) throw std::invalid_argument("mult_order: modulus must be positive");
  if (modulus == 1) return 1;
  long r = p % modulus;
  if (r < 0) r += modulus;
  if (std::gcd(r, modulus) != 1)
    throw std::invalid_argument("mult_order: arguments not coprime");
  long x = r % modulus, k = 1;
  while (x != 1) {
    x = static_cast<long>((static_cast<__int128>(x) * r) % modulus);
    ++k;
    if (k > modulus) throw internal_error("mult_order: did not cycle");
  }
  return k;
}

// ---- PAdic -----------------------------------------------------------------

PAdic PAdic::zero(long p) {
  PAdic x;
  x.p_ = p;
  x.zero_ = true;
  return x;
}

PAdic PAdic::one(long p, int prec) { return make(p, 0, 1, prec); }

PAdic PAdic::make(long p, long val, mpz_class unit, int prec) {
  if (prec < 1) throw std::invalid_argument("PAdic: prec must be >= 1");
  if (p < 2 || !is_prime(p)) throw std::invalid_argument("PAdic: p must be prime");
  mpz_class pk = pow_p(p, prec);
  unit %= pk;
  if (unit < 0) unit += pk;
  if (unit == 0) return zero(p);
  if (mpz_divisible_ui_p(unit.get_mpz_t(), static_cast<unsigned long>(p)))
    throw std::invalid_argument("PAdic: unit part divisible by p");
  PAdic x;
  x.p_ = p;
  x.zero_ = false;
  x.val_ = val;
  x.prec_ = prec;
  x.unit_ = std::move(unit);
  return x;
}

PAdic PAdic::from_rational(const Rational& q, long p, int prec) {
  if (q == 0) return zero(p);
  long vn = valuation_z(q.get_num(), p);
  long vd = valuation_z(q.get_den(), p);
  mpz_class num = q.get_num() / pow_p(p, vn);
  mpz_class den = q.get_den() / pow_p(p, vd);
  mpz_class pk = pow_p(p, prec);
  mpz_class u = num % pk;
  if (u < 0) u += pk;
  if (den != 1) u = (u * mod_inverse(den % pk, pk)) % pk;
  return make(p, vn - vd, u, prec);
}

long PAdic::valuation() const {
  if (zero_) throw value_undefined_error("valuation of exact zero");
  return val_;
}

const mpz_class& PAdic::unit() const {
  if (zero_) throw value_undefined_error("unit part of exact zero");
  return unit_;
}

void PAdic::check_compat(const PAdic& y) const {
  if (p_ != y.p_) throw std::invalid_argument("PAdic: mixed primes");
}

PAdic PAdic::operator-() const {
  if (zero_) return *this;
  mpz_class pk = pow_p(p_, prec_);
  return make(p_, val_, pk - unit_, prec_);
}

PAdic PAdic::inv() const {
  if (zero_) throw nonunit_error("PAdic: inverse of zero");
  mpz_class pk = pow_p(p_, prec_);
  return make(p_, -val_, mod_inverse(unit_, pk), prec_);
}

PAdic PAdic::div_pow_p(long k) const {
  if (zero_) return *this;
  PAdic x = *this;
  x.val_ -= k;
  return x;
}

PAdic PAdic::pow(unsigned long e) const {
  if (zero_) {
    if (e == 0) throw value_undefined_error("PAdic: 0^0");
    return *this;
  }
  mpz_class pk = pow_p(p_, prec_);
  mpz_class u;
  mpz_powm_ui(u.get_mpz_t(), unit_.get_mpz_t(), e, pk.get_mpz_t());
  return make(p_, val_ * static_cast<long>(e), u, prec_);
}

PAdic operator*(const PAdic& x, const PAdic& y) {
  x.check_compat(y);
  if (x.zero_ || y.zero_) return PAdic::zero(x.p_);
  int prec = std::min(x.prec_, y.prec_);
  mpz_class pk = pow_p(x.p_, prec);
  return PAdic::make(x.p_, x.val_ + y.val_, (x.unit_ * y.unit_) % pk, prec);
}

PAdic operator/(const PAdic& x, const PAdic& y) { return x * y.inv(); }

PAdic operator+(const PAdic& x, const PAdic& y) {
  x.check_compat(y);
  if (x.zero_) return y;
  if (y.zero_) return x;
  long v = std::min(x.val_, y.val_);
  // digits of the sum are known on the overlap window only
  long window = std::min(x.val_ + x.prec_, y.val_ + y.prec_) - v;
  if (window <= 0)
    throw precision_error("PAdic add: operands do not overlap at any known digit");
  mpz_class pk = pow_p(x.p_, window);
  mpz_class s = x.unit_ * pow_p(x.p_, x.val_ - v) + y.unit_ * pow_p(x.p_, y.val_ - v);
  s %= pk;
  if (s < 0) s += pk;
  if (s == 0) return PAdic::zero(x.p_);  // zero to the full known precision
  long e = valuation_z(s, x.p_);
  return PAdic::make(x.p_, v + e, s / pow_p(x.p_, e), static_cast<int>(window - e));
}

PAdic operator-(const PAdic& x, const PAdic& y) { return x + (-y); }

mpz_class PAdic::residue(long m) const {
  if (m < 0) throw std::invalid_argument("PAdic::residue: negative modulus exponent");
  if (zero_) return 0;
  if (val_ < 0) throw value_undefined_error("PAdic::residue: negative valuation");
  if (val_ >= m) return 0;
  if (prec_ < m - val_)
    throw precision_error("PAdic::residue: only " + std::to_string(val_ + prec_) +
                          " digits known, " + std::to_string(m) + " requested");
  return (unit_ * pow_p(p_, val_)) % pow_p(p_, m);
}

bool PAdic::same_value(const PAdic& y) const {
  check_compat(y);
  if (zero_ || y.zero_) {
    // exact zero matches anything that is zero to its own precision
    const PAdic& nz = zero_ ? y : *this;
    if (nz.zero_) return true;
    return false;
  }
  if (val_ != y.val_) return false;
  int prec = std::min(prec_, y.prec_);
  mpz_class pk = pow_p(p_, prec);
  return (unit_ - y.unit_) % pk == 0;
}

std::string PAdic::str() const {
  if (zero_) return "0";
  std::string s;
  if (val_ != 0) s += "p^" + std::to_string(val_) + "*";
  s += unit_.get_str();
  return s + " (mod p^" + std::to_string(val_ + prec_) + ")";
}

}  // namespace padichg
