#include "padichg/modring.hpp"

#include "padichg/errors.hpp"

namespace padichg {

bool OpsU64::modulus_fits(long p, int w) {
  unsigned __int128 m = 1;
  const unsigned __int128 cap = static_cast<unsigned __int128>(1) << 62;
  for (int k = 0; k < w; ++k) {
    m *= static_cast<unsigned __int128>(p);
    if (m >= cap) return false;
  }
  return true;
}

OpsU64::OpsU64(long p_, int w_) : p_long(p_), p(static_cast<std::uint64_t>(p_)), w(w_) {
  if (!modulus_fits(p_, w_)) throw internal_error("OpsU64: modulus does not fit");
  ppow.resize(static_cast<std::size_t>(w) + 1);
  ppow[0] = 1;
  for (int k = 1; k <= w; ++k) ppow[static_cast<std::size_t>(k)] = ppow[static_cast<std::size_t>(k) - 1] * p;
  mod = ppow[static_cast<std::size_t>(w)];
}

OpsU64::elt OpsU64::inv(elt a) const {
  std::int64_t t = 0, newt = 1;
  std::int64_t r = static_cast<std::int64_t>(mod), newr = static_cast<std::int64_t>(a % mod);
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw nonunit_error("OpsU64::inv: not invertible");
  if (t < 0) t += static_cast<std::int64_t>(mod);
  return static_cast<elt>(t);
}

OpsU64::elt OpsU64::from_mpz(const mpz_class& z) const {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), mpz_class(static_cast<unsigned long>(mod)).get_mpz_t());
  return static_cast<elt>(r.get_ui());
}

OpsU64::elt OpsU64::from_rational(const Rational& q) const {
  elt num = from_mpz(q.get_num());
  elt den = from_mpz(q.get_den());
  return mul(num, inv(den));
}

OpsMpz::OpsMpz(long p_, int w_) : p_long(p_), p(p_), w(w_) {
  ppow.resize(static_cast<std::size_t>(w) + 1);
  ppow[0] = 1;
  for (int k = 1; k <= w; ++k) ppow[static_cast<std::size_t>(k)] = ppow[static_cast<std::size_t>(k) - 1] * p;
  mod = ppow[static_cast<std::size_t>(w)];
}

OpsMpz::elt OpsMpz::from_rational(const Rational& q) const {
  elt num = from_mpz(q.get_num());
  elt den = from_mpz(q.get_den());
  return mul(num, inv(den));
}

}  // namespace padichg
